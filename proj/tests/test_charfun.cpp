#include "utq/charfun.hpp"

#include <doctest.h>

#include <set>

using namespace utq;

namespace {

Rational qpow(int q, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
    SUBCASE("p = 2: zeta = -1") {
        Cyclotomic z = Cyclotomic::zeta_pow(2, 1);
        CHECK(z.is_rational());
        CHECK(z.rational_value() == -1);
        CHECK((z * z).rational_value() == 1);
    }
    SUBCASE("p = 3: zeta^2 = -1 - zeta, norms") {
        Cyclotomic z = Cyclotomic::zeta_pow(3, 1);
        Cyclotomic z2 = z * z;
        CHECK(z2 == Cyclotomic::zeta_pow(3, 2));
        Cyclotomic sum = Cyclotomic::rational(3, 1) + z + z2;
        CHECK(sum.is_zero());
        // z * conj(z) = z * z^2 = z^3 = 1
        CHECK((z * z.conj()).rational_value() == 1);
        CHECK_FALSE(z.is_rational());
        CHECK_THROWS(z.rational_value());
    }
    SUBCASE("p = 5 powers cycle") {
        Cyclotomic z = Cyclotomic::zeta_pow(5, 1);
        Cyclotomic acc = Cyclotomic::rational(5, 1);
        for (int i = 0; i < 5; ++i) acc = acc * z;
        CHECK(acc.rational_value() == 1);
    }
    SUBCASE("conjugation is an involution") {
        Cyclotomic v = Cyclotomic::zeta_pow(7, 3) + Cyclotomic::rational(7, Rational(2, 3));
        CHECK(v.conj().conj() == v);
    }
}

TEST_CASE("theta functions") {
    const Field& F = Field::get(2);
    NilpotentAlgebra A = build_un(2, F);
    SUBCASE("zero functional gives the constant 1") {
        LinearFunctional zero{&A, FqVector(F, A.dim())};
        ClassFunction th = theta_fn(A, zero);
        for (uint64_t s = 0; s < th.size(); ++s)
            CHECK(th.value(s).rational_value() == 1);
    }
    SUBCASE("theta_{e12*}(1 + e12) = -1 over GF(2)") {
        LinearFunctional lam{&A, FqVector(F, A.dim())};
        lam.values[0] = 1;
        ClassFunction th = theta_fn(A, lam);
        CHECK(th.value(0).rational_value() == 1);
        CHECK(th.value(1).rational_value() == -1);
    }
    SUBCASE("additive multiplicativity") {
        const Field& F3 = Field::get(3);
        NilpotentAlgebra B = build_un(3, F3);
        LinearFunctional lam{&B, FqVector(F3, B.dim())};
        lam.values[0] = 2;
        lam.values[1] = 1;
        ClassFunction th = theta_fn(B, lam);
        uint64_t space = th.size();
        for (uint64_t s = 0; s < std::min<uint64_t>(space, 27); ++s)
            for (uint64_t t = 0; t < std::min<uint64_t>(space, 27); ++t) {
                FqVector x = decode_state(F3, B.dim(), s), y = decode_state(F3, B.dim(), t);
                FqVector sum(F3, B.dim());
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = F3.add(x[i], y[i]);
                CHECK(th.value(s) * th.value(t) == th.value(encode_state(sum)));
            }
    }
    SUBCASE("the q^dim theta functions are orthonormal (dim <= 6, q = 2)") {
        NilpotentAlgebra U4 = build_un(4, F);   // dim 6
        uint64_t space = 64;
        std::vector<ClassFunction> thetas;
        for (uint64_t s = 0; s < space; ++s) {
            LinearFunctional lam{&U4, decode_state(F, U4.dim(), s)};
            thetas.push_back(theta_fn(U4, lam));
        }
        for (uint64_t a = 0; a < space; ++a)
            for (uint64_t b = a; b < space; ++b) {
                Cyclotomic ip = inner_product(thetas[a], thetas[b]);
                CHECK(ip.rational_value() == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("Kirillov functions") {
    const Field& F = Field::get(2);
    NilpotentAlgebra A = build_un(3, F);
    SUBCASE("trivial at lambda = 0") {
        LinearFunctional zero{&A, FqVector(F, A.dim())};
        ClassFunction psi = kirillov_fn(A, zero);
        CHECK(psi.at_one().rational_value() == 1);
    }
    SUBCASE("degree 2 at lambda = e_13^*") {
        LinearFunctional lam{&A, FqVector(F, A.dim())};
        lam.values[*A.index_of(1, 3)] = 1;
        ClassFunction psi = kirillov_fn(A, lam);
        CHECK(psi.at_one().rational_value() == 2);
        CHECK(inner_product(psi, psi).rational_value() == 1);
    }
    SUBCASE("all Kirillov functions over u_4(2) are orthonormal") {
        NilpotentAlgebra U4 = build_un(4, F);
        // one function per coadjoint orbit, via representatives
        CoadjointResult co = coadjoint_orbits(U4);
        std::vector<ClassFunction> psis;
        for (uint64_t rep : co.summary.representatives) {
            LinearFunctional lam{&U4, decode_state(F, U4.dim(), rep)};
            psis.push_back(kirillov_fn(U4, lam));
        }
        REQUIRE(psis.size() == co.summary.orbit_count);
        for (std::size_t a = 0; a < psis.size(); ++a)
            for (std::size_t b = a; b < psis.size(); ++b)
                CHECK(inner_product(psis[a], psis[b]).rational_value() ==
                      (a == b ? 1 : 0));
    }
}

TEST_CASE("supercharacters") {
    const Field& F = Field::get(2);
    SUBCASE("degree and norm for the shape 1,3,4/2,5 at q=2,3") {
        for (int q : {2, 3}) {
            const Field& Fq = Field::get(q);
            NilpotentAlgebra U5 = build_un(5, Fq);
            SetPartition p = parse_partition("1,3,4/2,5");
            LinearFunctional lam = quasi_monomial_functional(U5, p);
            ClassFunction chi = superchar_fn(U5, lam);
            CHECK(chi.at_one().rational_value() == qpow(q, 3));       // q^d, d = 3
            CHECK(inner_product(chi, chi).rational_value() == qpow(q, 1));   // q^|Cr|
        }
    }
    SUBCASE("orthogonality of distinct supercharacters on u_3(2), exhaustively") {
        NilpotentAlgebra A = build_un(3, F);
        // quasi-monomial representatives: all shapes of [3]
        std::vector<ClassFunction> chis;
        enumerate_partitions(3, [&](const SetPartition& p) {
            chis.push_back(superchar_fn(A, quasi_monomial_functional(A, p)));
            return true;
        });
        for (std::size_t a = 0; a < chis.size(); ++a)
            for (std::size_t b = 0; b < chis.size(); ++b) {
                if (a == b) continue;
                CHECK(inner_product(chis[a], chis[b]).rational_value() == 0);
            }
    }
    SUBCASE("tensor factorization over disjoint arc supports (u_4(2))") {
        NilpotentAlgebra U4 = build_un(4, F);
        SetPartition whole = parse_partition("1,3/2,4");
        LinearFunctional lam = quasi_monomial_functional(U4, whole);
        LinearFunctional alpha{&U4, FqVector(F, U4.dim())};
        alpha.values[*U4.index_of(1, 3)] = 1;
        LinearFunctional beta{&U4, FqVector(F, U4.dim())};
        beta.values[*U4.index_of(2, 4)] = 1;
        ClassFunction chi = superchar_fn(U4, lam);
        ClassFunction ca = superchar_fn(U4, alpha);
        ClassFunction cb = superchar_fn(U4, beta);
        for (uint64_t s = 0; s < chi.size(); ++s)
            CHECK(chi.value(s) == ca.value(s) * cb.value(s));
    }
    SUBCASE("supercharacters contain their Kirillov constituents") {
        NilpotentAlgebra U4 = build_un(4, F);
        SetPartition p = parse_partition("1,4/2,3");
        LinearFunctional lam = quasi_monomial_functional(U4, p);
        ClassFunction chi = superchar_fn(U4, lam);
        ClassFunction psi = kirillov_fn(U4, lam);
        Cyclotomic ip = inner_product(chi, psi);
        CHECK_FALSE(ip.is_zero());
    }
    SUBCASE("theta-choice independence: rerun with theta' = zeta^(2 tr)") {
        const Field& F3 = Field::get(3);
        NilpotentAlgebra U4 = build_un(4, F3);
        SetPartition p = parse_partition("1,3/2,4");
        LinearFunctional lam = quasi_monomial_functional(U4, p);
        ClassFunction a = superchar_fn(U4, lam, kClassFunctionCap, 1);
        ClassFunction b = superchar_fn(U4, lam, kClassFunctionCap, 2);
        CHECK(a.at_one() == b.at_one());
        CHECK(inner_product(a, a) == inner_product(b, b));
    }
}

TEST_CASE("multiplicity-free decomposition for crossing-free shapes (u_4(2))") {
    // |Cr| = 0: chi is irreducible, so summing <chi,psi> psi(1) over the
    // Kirillov functions in its two-sided orbit recovers chi(1)
    const Field& F = Field::get(2);
    NilpotentAlgebra U4 = build_un(4, F);
    enumerate_partitions(4, [&](const SetPartition& p) {
        if (!crossing_data(p).crossing_pairs.empty()) return true;
        LinearFunctional lam = quasi_monomial_functional(U4, p);
        ClassFunction chi = superchar_fn(U4, lam);
        auto orbit = two_sided_orbit(U4, lam);
        // one Kirillov function per coadjoint orbit inside G lambda G
        std::set<uint64_t> seen;
        Rational total = 0;
        for (uint64_t mu : orbit) {
            if (seen.count(mu)) continue;
            LinearFunctional m{&U4, decode_state(F, U4.dim(), mu)};
            auto co = coadjoint_orbit_states(U4, m);
            for (uint64_t s : co) seen.insert(s);
            ClassFunction psi = kirillov_fn(U4, m);
            total += inner_product(chi, psi).rational_value() * psi.at_one().rational_value();
        }
        CHECK(total == chi.at_one().rational_value());
        return true;
    });
}

TEST_CASE("orbit sums over non-prime fields use the trace pairing") {
    SUBCASE("theta functions over GF(4) and GF(9) are orthonormal") {
        for (int q : {4, 9}) {
            const Field& F = Field::get(q);
            NilpotentAlgebra A = build_un(2, F);   // dim 1, space q
            std::vector<ClassFunction> thetas;
            for (int s = 0; s < q; ++s) {
                FqVector v(F, 1);
                v[0] = uint8_t(s);
                thetas.push_back(theta_fn(A, {&A, v}));
            }
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    CHECK(inner_product(thetas[a], thetas[b]).rational_value() ==
                          (a == b ? 1 : 0));
        }
    }
    SUBCASE("Kirillov function degrees over u_3(4)") {
        const Field& F = Field::get(4);
        NilpotentAlgebra A = build_un(3, F);
        LinearFunctional lam{&A, FqVector(F, A.dim())};
        lam.values[*A.index_of(1, 3)] = 1;
        ClassFunction psi = kirillov_fn(A, lam);
        CHECK(psi.at_one().rational_value() == 4);
        CHECK(inner_product(psi, psi).rational_value() == 1);
    }
}

TEST_CASE("streaming inner product agrees with the dense one") {
    const Field& F = Field::get(2);
    NilpotentAlgebra U4 = build_un(4, F);
    SetPartition p = parse_partition("1,3/2,4");
    LinearFunctional lam = quasi_monomial_functional(U4, p);
    auto orbit = two_sided_orbit(U4, lam);
    SidedOrbitSizes sz = sided_orbits(U4, lam);
    Rational scale = Rational(sz.left) / Rational(sz.twosided);
    ClassFunction chi = superchar_fn(U4, lam);
    Cyclotomic dense = inner_product(chi, chi);
    Cyclotomic streamed = inner_product_orbit_sums(U4, orbit, scale, orbit, scale);
    CHECK(dense == streamed);
}
