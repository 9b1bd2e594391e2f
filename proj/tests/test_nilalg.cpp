#include "utq/nilalg.hpp"

#include <doctest.h>

#include <set>

using namespace utq;

TEST_CASE("strictly upper triangular algebras") {
    const Field& F = Field::get(2);
    SUBCASE("u_3: matrix units") {
        NilpotentAlgebra A = build_un(3, F);
        CHECK(A.dim() == 3);
        auto i12 = A.index_of(1, 2), i23 = A.index_of(2, 3), i13 = A.index_of(1, 3);
        REQUIRE(i12); REQUIRE(i23); REQUIRE(i13);
        FqVector prod = A.basis_product(*i12, *i23);
        CHECK(prod[*i13] == 1);
        CHECK(A.basis_product(*i23, *i12).is_zero());
        CHECK(A.is_associative());
        CHECK(A.nilpotency_index() == 3);
    }
    SUBCASE("u_2 is a square-zero line") {
        NilpotentAlgebra A = build_un(2, F);
        CHECK(A.dim() == 1);
        CHECK(A.basis_product(0, 0).is_zero());
        CHECK(A.nilpotency_index() == 2);
    }
    SUBCASE("u_4 has nilpotency index 4") {
        NilpotentAlgebra A = build_un(4, F);
        CHECK(A.dim() == 6);
        CHECK(A.nilpotency_index() == 4);
        CHECK(A.is_associative());
    }
}

TEST_CASE("crossing algebras") {
    const Field& F = Field::get(2);
    SUBCASE("central products follow arcs") {
        SetPartition p = parse_partition("1,3,5/2,4");
        NilpotentAlgebra C = build_crossing(p, F, false);
        CHECK(C.dim() == 2);   // Cr = {(1,2),(2,3)}
        auto a = C.index_of(1, 2), b = C.index_of(2, 3);
        REQUIRE(a); REQUIRE(b);
        CHECK(C.basis_product(*a, *b).is_zero());   // (1,3) not a crossing pair

        NilpotentAlgebra Ce = build_crossing(p, F, true);
        CHECK(Ce.dim() == 3);
        auto z = Ce.z_index();
        REQUIRE(z);
        CHECK(*z == 2);   // z is last
        FqVector prod = Ce.basis_product(*Ce.index_of(1, 2), *Ce.index_of(2, 3));
        CHECK(prod[*z] == 1);   // lands on z since (1,3) is an arc
    }
    SUBCASE("closed crossing pattern reproduces u_3") {
        SetPartition p = parse_partition("1,4/2,5/3,6");
        NilpotentAlgebra C = build_crossing(p, F, false);
        NilpotentAlgebra U = build_un(3, F);
        REQUIRE(C.dim() == 3);
        // basis orders agree: (1,2),(1,3),(2,3)
        FqMatrix M(F, 3, 3);
        for (int i = 0; i < 3; ++i) M.at(i, i) = 1;
        CHECK(iso_check(C, U, M));
    }
    SUBCASE("noncrossing partitions give the zero and one-dimensional algebras") {
        SetPartition p = parse_partition("1,2/3,4");
        CHECK(build_crossing(p, F, false).dim() == 0);
        NilpotentAlgebra Ce = build_crossing(p, F, true);
        CHECK(Ce.dim() == 1);
        CHECK(Ce.basis_product(0, 0).is_zero());
    }
}

TEST_CASE("pattern algebras") {
    const Field& F = Field::get(3);
    std::set<std::pair<int, int>> full = {{1, 2}, {2, 3}, {1, 3}};
    CHECK(is_closed_pattern(3, full));
    NilpotentAlgebra A = build_pattern(3, full, F);
    CHECK(A.dim() == 3);
    CHECK(A.is_associative());

    std::set<std::pair<int, int>> open = {{1, 2}, {2, 3}};
    CHECK_FALSE(is_closed_pattern(3, open));
    CHECK_THROWS(build_pattern(3, open, F));

    CHECK(is_closed_pattern(3, {}));
    CHECK(build_pattern(3, {}, F).dim() == 0);
}

TEST_CASE("pattern to partition") {
    SUBCASE("single crossing") {
        SetPartition p = pattern_to_partition(2, {{1, 2}});
        CHECK(format_partition(p) == "1,3/2,4");
        CHECK(crossing_data(p).crossing_pairs == std::vector<std::pair<int, int>>{{1, 2}});
    }
    SUBCASE("empty pattern") {
        SetPartition p = pattern_to_partition(2, {});
        CHECK(format_partition(p) == "1,4/2,3");
        CHECK(crossing_data(p).crossing_pairs.empty());
    }
    SUBCASE("full pattern") {
        SetPartition p = pattern_to_partition(3, {{1, 2}, {1, 3}, {2, 3}});
        CHECK(format_partition(p) == "1,4/2,5/3,6");
    }
    SUBCASE("rejects non-total orders") {
        // P = {(1,3)}: complement contains (1,2),(2,3) but not (1,3); not closed
        CHECK_THROWS(pattern_to_partition(3, {{1, 3}}));
    }
    SUBCASE("every valid pattern on [3] round-trips") {
        std::vector<std::pair<int, int>> pos = {{1, 2}, {1, 3}, {2, 3}};
        for (int mask = 0; mask < 8; ++mask) {
            std::set<std::pair<int, int>> P;
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) P.insert(pos[b]);
            std::set<std::pair<int, int>> comp;
            for (auto pr : pos)
                if (!P.count(pr)) comp.insert(pr);
            if (!is_closed_pattern(3, P) || !is_closed_pattern(3, comp)) {
                CHECK_THROWS(pattern_to_partition(3, P));
                continue;
            }
            SetPartition p = pattern_to_partition(3, P);
            auto cr = crossing_data(p).crossing_pairs;
            CHECK(std::set<std::pair<int, int>>(cr.begin(), cr.end()) == P);
        }
    }
}

TEST_CASE("functional subspaces") {
    SUBCASE("zero functional gives the whole algebra") {
        const Field& F = Field::get(2);
        NilpotentAlgebra A = build_un(3, F);
        LinearFunctional lam{&A, FqVector(F, A.dim())};
        FunctionalSubspaces s = functional_subspaces(A, lam);
        CHECK(s.l.dim() == 3);
        CHECK(s.k.dim() == 3);
        CHECK(s.s.dim() == 3);
    }
    SUBCASE("u_3(2) with lambda = e_13^*") {
        const Field& F = Field::get(2);
        NilpotentAlgebra A = build_un(3, F);
        LinearFunctional lam{&A, FqVector(F, A.dim())};
        lam.values[*A.index_of(1, 3)] = 1;
        FunctionalSubspaces s = functional_subspaces(A, lam);
        // l = span{e13, e23}, k = span{e23}
        CHECK(s.l.dim() == 2);
        CHECK(s.k.dim() == 1);
        FqVector e13 = A.unit_vec(*A.index_of(1, 3));
        FqVector e23 = A.unit_vec(*A.index_of(2, 3));
        FqVector e12 = A.unit_vec(*A.index_of(1, 2));
        CHECK(s.l.contains(e13));
        CHECK(s.l.contains(e23));
        CHECK_FALSE(s.l.contains(e12));
        CHECK(s.k.contains(e23));
        CHECK_FALSE(s.k.contains(e13));
    }
    SUBCASE("dim s - dim l equals the crossing count (u_4(2), shape 1,3/2,4)") {
        const Field& F = Field::get(2);
        NilpotentAlgebra A = build_un(4, F);
        SetPartition p = parse_partition("1,3/2,4");
        LinearFunctional lam = quasi_monomial_functional(A, p);
        FunctionalSubspaces s = functional_subspaces(A, lam);
        CHECK(s.s.dim() - s.l.dim() == 1);
        CHECK(s.l.dim() - s.k.dim() == 1);
    }
    SUBCASE("postconditions for every shape of [5] and every coefficient vector, q=3") {
        const Field& F = Field::get(3);
        NilpotentAlgebra A = build_un(5, F);
        enumerate_partitions(5, [&](const SetPartition& p) {
            auto arcs = arc_set(p).arcs;
            std::vector<uint8_t> coeffs(arcs.size(), 1);
            // iterate all coefficient vectors in (F_q^x)^arcs
            while (true) {
                LinearFunctional lam = quasi_monomial_functional(A, p, coeffs);
                FunctionalSubspaces s = functional_subspaces(A, lam);
                CHECK(s.l.dim() - s.k.dim() == (arcs.empty() ? 0 : 1));
                CHECK(s.s.dim() - s.l.dim() == crossing_data(p).crossing_pairs.size());
                // s is closed, l and k are two-sided ideals of s
                SubalgebraResult sub = subalgebra(A, s.s);
                auto embed = [&](const FqMatrix& rows) {
                    std::vector<FqVector> vecs;
                    for (std::size_t r = 0; r < rows.rows; ++r)
                        vecs.push_back(sub.coords_of(rows.row(r)));
                    return make_subspace(F, vecs, sub.algebra.dim());
                };
                CHECK_NOTHROW(quotient(sub.algebra, embed(s.l.basis)));
                CHECK_NOTHROW(quotient(sub.algebra, embed(s.k.basis)));
                // advance the coefficient odometer
                std::size_t i = 0;
                while (i < coeffs.size()) {
                    if (++coeffs[i] < F.q()) break;
                    coeffs[i] = 1;
                    ++i;
                }
                if (coeffs.empty() || i == coeffs.size()) break;
            }
            return true;
        });
    }
}

TEST_CASE("quotients") {
    const Field& F = Field::get(2);
    NilpotentAlgebra A = build_un(3, F);
    SUBCASE("quotient by the whole algebra is zero") {
        std::vector<FqVector> all;
        for (std::size_t i = 0; i < A.dim(); ++i) all.push_back(A.unit_vec(i));
        Subspace s = make_subspace(F, all, A.dim());
        QuotientResult q = quotient(A, s);
        CHECK(q.algebra.dim() == 0);
    }
    SUBCASE("non-ideals are rejected") {
        // span{e12} is not an ideal of u_3: e12*e23 = e13 outside
        Subspace s = make_subspace(F, {A.unit_vec(*A.index_of(1, 2))}, A.dim());
        CHECK_THROWS(quotient(A, s));
    }
    SUBCASE("center is an ideal; quotient is square-zero of dimension 2") {
        Subspace s = make_subspace(F, {A.unit_vec(*A.index_of(1, 3))}, A.dim());
        QuotientResult q = quotient(A, s);
        CHECK(q.algebra.dim() == 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(q.algebra.basis_product(i, j).is_zero());
    }
}

TEST_CASE("iso_check rejects wrong maps") {
    const Field& F = Field::get(2);
    NilpotentAlgebra U = build_un(3, F);
    // swapping e12 and e23 is not an isomorphism of u_3 (products reverse)
    FqMatrix M(F, 3, 3);
    M.at(0, 2) = 1;                       // e12 -> e23
    M.at(1, 1) = 1;                       // e13 -> e13
    M.at(2, 0) = 1;                       // e23 -> e12
    CHECK_FALSE(iso_check(U, U, M));
    FqMatrix I(F, 3, 3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
    CHECK(iso_check(U, U, I));
}
