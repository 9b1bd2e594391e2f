#include "utq/gfq.hpp"

#include <doctest.h>

using namespace utq;

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        const Field& F = Field::get(q);
        CHECK(F.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(uint8_t(a), 0) == a);
            CHECK(F.mul(uint8_t(a), 1) == a);
            CHECK(F.add(uint8_t(a), F.neg(uint8_t(a))) == 0);
            if (a != 0) CHECK(F.mul(uint8_t(a), F.inv(uint8_t(a))) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(uint8_t(a), uint8_t(b)) == F.add(uint8_t(b), uint8_t(a)));
                CHECK(F.mul(uint8_t(a), uint8_t(b)) == F.mul(uint8_t(b), uint8_t(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), uint8_t(c)) == F.add(uint8_t(a), F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), uint8_t(c)) == F.mul(uint8_t(a), F.mul(b, c)));
                    CHECK(F.mul(uint8_t(a), F.add(b, c)) ==
                          F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
        // primitive element generates the full multiplicative group
        int seen = 0, t = 1;
        do { t = F.mul(uint8_t(t), uint8_t(F.primitive())); ++seen; } while (t != 1);
        CHECK(seen == q - 1);
    }
}

TEST_CASE("specific small-field values") {
    CHECK(Field::get(2).add(1, 1) == 0);
    CHECK(Field::get(3).mul(2, 2) == 1);
    // GF(4) from x^2+x+1: x*x = x+1 (indices 2 and 3)
    CHECK(Field::get(4).mul(2, 2) == 3);
    // GF(8) from x^3+x+1: x*x^2 = x^3 = x+1 (indices 2, 4, 3)
    CHECK(Field::get(8).mul(2, 4) == 3);
    // GF(9) from x^2+1: x*x = -1 = 2
    CHECK(Field::get(9).mul(3, 3) == 2);
    CHECK_THROWS(Field::get(6));
    CHECK_THROWS(Field::get(2).inv(0));
}

TEST_CASE("trace maps onto the prime field and is F_p-linear") {
    for (int q : {4, 8, 9}) {
        const Field& F = Field::get(q);
        int p = F.p();
        bool nontrivial = false;
        for (int a = 0; a < q; ++a) {
            CHECK(F.trace(uint8_t(a)) < p);
            if (F.trace(uint8_t(a)) != 0) nontrivial = true;
            for (int b = 0; b < q; ++b)
                CHECK(F.trace(F.add(a, b)) % p == (F.trace(uint8_t(a)) + F.trace(uint8_t(b))) % p);
        }
        CHECK(nontrivial);
    }
}

TEST_CASE("rref, rank, kernels") {
    const Field& F = Field::get(2);
    SUBCASE("left kernel of identity is empty") {
        FqMatrix I(F, 3, 3);
        for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
        CHECK(left_kernel(I).rows == 0);
    }
    SUBCASE("left kernel of zero matrix is everything") {
        FqMatrix Z(F, 4, 2);
        FqMatrix K = left_kernel(Z);
        CHECK(K.rows == 4);
        CHECK(rank(K) == 4);
    }
    SUBCASE("left kernel of [[1,1],[1,1]] over GF(2) is span{(1,1)}") {
        FqMatrix A(F, 2, 2);
        A.at(0, 0) = A.at(0, 1) = A.at(1, 0) = A.at(1, 1) = 1;
        FqMatrix K = left_kernel(A);
        REQUIRE(K.rows == 1);
        CHECK(K.at(0, 0) == 1);
        CHECK(K.at(0, 1) == 1);
    }
    SUBCASE("rank-nullity for left kernels") {
        // every 3x3 matrix over GF(2), exhaustively
        for (int bits = 0; bits < 512; ++bits) {
            FqMatrix A(F, 3, 3);
            for (int i = 0; i < 9; ++i) A.a[i] = uint8_t((bits >> i) & 1);
            CHECK(rank(A) + left_kernel(A).rows == 3);
        }
    }
}

TEST_CASE("kernel and solve agree with exhaustive enumeration over GF(3)") {
    const Field& F = Field::get(3);
    // fixed 3x4 example plus brute-force check of the kernel
    FqMatrix A(F, 3, 4);
    uint8_t vals[12] = {1, 2, 0, 1, 0, 1, 1, 2, 1, 0, 1, 0};
    for (int i = 0; i < 12; ++i) A.a[i] = vals[i];
    FqMatrix K = kernel(A);
    uint64_t null_count = 0;
    for (int x0 = 0; x0 < 3; ++x0)
        for (int x1 = 0; x1 < 3; ++x1)
            for (int x2 = 0; x2 < 3; ++x2)
                for (int x3 = 0; x3 < 3; ++x3) {
                    FqVector x(F, 4);
                    x[0] = uint8_t(x0); x[1] = uint8_t(x1); x[2] = uint8_t(x2); x[3] = uint8_t(x3);
                    if (mat_vec(A, x).is_zero()) ++null_count;
                }
    uint64_t expect = 1;
    for (std::size_t i = 0; i < K.rows; ++i) expect *= 3;
    CHECK(null_count == expect);
    for (std::size_t r = 0; r < K.rows; ++r)
        CHECK(mat_vec(A, K.row(r)).is_zero());
    // solve returns a valid solution when one exists
    FqVector b(F, 3);
    b[0] = 1; b[1] = 2; b[2] = 0;
    FqVector x;
    if (solve(A, b, x)) {
        FqVector got = mat_vec(A, x);
        CHECK(got == b);
    }
}

TEST_CASE("solve matches brute force on every 2x2 system over GF(2) and GF(3)") {
    for (int q : {2, 3}) {
        const Field& F = Field::get(q);
        int total = q * q * q * q;
        for (int m = 0; m < total; ++m) {
            FqMatrix A(F, 2, 2);
            int mm = m;
            for (int i = 0; i < 4; ++i) { A.a[i] = uint8_t(mm % q); mm /= q; }
            // kernel size q^(2-rank)
            uint64_t nullcount = 0;
            for (int v = 0; v < q * q; ++v) {
                FqVector x(F, 2);
                x[0] = uint8_t(v % q);
                x[1] = uint8_t(v / q);
                if (mat_vec(A, x).is_zero()) ++nullcount;
            }
            uint64_t expect = 1;
            for (std::size_t i = 0; i < kernel(A).rows; ++i) expect *= q;
            CHECK(nullcount == expect);
            for (int b = 0; b < q * q; ++b) {
                FqVector rhs(F, 2);
                rhs[0] = uint8_t(b % q);
                rhs[1] = uint8_t(b / q);
                bool solvable = false;
                for (int v = 0; v < q * q && !solvable; ++v) {
                    FqVector x(F, 2);
                    x[0] = uint8_t(v % q);
                    x[1] = uint8_t(v / q);
                    if (mat_vec(A, x) == rhs) solvable = true;
                }
                FqVector x;
                bool got = solve(A, rhs, x);
                CHECK(got == solvable);
                if (got) CHECK(mat_vec(A, x) == rhs);
            }
        }
    }
}

TEST_CASE("subspace intersection") {
    const Field& F = Field::get(2);
    FqMatrix U(F, 2, 3), W(F, 2, 3);
    // U = span{(1,0,0),(0,1,0)}, W = span{(0,1,0),(0,0,1)} -> intersection span{(0,1,0)}
    U.at(0, 0) = 1; U.at(1, 1) = 1;
    W.at(0, 1) = 1; W.at(1, 2) = 1;
    FqMatrix I = intersect_subspaces(U, W);
    REQUIRE(I.rows == 1);
    CHECK(I.at(0, 0) == 0);
    CHECK(I.at(0, 1) == 1);
    CHECK(I.at(0, 2) == 0);
}
