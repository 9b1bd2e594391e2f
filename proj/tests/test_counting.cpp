#include "utq/counting.hpp"

#include <doctest.h>

using namespace utq;

TEST_CASE("assembled polynomials") {
    SUBCASE("N_{n,0} = q^{n-1}") {
        for (int n = 1; n <= 10; ++n)
            CHECK(assemble_N(n, 0) == IntPolynomial::monomial(Var::q, 1, n - 1));
    }
    SUBCASE("N_{3,1} = q - 1") {
        CHECK(assemble_N(3, 1) == IntPolynomial(Var::q, {Int(-1), Int(1)}));
    }
    SUBCASE("abelian UT_2 has no higher-degree characters") {
        for (int e = 1; e <= 8; ++e) CHECK(assemble_N(2, e).is_zero());
    }
    SUBCASE("e > 8 is a hard error") {
        CHECK_THROWS(assemble_N(20, 9));
        CHECK_THROWS(closed_form_N(20, 9));
    }
    SUBCASE("both assembly routes agree (n <= 12)") {
        for (int e = 0; e <= 8; ++e)
            for (int n = 1; n <= 12; ++n)
                CHECK(assemble_N_compositions(n, e) == assemble_N(n, e));
    }
}

TEST_CASE("closed bivariate formula") {
    SUBCASE("N_{3,1} via f-polynomials") {
        CHECK(closed_form_N(3, 1) == IntPolynomial(Var::q, {Int(-1), Int(1)}));
    }
    SUBCASE("agreement with assembly in the covered window") {
        for (int e = 1; e <= 8; ++e)
            for (int n = 2 * e + 1; n <= 2 * e + 8; ++n)
                CHECK(closed_form_N(n, e) == assemble_N(n, e));
    }
    SUBCASE("outside the window the formula refuses") {
        CHECK_THROWS(closed_form_N(4, 2));
    }
    SUBCASE("structure report") {
        for (int e = 1; e <= 8; ++e) CHECK(bivariate_check(e).ok());
    }
}

TEST_CASE("congruences and derivative at one") {
    CHECK(derivative_at_1(5, 2) == 2);
    CHECK(derivative_at_1(4, 0) == 3);
    CHECK(derivative_at_1(3, 5) == 0);
    for (int e = 0; e <= 8; ++e)
        for (int n = 1; n <= 16; ++n)
            CHECK(congruence_check(n, e));
}

TEST_CASE("A/B observation") {
    for (int e = 1; e <= 8; ++e) CHECK(ab_observation_check(e));
}

TEST_CASE("closed forms for at most two crossings") {
    SUBCASE("single crossing: q at e = d-1") {
        auto r = prop_eval(parse_partition("1,3,4/2,5"));
        REQUIRE(r);
        CHECK(r->e == 2);
        CHECK(r->value == IntPolynomial::monomial(Var::q, 1, 1));
    }
    SUBCASE("two chained crossings closing on an arc: 1 at e = d-1") {
        auto r = prop_eval(parse_partition("1,3,5/2,4"));
        REQUIRE(r);
        CHECK(r->e == 2);
        CHECK(r->value == IntPolynomial::constant(Var::q, 1));
    }
    SUBCASE("three crossings: not applicable") {
        CHECK_FALSE(prop_eval(parse_partition("1,4/2,5/3,6")));
    }
    SUBCASE("noncrossing: 1 at e = d") {
        auto r = prop_eval(parse_partition("1,4/2,3"));
        REQUIRE(r);
        CHECK(r->e == 2);
        CHECK(r->value == IntPolynomial::constant(Var::q, 1));
    }
}

TEST_CASE("shape sums against assembled polynomials") {
    const Field& F = Field::get(2);
    SUBCASE("fixed instances") {
        CHECK(shape_sum(3, 1, F) == 1);
        CHECK(shape_sum(4, 0, F) == 8);
        CHECK(shape_sum(6, 2, F) == assemble_N(6, 2).eval_at_q(2));
    }
    SUBCASE("full profile for n = 5, q = 2 and q = 3") {
        for (int q : {2, 3}) {
            auto all = shape_sum_all(5, Field::get(q));
            for (auto& [e, v] : all)
                CHECK(v == assemble_N(5, e).eval_at_q(q));
        }
    }
}

TEST_CASE("product formula") {
    const Field& F = Field::get(2);
    SUBCASE("15-element example evaluates to q^3 at e = 17") {
        SetPartition p = parse_partition("1,4,6/2,14,15/3/5,7,10/8,11,13/9/12");
        CHECK(crossing_components(p).size() == 8);
        for (int q : {2, 3}) {
            auto all = product_formula_all(p, Field::get(q));
            REQUIRE(all.size() == 1);
            CHECK(all.at(17) == Int(q) * q * q);
        }
    }
    SUBCASE("two noncrossing blocks: 1 at e = 0") {
        CHECK(product_formula(parse_partition("1,2/3,4"), 0, F) == 1);
    }
    SUBCASE("matches the direct engine count on all shapes of [6]") {
        enumerate_partitions(6, [&](const SetPartition& p) {
            const LambdaCounts& direct = count_lambda_all_cached(p, F);
            auto prod = product_formula_all(p, F);
            std::map<int, Int> directI;
            for (auto& [e, c] : direct.by_e) directI[e] = c;
            CHECK(directI == prod);
            return true;
        });
    }
}
