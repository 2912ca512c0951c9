#include <doctest.h>

#include "support.hpp"

using namespace natk;
using natk_test::table_from;

TEST_CASE("one-element monoid: zero and minus-one coincide with the identity") {
    FiniteMonoid m = validate_monoid(1, {}, {0});
    CHECK(m.one == 0);
    CHECK(m.zero == Idx(0));
    CHECK(m.minus_one == Idx(0));
    CHECK(check_scalar_group(m).is_scalar_group);
}

TEST_CASE("multiplicative monoid of Z/3") {
    FiniteMonoid m = *fixtures::m3();
    CHECK(m.one == 1);
    CHECK(m.zero == Idx(0));
    CHECK(m.minus_one == Idx(2));
    CHECK(check_scalar_group(m).is_scalar_group);
}

TEST_CASE("the OR table on two elements is a valid monoid") {
    // max(a,b): associative with identity 0 and absorbing 1.
    FiniteMonoid m = validate_monoid(2, {}, table_from({{0, 1}, {1, 1}}));
    CHECK(m.one == 0);
    CHECK(m.zero == Idx(1));
    CHECK(m.minus_one == Idx(0));
}

TEST_CASE("monoid validation rejections") {
    CHECK_THROWS_WITH_AS(validate_monoid(2, {}, {0, 1, 0, 0}),
                         doctest::Contains("identity"), Error);
    // (1*1)*2 = 2*2 = 1 but 1*(1*2) = 1*0 = ... non-associative three-element table
    std::vector<Idx> t = table_from({{0, 1, 2}, {1, 2, 2}, {2, 2, 1}});
    try {
        validate_monoid(3, {}, t);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind == "NotAssociative");
        REQUIRE(e.witnesses.size() == 1);
        auto w = e.witnesses[0].elements;
        REQUIRE(w.size() == 3);
        // re-check the reported triple independently
        auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * 3 + b]; };
        CHECK(at(at(w[0], w[1]), w[2]) != at(w[0], at(w[1], w[2])));
    }
    CHECK_THROWS_AS(validate_monoid(2, {"x", "x"}, table_from({{0, 1}, {1, 0}})), Error);
    CHECK_THROWS_AS(validate_monoid(2, {}, {0, 1, 1}), Error);
    CHECK_THROWS_AS(validate_monoid(2, {}, {0, 1, 1, 3}), Error);
}

TEST_CASE("abelian group validation") {
    FiniteAbelianGroup z2 = validate_abelian_group(2, table_from({{0, 1}, {1, 0}}));
    CHECK(z2.zero == 0);
    CHECK(z2.neg == std::vector<Idx>{0, 1});

    FiniteAbelianGroup z9 = fixtures::cyclic_group(9);
    CHECK(z9.order == 9);
    CHECK(z9.neg[4] == 5);

    // The multiplicative table of Z/3 has identity 1 but 0 is not invertible.
    try {
        validate_abelian_group(3, fixtures::m3()->mul);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind == "NoInverse");
        CHECK(e.witnesses[0].elements == std::vector<int>{0});
    }

    // Swapped-identity table is still a group, with zero at index 1.
    FiniteAbelianGroup g = validate_abelian_group(2, table_from({{1, 0}, {0, 1}}));
    CHECK(g.zero == 1);

    CHECK_THROWS_AS(validate_abelian_group(2, table_from({{0, 1}, {1, 1}})), Error);
}

TEST_CASE("find_zero") {
    CHECK(find_zero(*fixtures::m3()) == Idx(0));
    CHECK_FALSE(find_zero(*fixtures::cyclic_as_monoid(2)).has_value());
    // The order-9 near-field monoid: the adjoined absorbing element.
    CHECK(find_zero(*dickson_fixture()->monoid) == Idx(0));
}

TEST_CASE("find_minus_one") {
    CHECK(find_minus_one(*fixtures::m3()) == Idx(2));
    CHECK_FALSE(find_minus_one(*fixtures::klein_as_monoid()).has_value());

    // #-construction over Z/2 with n = 1: solutions of eta^2 = 1 are exactly
    // (1,0) and (1,1).
    NearRingPtr h = hash_construction(*fixtures::ring_zmod(2), 1);
    CHECK(eta_solutions(*h->monoid) == std::vector<Idx>{2, 3});
    CHECK(h->monoid->minus_one == Idx(3));
}

TEST_CASE("scalar group reports") {
    SUBCASE("Z/9 fails with the least non-invertible element") {
        ScalarGroupReport r = check_scalar_group(*fixtures::zmod_mult(9));
        CHECK_FALSE(r.is_scalar_group);
        REQUIRE(r.failure.has_value());
        CHECK(r.failure->label == "non-invertible");
        CHECK(r.failure->elements == std::vector<int>{3});
    }
    SUBCASE("the #-monoid over Z/2, n=1 fails at (0,1)") {
        NearRingPtr h = hash_construction(*fixtures::ring_zmod(2), 1);
        ScalarGroupReport r = check_scalar_group(*h->monoid);
        CHECK_FALSE(r.is_scalar_group);
        REQUIRE(r.failure.has_value());
        CHECK(r.failure->label == "non-invertible");
        CHECK(r.failure->elements == std::vector<int>{1});
    }
    SUBCASE("a group monoid has no absorbing element") {
        ScalarGroupReport r = check_scalar_group(*fixtures::cyclic_as_monoid(3));
        CHECK_FALSE(r.is_scalar_group);
        CHECK(r.failure->label == "no-absorbing-zero");
    }
    SUBCASE("Klein four-group has too many involutions") {
        // Adjoin a zero so (S0) holds but (S1) cannot.
        MonoidPtr k4 = fixtures::klein_as_monoid();
        const std::size_t n = 5;
        std::vector<Idx> mul(n * n, 4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) mul[a * n + b] = k4->at(Idx(a), Idx(b));
        FiniteMonoid m = validate_monoid(n, {}, std::move(mul));
        ScalarGroupReport r = check_scalar_group(m);
        CHECK_FALSE(r.is_scalar_group);
        CHECK(r.failure->label == "too-many-involutions");
        CHECK(r.eta_solutions.size() == 4);
    }
}

TEST_CASE("scalar group structure invariants over the corpus") {
    std::vector<MonoidPtr> corpus = {
        fixtures::trivial_monoid(), fixtures::m2(),
        fixtures::m3(),             fixtures::zmod_mult(4),
        fixtures::zmod_mult(9),     fixtures::cyclic_as_monoid(4),
        fixtures::klein_as_monoid(), fixtures::idempotent_three(),
        dickson_fixture()->monoid,
    };
    for (const auto& m : corpus) {
        // Absorbing element: unique and two-sided by definition of the scan.
        if (m->zero)
            for (std::size_t a = 0; a < m->order; ++a) {
                CHECK(m->at(*m->zero, Idx(a)) == *m->zero);
                CHECK(m->at(Idx(a), *m->zero) == *m->zero);
            }
        if (m->minus_one) {
            CHECK(m->at(*m->minus_one, *m->minus_one) == m->one);
            CHECK(eta_solutions(*m).size() <= 2);
        }
        ScalarGroupReport r = check_scalar_group(*m);
        if (r.is_scalar_group) {
            // Nonzero elements form a group under multiplication.
            for (std::size_t a = 0; a < m->order; ++a) {
                if (Idx(a) == *r.zero) continue;
                CHECK(two_sided_inverse(*m, Idx(a)).has_value());
                for (std::size_t b = 0; b < m->order; ++b) {
                    if (Idx(b) == *r.zero) continue;
                    CHECK(m->at(Idx(a), Idx(b)) != *r.zero);
                }
            }
            for (Idx s : r.eta_solutions) CHECK((s == m->one || s == *r.minus_one));
        }
    }
}
