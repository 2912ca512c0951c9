#include <doctest.h>

#include "support.hpp"

using namespace natk;
using natk_test::table_from;

TEST_CASE("near-ring validation") {
    NearRingPtr f3 = fixtures::ring_zmod(3);
    CHECK(f3->order() == 3);

    NearRingPtr phi = fixtures::z9_phi();
    CHECK(phi->plus(1, 2) == 6);

    // Addition with identity at index 1 is a fine group but breaks a(b+c).
    try {
        validate_nearring(fixtures::m2(), table_from({{1, 0}, {0, 1}}));
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind == "NotLeftDistributive");
        CHECK(e.witnesses[0].elements == std::vector<int>{0, 0, 0});
    }

    CHECK_THROWS_AS(validate_nearring(fixtures::m2(), table_from({{0, 0}, {0, 1}})), Error);
}

TEST_CASE("classification") {
    NearRingReport gf3 = classify(*fixtures::ring_zmod(3));
    CHECK(gf3.is_nearfield);
    CHECK(gf3.is_ring);
    CHECK(gf3.fa);
    CHECK(gf3.sa);
    CHECK(gf3.s1_for_minus_one);

    SUBCASE("Fun(Z/2) is a near-ring but not a ring, not a near-field, not FA") {
        NearRingPtr fun = fun_nearring(fixtures::cyclic_group(2));
        CHECK(fun->order() == 4);
        NearRingReport r = classify(*fun);
        CHECK_FALSE(r.is_ring);
        CHECK_FALSE(r.is_nearfield);
        CHECK_FALSE(r.fa);
        // The right-distributivity witness is genuine.
        for (const auto& w : r.witnesses) {
            if (w.label != "NotRightDistributive") continue;
            Idx a = Idx(w.elements[0]), b = Idx(w.elements[1]), c = Idx(w.elements[2]);
            CHECK(fun->mul(fun->plus(a, b), c) != fun->plus(fun->mul(a, c), fun->mul(b, c)));
        }
    }

    SUBCASE("#-construction over Z/4 with n=2 is a near-ring but not a ring") {
        NearRingPtr h = hash_construction(*fixtures::ring_zmod(4), 2);
        CHECK(h->order() == 16);
        NearRingReport r = classify(*h);
        CHECK_FALSE(r.is_ring);
    }
}

TEST_CASE("the #-construction") {
    SUBCASE("Z/2, n=1: a ring where -1 differs from the monoid's minus-one") {
        NearRingPtr h = hash_construction(*fixtures::ring_zmod(2), 1);
        CHECK(h->order() == 4);
        CHECK(classify(*h).is_ring);
        CHECK(h->monoid->zero == Idx(0));
        CHECK(h->monoid->minus_one == Idx(3));
        CHECK(h->add.neg[h->monoid->one] == h->monoid->one);  // -(1,0) = (1,0)
    }

    SUBCASE("iff laws on small commutative rings") {
        for (std::size_t m : {2, 3, 4, 6}) {
            NearRingPtr base = fixtures::ring_zmod(m);
            for (unsigned n = 1; n <= 3; ++n) {
                auto pw = [&](Idx a) {
                    Idx p = base->monoid->one;
                    for (unsigned i = 0; i < n; ++i) p = base->mul(p, a);
                    return p;
                };
                bool law_add = true;
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t c = 0; c < m; ++c)
                        if (pw(base->plus(Idx(a), Idx(c))) !=
                            base->plus(pw(Idx(a)), pw(Idx(c))))
                            law_add = false;
                NearRingPtr h = hash_construction(*base, n);  // commutative: always built
                CHECK(classify(*h).is_ring == law_add);
            }
        }
    }

    SUBCASE("upper triangular matrices over Z/2 fail the power law at n=2") {
        NearRingPtr ut = fixtures::upper_triangular_z2();
        CHECK(classify(*ut).is_ring);
        try {
            hash_construction(*ut, 2);
            FAIL("expected PowerLawFails");
        } catch (const Error& e) {
            CHECK(e.kind == "PowerLawFails");
            REQUIRE(e.witnesses.size() == 1);
            Idx a = Idx(e.witnesses[0].elements[0]), c = Idx(e.witnesses[0].elements[1]);
            auto sq = [&](Idx x) { return ut->mul(x, x); };
            CHECK(sq(ut->mul(a, c)) != ut->mul(sq(a), sq(c)));
        }
    }

    SUBCASE("requires a ring") {
        // The order-9 near-field is right-distributivity-free.
        CHECK_THROWS_AS(hash_construction(*dickson_fixture(), 1), Error);
    }
}

TEST_CASE("Fun(A)") {
    NearRingPtr f1 = fun_nearring(fixtures::cyclic_group(1));
    CHECK(f1->order() == 1);

    NearRingPtr f3 = fun_nearring(fixtures::cyclic_group(3));
    CHECK(f3->order() == 27);  // validation scanned all 27^3 triples

    CHECK_THROWS_AS(fun_nearring(fixtures::cyclic_group(5)), Error);
}

TEST_CASE("transported addition") {
    NearRingPtr z9 = fixtures::z9_plus();

    SUBCASE("identity transport reproduces the table") {
        std::vector<Idx> id(9);
        for (std::size_t i = 0; i < 9; ++i) id[i] = static_cast<Idx>(i);
        CHECK(transport_addition(*z9, id)->add.add == z9->add.add);
    }

    SUBCASE("the 3 <-> 6 swap yields the twisted near-ring") {
        NearRingPtr t = transport_addition(*z9, fixtures::z9_swap_automorphism());
        CHECK(t->plus(1, 2) == 6);
        CHECK(t->plus(3, 3) == 6);  // agrees with plain addition on {0,3,6}
    }

    SUBCASE("a transposition of units is rejected with a witness") {
        std::vector<Idx> phi(9);
        for (std::size_t i = 0; i < 9; ++i) phi[i] = static_cast<Idx>(i);
        std::swap(phi[1], phi[2]);
        try {
            transport_addition(*z9, phi);
            FAIL("expected a validation error");
        } catch (const Error& e) {
            CHECK(e.kind == "NotMultiplicativeAutomorphism");
            REQUIRE(e.witnesses.size() == 1);
            Idx a = Idx(e.witnesses[0].elements[0]), b = Idx(e.witnesses[0].elements[1]);
            CHECK(phi[z9->mul(a, b)] != z9->mul(phi[a], phi[b]));
        }
    }

    SUBCASE("every automorphism of small fixtures transports to a near-ring") {
        for (const auto& n :
             {fixtures::ring_zmod(4), fixtures::ring_zmod(6), fixtures::z9_plus(),
              dickson_fixture()}) {
            for (const auto& phi : monoid_automorphisms(*n->monoid))
                CHECK(transport_addition(*n, phi)->order() == n->order());
        }
    }
}

TEST_CASE("the order-9 near-field") {
    NearRingPtr j = dickson_fixture();
    NearRingReport r = classify(*j);
    CHECK(r.is_nearfield);
    CHECK_FALSE(r.is_ring);
    CHECK(r.fa);
    CHECK(r.sa);
    CHECK(r.s1_for_minus_one);

    auto census = nonzero_order_census(*j);
    CHECK(census ==
          std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {4, 6}});

    CHECK(eta_solutions(*j->monoid) == std::vector<Idx>{1, 2});
    CHECK(j->monoid->zero == Idx(0));
}

TEST_CASE("module consequences hold in every near-ring of the corpus") {
    std::vector<NearRingPtr> corpus = {
        fixtures::ring_zmod(2),   fixtures::ring_zmod(6),
        fixtures::z9_phi(),       dickson_fixture(),
        fun_nearring(fixtures::cyclic_group(2)),
        hash_construction(*fixtures::ring_zmod(4), 2),
        fixtures::upper_triangular_z2(),
    };
    for (const auto& n : corpus) {
        const Idx zero = n->add.zero;
        for (std::size_t a = 0; a < n->order(); ++a) {
            CHECK(n->mul(Idx(a), zero) == zero);
            for (std::size_t b = 0; b < n->order(); ++b)
                CHECK(n->mul(Idx(a), n->add.neg[b]) == n->add.neg[n->mul(Idx(a), Idx(b))]);
        }
        // Where 1 = -1 additively, every element is its own negative.
        if (n->add.neg[n->monoid->one] == n->monoid->one)
            for (std::size_t a = 0; a < n->order(); ++a) CHECK(n->add.neg[a] == Idx(a));
    }
}

TEST_CASE("near-field and FA implications") {
    for (const auto& n : {fixtures::ring_zmod(3), dickson_fixture(),
                          fun_nearring(fixtures::cyclic_group(2)), fixtures::z9_phi()})
        CHECK_NOTHROW(verify_lema(*n));
}

TEST_CASE("self-module of a near-ring") {
    ModulePtr m = as_module(*fixtures::z9_phi());
    CHECK(m->order() == 9);
    CHECK(m->scale(2, 7) == fixtures::z9_phi()->mul(2, 7));
}
