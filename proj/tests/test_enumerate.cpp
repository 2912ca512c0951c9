#include <doctest.h>
#include <algorithm>
#include <set>

#include "support.hpp"

using namespace natk;

namespace {

EnumerationResult run(MonoidPtr m, std::optional<std::size_t> max = std::nullopt,
                      bool dedup = false) {
    EnumerationTask task;
    task.monoid = std::move(m);
    task.max_results = max;
    task.dedup_by_automorphism = dedup;
    return enumerate_nearrings(task);
}

}  // namespace

TEST_CASE("pinned counts on small monoids") {
    CHECK(run(fixtures::trivial_monoid()).additions.size() == 1);

    EnumerationResult m2 = run(fixtures::m2());
    REQUIRE(m2.additions.size() == 1);
    CHECK(m2.additions[0] == std::vector<Idx>{0, 1, 1, 0});

    EnumerationResult m3 = run(fixtures::m3());
    REQUIRE(m3.additions.size() == 1);
    CHECK(m3.additions[0] == fixtures::cyclic_group(3).add);

    // Groups viewed as monoids admit no absorbing additive identity.
    CHECK(run(fixtures::cyclic_as_monoid(2)).additions.empty());
    CHECK(run(fixtures::klein_as_monoid()).additions.empty());
    CHECK(run(fixtures::idempotent_three()).additions.empty());
}

TEST_CASE("the Z/4 multiplicative monoid carries exactly two additions") {
    // Z/4 itself and the xor addition (the same monoid underlies Z2[x]/(x^2)).
    EnumerationResult r = run(fixtures::zmod_mult(4));
    REQUIRE(r.additions.size() == 2);
    std::vector<Idx> xor_table(16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) xor_table[a * 4 + b] = static_cast<Idx>(a ^ b);
    CHECK(r.additions[0] == xor_table);  // lexicographically first
    CHECK(r.additions[1] == fixtures::cyclic_group(4).add);
}

TEST_CASE("oracle equality on the small corpus") {
    std::vector<MonoidPtr> corpus = {
        fixtures::trivial_monoid(),     fixtures::m2(),
        fixtures::m3(),                 fixtures::zmod_mult(4),
        fixtures::zmod_mult(5),         fixtures::cyclic_as_monoid(3),
        fixtures::cyclic_as_monoid(4),  fixtures::klein_as_monoid(),
        fixtures::idempotent_three(),
    };
    for (const auto& m : corpus) {
        EnumerationResult fast = run(m);
        EnumerationResult slow = oracle_enumerate_nearrings(*m);
        CHECK(fast.complete);
        CHECK(fast.additions == slow.additions);
        for (const auto& t : fast.additions) CHECK(validate_nearring(m, t)->order() == m->order);
    }
    CHECK_THROWS_AS(oracle_enumerate_nearrings(*fixtures::zmod_mult(6)), Error);
}

TEST_CASE("scalar-group monoids only produce near-fields") {
    for (const auto& m : {fixtures::trivial_monoid(), fixtures::m2(), fixtures::m3(),
                          dickson_fixture()->monoid}) {
        REQUIRE(check_scalar_group(*m).is_scalar_group);
        EnumerationResult r = run(m);
        CHECK(!r.additions.empty());
        for (const auto& t : r.additions)
            CHECK(classify(*validate_nearring(m, t)).is_nearfield);
    }
}

TEST_CASE("truncation returns a prefix-closed subset") {
    EnumerationResult full = run(fixtures::zmod_mult(4));
    EnumerationResult one = run(fixtures::zmod_mult(4), 1);
    CHECK_FALSE(one.complete);
    REQUIRE(one.additions.size() == 1);
    CHECK(std::find(full.additions.begin(), full.additions.end(), one.additions[0]) !=
          full.additions.end());
}

TEST_CASE("monoid automorphisms") {
    CHECK(monoid_automorphisms(*fixtures::m3()).size() == 1);
    CHECK(monoid_automorphisms(*fixtures::zmod_mult(9)).size() == 4);
    CHECK(monoid_automorphisms(*fixtures::klein_as_monoid()).size() == 6);
    CHECK(monoid_automorphisms(*dickson_fixture()->monoid).size() == 24);
    for (const auto& phi : monoid_automorphisms(*fixtures::zmod_mult(9)))
        CHECK(is_multiplicative_automorphism(*fixtures::zmod_mult(9), phi));
}

TEST_CASE("orbit grouping under automorphism transport") {
    SUBCASE("single table = single orbit") {
        EnumerationResult r = run(fixtures::m3(), std::nullopt, true);
        REQUIRE(r.orbits.has_value());
        CHECK(r.orbits->size() == 1);
    }

    SUBCASE("the two Z/9 additions lie in one orbit") {
        MonoidPtr z9 = fixtures::zmod_mult(9);
        EnumerationResult r = run(z9, std::nullopt, true);
        REQUIRE(r.orbits.has_value());

        const std::vector<Idx> plus = fixtures::z9_plus()->add.add;
        const std::vector<Idx> phi = fixtures::z9_phi()->add.add;
        auto index_of = [&](const std::vector<Idx>& t) {
            auto it = std::find(r.additions.begin(), r.additions.end(), t);
            REQUIRE(it != r.additions.end());
            return static_cast<std::size_t>(it - r.additions.begin());
        };
        std::size_t ip = index_of(plus), iq = index_of(phi);
        bool together = false;
        for (const auto& orbit : *r.orbits) {
            bool has_p = std::find(orbit.begin(), orbit.end(), ip) != orbit.end();
            bool has_q = std::find(orbit.begin(), orbit.end(), iq) != orbit.end();
            if (has_p || has_q) together = has_p && has_q;
        }
        CHECK(together);

        // Orbits partition the enumeration.
        std::size_t covered = 0;
        for (const auto& orbit : *r.orbits) covered += orbit.size();
        CHECK(covered == r.additions.size());
    }

    SUBCASE("the order-9 near-field additions form the transport orbit") {
        MonoidPtr m = dickson_fixture()->monoid;
        EnumerationResult r = run(m);
        REQUIRE(!r.additions.empty());

        std::set<std::vector<Idx>> transports;
        for (const auto& phi : monoid_automorphisms(*m))
            transports.insert(transported_table(dickson_fixture()->add.add, m->order, phi));
        std::set<std::vector<Idx>> enumerated(r.additions.begin(), r.additions.end());
        CHECK(enumerated == transports);

        for (const auto& t : r.additions) {
            NearRingPtr n = validate_nearring(m, t);
            NearRingReport rep = classify(*n);
            CHECK(rep.is_nearfield);
            // Elementary abelian additive structure: every element has order 3.
            for (std::size_t x = 0; x < 9; ++x)
                if (Idx(x) != n->add.zero)
                    CHECK(n->plus(Idx(x), n->plus(Idx(x), Idx(x))) == n->add.zero);
        }
    }
}
