#include <doctest.h>

#include "support.hpp"

using namespace natk;
using natk_test::table_from;

namespace {

ModulePtr z4_bad_action() {
    // 0*v = 2v over the GF(2) monoid: fails (ab)*v = a*(b*v).
    std::vector<Idx> act(8);
    for (std::size_t v = 0; v < 4; ++v) {
        act[v] = static_cast<Idx>(2 * v % 4);
        act[4 + v] = static_cast<Idx>(v);
    }
    return validate_module(fixtures::m2(), fixtures::cyclic_group(4), std::move(act));
}

}  // namespace

TEST_CASE("module validation") {
    CHECK(fixtures::gf3_power(2)->order() == 9);
    CHECK(fixtures::z4_over_m2()->order() == 4);

    try {
        z4_bad_action();
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind == "NotAction");
        CHECK(e.witnesses[0].elements == std::vector<int>{0, 0, 1});
    }
}

TEST_CASE("validate_module agrees with the independent axiom scan") {
    Rng rng(20250810);
    std::vector<ModulePtr> seeds = {fixtures::z4_over_m2(), fixtures::gf3_power(2),
                                    fixtures::gf2_power(2)};
    for (const auto& base : seeds) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Idx> act = base->act;
            // Perturb a few cells.
            for (int k = 0; k < 1 + static_cast<int>(rng.below(3)); ++k)
                act[rng.below(act.size())] = static_cast<Idx>(rng.below(base->order()));
            bool oracle = natk_test::module_axioms_hold(*base->monoid, base->group, act);
            bool accepted = true;
            try {
                validate_module(base->monoid, base->group, act);
            } catch (const Error&) {
                accepted = false;
            }
            CHECK(accepted == oracle);
        }
    }
}

TEST_CASE("orbit and closures") {
    ModulePtr v = fixtures::z4_over_m2();
    ElementSet empty(4);
    CHECK(orbit(*v, empty).count() == 0);
    CHECK(group_closure(*v, empty) == ElementSet::of(4, {0}));
    CHECK(orbit(*v, ElementSet::of(4, {1})) == ElementSet::of(4, {0, 1}));

    ModulePtr z9 = as_module(*fixtures::ring_zmod(9));
    CHECK(group_closure(*z9, ElementSet::of(9, {1})).count() == 9);
    CHECK(group_closure(*z9, ElementSet::of(9, {3})) == ElementSet::of(9, {0, 3, 6}));

    ModulePtr gf9 = fixtures::gf3_power(2);
    Submodule line = generated_submodule(*gf9, ElementSet::of(9, {3}));  // (1,0)
    CHECK(line.carrier.count() == 3);

    // (1,0) in the Z/9 product module generates the 9-element first axis.
    ModulePtr prod = fixtures::z9_product_module();
    Submodule axis = generated_submodule(*prod, ElementSet::of(81, {9}));
    CHECK(axis.carrier.count() == 9);
    for (Idx x : axis.carrier.indices()) CHECK(x % 9 == 0);
}

TEST_CASE("closure operators are extensive, monotone and idempotent") {
    Rng rng(42);
    std::vector<ModulePtr> corpus = {fixtures::z4_over_m2(), fixtures::gf3_power(2),
                                     fixtures::dickson_module()};
    for (const auto& v : corpus) {
        for (int trial = 0; trial < 25; ++trial) {
            ElementSet s(v->order()), t(v->order());
            for (std::size_t i = 0; i < v->order(); ++i) {
                if (rng.below(4) == 0) s.set(i);
                if (rng.below(4) == 0) t.set(i);
            }
            ElementSet st = s | t;
            ElementSet cs = group_closure(*v, s);
            CHECK(cs.contains(s));                                      // extensive
            CHECK(group_closure(*v, st).contains(cs));                  // monotone
            CHECK(group_closure(*v, cs) == cs);                         // idempotent
            ElementSet gs = generated_submodule(*v, s).carrier;
            CHECK(gs.contains(s));
            CHECK(generated_submodule(*v, st).carrier.contains(gs));
            CHECK(generated_submodule(*v, gs).carrier == gs);
        }
    }
}

TEST_CASE("submodule enumeration") {
    CHECK(enumerate_submodules(*one_element_module(fixtures::m3())).size() == 1);

    auto subs_gf9 = enumerate_submodules(*fixtures::gf3_power(2));
    CHECK(subs_gf9.size() == 6);  // {0}, four lines, the plane

    auto subs_z4 = enumerate_submodules(*fixtures::z4_over_m2());
    REQUIRE(subs_z4.size() == 3);
    CHECK(subs_z4[0].carrier == ElementSet::of(4, {0}));
    CHECK(subs_z4[1].carrier == ElementSet::of(4, {0, 2}));
    CHECK(subs_z4[2].carrier == ElementSet::full(4));

    SUBCASE("matches the powerset scan on small modules") {
        for (const auto& v :
             {fixtures::z4_over_m2(), fixtures::gf3_power(2), fixtures::gf2_power(3)}) {
            auto fast = enumerate_submodules(*v);
            auto slow = natk_test::powerset_submodules(*v);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t i = 0; i < fast.size(); ++i)
                CHECK(fast[i].carrier == slow[i]);
        }
    }
}

TEST_CASE("quotients") {
    ModulePtr v = fixtures::z4_over_m2();
    auto subs = enumerate_submodules(*v);

    QuotientResult whole = quotient(v, subs[2]);
    CHECK(whole.module_->order() == 1);

    QuotientResult trivial = quotient(v, subs[0]);
    CHECK(trivial.module_->order() == 4);

    QuotientResult half = quotient(v, subs[1]);  // W = {0, 2}
    CHECK(half.module_->order() == 2);
    CHECK(half.projection.map == std::vector<Idx>{0, 1, 0, 1});

    for (const auto& w : subs)
        CHECK(quotient(v, w).module_->order() * w.carrier.count() == v->order());

    ElementSet not_submodule = ElementSet::of(4, {0, 1});
    CHECK_THROWS_AS(quotient(v, Submodule{not_submodule}), Error);
}

TEST_CASE("products") {
    CHECK(product(fixtures::m3(), {})->order() == 1);

    ModulePtr p1 = fixtures::gf3_power(1);
    ModulePtr p2 = product(fixtures::m3(), {p1, p1});
    CHECK(p2->order() == 9);
    CHECK(p2->group.add == fixtures::gf3_power(2)->group.add);
    CHECK(p2->act == fixtures::gf3_power(2)->act);

    // The Z/9 mixed product: second coordinate adds along the transported
    // addition, so (0,1) + (0,2) = (0, 1 +_phi 2) = (0,6).
    ModulePtr v = fixtures::z9_product_module();
    CHECK(v->add(1, 2) == 6);
    CHECK(v->add(9, 18) == 27);  // first coordinate is plain addition
    CHECK(v->label(10) == "(1,1)");

    CHECK_THROWS_AS(product(fixtures::m3(), {p1, fixtures::z4_over_m2()}), Error);
}

TEST_CASE("morphisms and factorization") {
    ModulePtr p2 = fixtures::gf3_power(2);
    ModulePtr p1 = fixtures::gf3_power(1);

    std::vector<Idx> id(9);
    for (std::size_t i = 0; i < 9; ++i) id[i] = static_cast<Idx>(i);
    ModuleMorphism ident = make_morphism(p2, p2, id);
    Factorization f_id = factorize(ident);
    CHECK(f_id.kernel.carrier.count() == 1);
    CHECK(f_id.image.carrier.count() == 9);
    CHECK(f_id.cokernel->order() == 1);

    std::vector<Idx> zero(9, 0);
    Factorization f_zero = factorize(make_morphism(p2, p2, zero));
    CHECK(f_zero.kernel.carrier.count() == 9);
    CHECK(f_zero.cokernel->order() == 9);

    std::vector<Idx> proj(9);
    for (std::size_t i = 0; i < 9; ++i) proj[i] = static_cast<Idx>(i / 3);
    Factorization f_proj = factorize(make_morphism(p2, p1, proj));
    CHECK(f_proj.kernel.carrier.count() == 3);
    CHECK(f_proj.image.carrier.count() == 3);
    CHECK(f_proj.cokernel->order() == 1);

    SUBCASE("v -> v+1 does not preserve zero") {
        std::vector<Idx> shift{1, 2, 3, 0};
        ModulePtr z4 = fixtures::z4_over_m2();
        try {
            make_morphism(z4, z4, shift);
            FAIL("expected a validation error");
        } catch (const Error& e) {
            CHECK(e.kind == "NotAdditive");
            CHECK(e.witnesses[0].elements == std::vector<int>{0, 0});
        }
    }

    SUBCASE("epi-mono factorization: dom/kernel is the image, elementwise") {
        QuotientResult q = quotient(p2, f_proj.kernel);
        REQUIRE(q.module_->order() == f_proj.image.carrier.count());
        // The induced map class -> image value is a bijection.
        std::vector<Idx> induced(q.module_->order());
        for (std::size_t c = 0; c < q.reps.size(); ++c) induced[c] = proj[q.reps[c]];
        std::sort(induced.begin(), induced.end());
        CHECK(std::unique(induced.begin(), induced.end()) == induced.end());
    }
}

TEST_CASE("product projections and the universal property on small instances") {
    ModulePtr z2 = fixtures::gf2_power(1);
    ModulePtr pair = product(fixtures::m2(), {z2, z2});

    std::vector<Idx> pr1(4), pr2(4);
    for (std::size_t i = 0; i < 4; ++i) {
        pr1[i] = static_cast<Idx>(i / 2);
        pr2[i] = static_cast<Idx>(i % 2);
    }
    ModuleMorphism f1 = make_morphism(pair, z2, pr1);
    ModuleMorphism f2 = make_morphism(pair, z2, pr2);
    (void)f1;
    (void)f2;

    // Morphisms D -> Z2 x Z2 correspond exactly to pairs of morphisms D -> Z2.
    ModulePtr d = fixtures::z4_over_m2();
    auto morphisms_to = [&](const ModulePtr& cod) {
        std::vector<std::vector<Idx>> out;
        std::vector<Idx> map(d->order());
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == d->order()) {
                try {
                    make_morphism(d, cod, map);
                    out.push_back(map);
                } catch (const Error&) {
                }
                return;
            }
            for (std::size_t img = 0; img < cod->order(); ++img) {
                map[i] = static_cast<Idx>(img);
                fill(i + 1);
            }
        };
        fill(0);
        return out;
    };
    auto into_pair = morphisms_to(pair);
    auto into_z2 = morphisms_to(z2);
    CHECK(into_pair.size() == into_z2.size() * into_z2.size());
}

TEST_CASE("action property reports") {
    ActionPropertyReport gf9 = check_action_properties(*fixtures::gf3_power(2));
    CHECK(gf9.fa);
    CHECK(gf9.sa == ActionPropertyReport::Status::Holds);

    ActionPropertyReport trivial =
        check_action_properties(*one_element_module(fixtures::m3()));
    CHECK(trivial.fa);
    CHECK(trivial.sa == ActionPropertyReport::Status::Holds);

    ActionPropertyReport prod = check_action_properties(*fixtures::z9_product_module());
    CHECK_FALSE(prod.fa);
    REQUIRE(prod.fa_witness.has_value());
    auto [a, b, x] = *prod.fa_witness;
    ModulePtr v = fixtures::z9_product_module();
    CHECK(a != b);
    CHECK(x != v->zero());
    CHECK(v->scale(a, x) == v->scale(b, x));

    // Modules over a monoid without zero / minus-one report SA not applicable.
    MonoidPtr c2 = fixtures::cyclic_as_monoid(2);
    std::vector<Idx> act(2 * 3);
    for (std::size_t x2 = 0; x2 < 3; ++x2) {
        act[x2] = static_cast<Idx>(x2);
        act[3 + x2] = static_cast<Idx>((3 - x2) % 3);  // the involution v -> -v
    }
    ModulePtr m = validate_module(c2, fixtures::cyclic_group(3), std::move(act));
    CHECK(check_action_properties(*m).sa == ActionPropertyReport::Status::NotApplicable);
}

TEST_CASE("scan reports are independent of the worker count") {
    ModulePtr v = fixtures::z9_product_module();
    ActionPropertyReport one = check_action_properties(*v, 1);
    ActionPropertyReport four = check_action_properties(*v, 4);
    CHECK(one.fa == four.fa);
    CHECK(one.fa_witness == four.fa_witness);
    CHECK(one.sa == four.sa);
}
