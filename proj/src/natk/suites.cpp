#include "natk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace natk {
namespace suites {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

std::string fmt_elems(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

/// All additive endomorphisms of a group, via images of a greedy generating
/// set. Small carriers only.
std::vector<std::vector<Idx>> additive_endomorphisms(const FiniteAbelianGroup& g) {
    const std::size_t n = g.order;

    std::vector<Idx> gens;
    ElementSet closed(n);
    closed.set(g.zero);
    std::vector<std::pair<int, Idx>> parent(n, {-1, 0});  // (previous element, generator)
    for (std::size_t x = 0; x < n; ++x) {
        if (closed.test(x)) continue;
        gens.push_back(static_cast<Idx>(x));
        // BFS the enlarged subgroup, recording one decomposition per element.
        std::vector<Idx> frontier = closed.indices();
        while (!frontier.empty()) {
            std::vector<Idx> next;
            for (Idx e : frontier)
                for (Idx gen : gens) {
                    Idx y = g.at(e, gen);
                    if (!closed.test(y)) {
                        closed.set(y);
                        parent[y] = {static_cast<int>(e), gen};
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
    }

    std::vector<std::size_t> gen_order(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Idx x = gens[i];
        std::size_t o = 1;
        while (x != g.zero) {
            x = g.at(x, gens[i]);
            ++o;
        }
        gen_order[i] = o;
    }

    auto power = [&](Idx x, std::size_t k) {
        Idx acc = g.zero;
        for (std::size_t i = 0; i < k; ++i) acc = g.at(acc, x);
        return acc;
    };

    std::vector<std::vector<Idx>> out;
    std::vector<Idx> images(gens.size());
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (i == gens.size()) {
            std::vector<Idx> f(n);
            f[g.zero] = g.zero;
            std::vector<int> pos(n, -1);
            for (std::size_t k = 0; k < gens.size(); ++k)
                pos[gens[k]] = static_cast<int>(k);
            // Extend along the recorded decompositions.
            std::vector<Idx> order;
            order.push_back(g.zero);
            std::vector<bool> done(n, false);
            done[g.zero] = true;
            for (std::size_t guard = 0; guard < n && order.size() < n; ++guard)
                for (std::size_t x = 0; x < n; ++x) {
                    if (done[x]) continue;
                    auto [prev, gen] = parent[x];
                    if (prev >= 0 && done[static_cast<std::size_t>(prev)]) {
                        f[x] = g.at(f[static_cast<std::size_t>(prev)],
                                    images[static_cast<std::size_t>(pos[gen])]);
                        done[x] = true;
                        order.push_back(static_cast<Idx>(x));
                    }
                }
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t w = 0; w < n; ++w)
                    if (f[g.at(static_cast<Idx>(u), static_cast<Idx>(w))] != g.at(f[u], f[w]))
                        return;
            out.push_back(std::move(f));
            return;
        }
        for (std::size_t img = 0; img < n; ++img) {
            if (power(static_cast<Idx>(img), gen_order[i]) != g.zero) continue;
            images[i] = static_cast<Idx>(img);
            pick(i + 1);
        }
    };
    pick(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Idx> compose(const std::vector<Idx>& f, const std::vector<Idx>& g) {
    std::vector<Idx> h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
    return h;
}

bool is_identity(const std::vector<Idx>& f) {
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] != x) return false;
    return true;
}

/// Modules over M2 on the given group: one per idempotent additive
/// endomorphism (the image of the scalar 0).
std::vector<ModulePtr> m2_modules_on(const FiniteAbelianGroup& g) {
    MonoidPtr m2 = fixtures::m2();
    std::vector<ModulePtr> out;
    for (const auto& z : additive_endomorphisms(g)) {
        if (compose(z, z) != z) continue;
        std::vector<Idx> act(2 * g.order);
        for (std::size_t v = 0; v < g.order; ++v) {
            act[v] = z[v];
            act[g.order + v] = static_cast<Idx>(v);
        }
        out.push_back(validate_module(m2, g, std::move(act)));
    }
    return out;
}

/// Modules over M3 on the given group: pairs (z, t) with z idempotent,
/// t*t = 1 and z t = t z = z.
std::vector<ModulePtr> m3_modules_on(const FiniteAbelianGroup& g) {
    MonoidPtr m3 = fixtures::m3();
    auto endos = additive_endomorphisms(g);
    std::vector<ModulePtr> out;
    for (const auto& z : endos) {
        if (compose(z, z) != z) continue;
        for (const auto& t : endos) {
            if (!is_identity(compose(t, t))) continue;
            if (compose(z, t) != z || compose(t, z) != z) continue;
            std::vector<Idx> act(3 * g.order);
            for (std::size_t v = 0; v < g.order; ++v) {
                act[v] = z[v];
                act[g.order + v] = static_cast<Idx>(v);
                act[2 * g.order + v] = t[v];
            }
            out.push_back(validate_module(m3, g, std::move(act)));
        }
    }
    return out;
}

std::vector<FiniteAbelianGroup> groups_up_to(std::size_t max_order) {
    static const std::vector<std::vector<std::size_t>> shapes = {
        {1},    {2},    {3},    {4},    {2, 2}, {5},       {6},
        {7},    {8},    {2, 4}, {2, 2, 2}};
    std::vector<FiniteAbelianGroup> out;
    for (const auto& s : shapes) {
        std::size_t total = 1;
        for (auto x : s) total *= x;
        if (total <= max_order) out.push_back(fixtures::group_product(s));
    }
    return out;
}

}  // namespace

SuiteResult hash_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "hash";

    {
        NearRingPtr h = hash_construction(*fixtures::ring_zmod(2), 1);
        NearRingReport rep = classify(*h);
        r.check("z2-n1-is-ring", rep.is_ring);
        std::vector<Idx> sols = eta_solutions(*h->monoid);
        r.check("z2-n1-involutions", sols == std::vector<Idx>{2, 3},
                "solutions of eta^2=1: " + fmt_elems({sols.begin(), sols.end()}));
        bool minus_one_ok = h->monoid->minus_one && *h->monoid->minus_one == 3;
        r.check("z2-n1-minus-one", minus_one_ok);
        r.check("z2-n1-additive-inverse", h->add.neg[2] == 2 && h->add.neg[2] != 3,
                "-(1,0) = (1,0) != (1,1)");
        r.check("z2-n1-s0-s1", h->monoid->zero && *h->monoid->zero == 0);
    }

    for (std::size_t m : {2, 3, 4, 6}) {
        NearRingPtr base = fixtures::ring_zmod(m);
        for (unsigned n = 1; n <= 3; ++n) {
            auto pw = [&](Idx a) {
                Idx p = base->monoid->one;
                for (unsigned i = 0; i < n; ++i) p = base->mul(p, a);
                return p;
            };
            bool law_mul = true, law_add = true;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t c = 0; c < m; ++c) {
                    Idx ia = static_cast<Idx>(a), ic = static_cast<Idx>(c);
                    if (pw(base->mul(ia, ic)) != base->mul(pw(ia), pw(ic))) law_mul = false;
                    if (pw(base->plus(ia, ic)) != base->plus(pw(ia), pw(ic))) law_add = false;
                }
            bool built = false, built_ring = false;
            std::string tag = "z" + std::to_string(m) + "-n" + std::to_string(n);
            try {
                NearRingPtr h = hash_construction(*base, n);
                built = true;
                built_ring = classify(*h).is_ring;
            } catch (const Error& e) {
                if (e.kind != "PowerLawFails") throw;
            }
            r.check(tag + "-iff-nearring", built == law_mul);
            if (built) r.check(tag + "-iff-ring", built_ring == law_add);
        }
    }

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult z9_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "z9";

    NearRingPtr phi = fixtures::z9_phi();
    r.check("transport-validates", true);
    r.check("one-plus-phi-two", phi->plus(1, 2) == 6,
            "1 +_phi 2 = " + std::to_string(phi->plus(1, 2)));

    ModulePtr v = fixtures::z9_product_module();
    MultiNearRing rr = fixtures::z9_multi();
    AndreReport andre = check_andre(*v, rr);
    {
        std::string info = andre.is_andre
                               ? "module decision holds"
                               : "no admissible witness subset; first unrecovered element " +
                                     v->label(*andre.qk2_failure);
        r.check("product-module-is-andre", andre.is_andre, info);
    }

    NvsReport nvs = check_nvs(*v);
    r.check("product-module-not-nvs", !nvs.is_nvs);
    bool witness_ok = nvs.failure == "monoid-not-scalar-group" && nvs.scalar.failure &&
                      nvs.scalar.failure->label == "non-invertible" &&
                      nvs.scalar.failure->elements == std::vector<int>{3};
    r.check("nvs-failure-witness", witness_ok, "non-invertible element [3]");

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult enumeration_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "enumeration";

    struct Entry {
        std::string name;
        MonoidPtr monoid;
        std::optional<std::size_t> expect;
    };
    std::vector<Entry> corpus = {
        {"trivial", fixtures::trivial_monoid(), 1},
        {"m2", fixtures::m2(), 1},
        {"m3", fixtures::m3(), 1},
        {"z4-mult", fixtures::zmod_mult(4), std::nullopt},
        {"c2", fixtures::cyclic_as_monoid(2), 0},
        {"c3", fixtures::cyclic_as_monoid(3), 0},
        {"c4", fixtures::cyclic_as_monoid(4), 0},
        {"klein", fixtures::klein_as_monoid(), 0},
        {"idempotent-three", fixtures::idempotent_three(), std::nullopt},
    };

    for (const auto& e : corpus) {
        EnumerationTask task;
        task.monoid = e.monoid;
        EnumerationResult fast = enumerate_nearrings(task);
        EnumerationResult slow = oracle_enumerate_nearrings(*e.monoid);
        bool equal = fast.complete && fast.additions == slow.additions;
        std::string info = std::to_string(fast.additions.size()) + " addition table(s)";
        r.check(e.name + "-oracle-equality", equal, info);
        if (e.expect) r.check(e.name + "-count", fast.additions.size() == *e.expect, info);
        for (const auto& t : fast.additions) validate_nearring(e.monoid, t);
    }

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult dickson_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "dickson";

    NearRingPtr j = dickson_fixture();
    NearRingReport rep = classify(*j);
    r.check("near-field", rep.is_nearfield);
    r.check("not-a-ring", !rep.is_ring);

    auto census = nonzero_order_census(*j);
    std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 1}, {2, 1}, {4, 6}};
    std::ostringstream c;
    for (auto [o, k] : census) c << o << ":" << k << " ";
    r.check("order-census", census == expected, c.str());

    ModulePtr jm = fixtures::dickson_module();
    ModulePtr j2 = fixtures::dickson_square();
    r.check("nvs-j", check_nvs(*jm).is_nvs);
    r.check("nvs-j2", check_nvs(*j2).is_nvs);

    ElementSet qv = quasi_kernel(*j2).qv;
    bool all_generated = true;
    std::size_t count = 0;
    for (const Submodule& w : enumerate_submodules(*j2)) {
        ++count;
        InducedSubmodule sub = submodule_as_module(j2, w);
        ElementSet qw = quasi_kernel(*sub.module_).qv;
        ElementSet qw_in_v(j2->order());
        for (std::size_t i = 0; i < sub.elements.size(); ++i)
            if (qw.test(i)) qw_in_v.set(sub.elements[i]);
        all_generated = all_generated && group_closure(*j2, qw_in_v) == w.carrier;
    }
    r.check("submodules-quasi-kernel-generated", all_generated,
            std::to_string(count) + " submodules");

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult lema_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "lema";

    std::vector<std::pair<std::string, NearRingPtr>> corpus;
    for (std::size_t m : {2, 3, 4, 6}) {
        NearRingPtr base = fixtures::ring_zmod(m);
        corpus.emplace_back("z" + std::to_string(m), base);
        for (unsigned n = 1; n <= 3; ++n) {
            try {
                corpus.emplace_back("hash-z" + std::to_string(m) + "-n" + std::to_string(n),
                                    hash_construction(*base, n));
            } catch (const Error&) {
            }
        }
    }
    corpus.emplace_back("z9-plus", fixtures::z9_plus());
    corpus.emplace_back("z9-phi", fixtures::z9_phi());
    corpus.emplace_back("dickson", dickson_fixture());
    corpus.emplace_back("fun-z2", fun_nearring(fixtures::cyclic_group(2)));
    corpus.emplace_back("fun-z3", fun_nearring(fixtures::cyclic_group(3)));

    std::vector<std::pair<std::string, MonoidPtr>> monoids = {
        {"m2", fixtures::m2()},
        {"m3", fixtures::m3()},
        {"z4-mult", fixtures::zmod_mult(4)},
        {"dickson-monoid", dickson_fixture()->monoid},
    };
    for (const auto& [name, monoid] : monoids) {
        EnumerationTask task;
        task.monoid = monoid;
        EnumerationResult res = enumerate_nearrings(task);
        std::size_t i = 0;
        for (const auto& t : res.additions)
            corpus.emplace_back("enum-" + name + "-" + std::to_string(i++),
                                validate_nearring(monoid, t));
    }

    std::size_t violations = 0;
    for (const auto& [name, n] : corpus) {
        try {
            verify_lema(*n);
        } catch (const Error&) {
            ++violations;
            r.check("lema-" + name, false);
        }
    }
    r.check("implications", violations == 0,
            std::to_string(corpus.size()) + " near-rings, " + std::to_string(violations) +
                " violations");

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult closure_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "closure";

    struct Family {
        std::string name;
        ModulePtr v;
        MultiNearRing rr;
    };
    std::vector<Family> families;
    families.push_back({"z9-product", fixtures::z9_product_module(), fixtures::z9_multi()});
    {
        NearRingPtr j = dickson_fixture();
        families.push_back({"dickson-square", fixtures::dickson_square(),
                            enumerate_multi_nearring(j->monoid)});
    }
    families.push_back({"gf3-cube", fixtures::gf3_power(3),
                        make_multi_nearring(fixtures::m3(), {fixtures::ring_zmod(3)})});

    for (const auto& fam : families) {
        std::size_t sub_fail = 0, quo_fail = 0, sub_count = 0;
        std::optional<std::string> first;
        for (const Submodule& w : enumerate_submodules(*fam.v)) {
            ++sub_count;
            InducedSubmodule sub = submodule_as_module(fam.v, w);
            if (!check_andre(*sub.module_, fam.rr).is_andre) {
                ++sub_fail;
                if (!first)
                    first = "submodule of size " + std::to_string(w.carrier.count());
            }
            QuotientResult q = quotient(fam.v, w);
            if (!check_andre(*q.module_, fam.rr).is_andre) ++quo_fail;
        }
        r.check(fam.name + "-submodules", sub_fail == 0,
                std::to_string(sub_count) + " submodules, " + std::to_string(sub_fail) +
                    " fail" + (first ? " (first: " + *first + ")" : ""));
        r.check(fam.name + "-quotients", quo_fail == 0,
                std::to_string(sub_count) + " quotients, " + std::to_string(quo_fail) + " fail");

        ModulePtr square = product(fam.v->monoid, {fam.v, fam.v});
        r.check(fam.name + "-self-product", check_andre(*square, fam.rr).is_andre,
                "order " + std::to_string(square->order()));
    }

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult qstar_oracle_suite(std::uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "qstar-oracle";

    std::size_t instances = 0, disagreements = 0;

    // Exhaustive: every module structure over M2 on groups of order <= 6.
    NearRingPtr f2 = fixtures::ring_zmod(2);
    for (const auto& g : groups_up_to(6)) {
        for (const ModulePtr& v : m2_modules_on(g)) {
            for (int with_ring : {0, 1}) {
                std::vector<NearRingPtr> designated;
                if (with_ring) designated.push_back(f2);
                MultiNearRing rr = make_multi_nearring(fixtures::m2(), designated);
                ++instances;
                if (check_andre(*v, rr).is_andre != oracle_exists_q(*v, rr)) ++disagreements;
            }
        }
    }
    r.check("m2-exhaustive", disagreements == 0,
            std::to_string(instances) + " instances, " + std::to_string(disagreements) +
                " disagreements");

    // Seeded random modules over M3.
    Rng rng(seed ^ 0xA11CE5ull);
    std::vector<ModulePtr> randoms = random_m3_modules(rng, 100, 8);
    NearRingPtr f3 = fixtures::ring_zmod(3);
    std::size_t rnd_disagree = 0;
    for (const ModulePtr& v : randoms) {
        std::vector<NearRingPtr> designated;
        if (rng.coin()) designated.push_back(f3);
        MultiNearRing rr = make_multi_nearring(fixtures::m3(), designated);
        if (check_andre(*v, rr).is_andre != oracle_exists_q(*v, rr)) ++rnd_disagree;
    }
    r.check("m3-random", rnd_disagree == 0,
            std::to_string(randoms.size()) + " seeded modules, " +
                std::to_string(rnd_disagree) + " disagreements");

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult single_ring_suite(std::uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "single-ring";

    std::size_t instances = 0, violations = 0;
    MultiNearRing r2 = make_multi_nearring(fixtures::m2(), {fixtures::ring_zmod(2)});
    for (const auto& g : groups_up_to(6))
        for (const ModulePtr& v : m2_modules_on(g)) {
            ++instances;
            try {
                check_ring_module_equiv(*v, r2);
            } catch (const Error&) {
                ++violations;
            }
        }

    Rng rng(seed ^ 0x51B6ull);
    MultiNearRing r3 = make_multi_nearring(fixtures::m3(), {fixtures::ring_zmod(3)});
    for (const ModulePtr& v : random_m3_modules(rng, 100, 8)) {
        ++instances;
        try {
            check_ring_module_equiv(*v, r3);
        } catch (const Error&) {
            ++violations;
        }
    }

    r.check("decision-equals-distributivity-scan", violations == 0,
            std::to_string(instances) + " instances, " + std::to_string(violations) +
                " disagreements");
    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult andremodule_tfae_suite() {
    Timer timer;
    SuiteResult r;
    r.name = "andremodule";

    struct Family {
        std::string name;
        MonoidPtr monoid;
        std::vector<std::pair<std::string, ModulePtr>> modules;
    };
    std::vector<Family> families;
    {
        Family m2{"m2", fixtures::m2(), {}};
        m2.modules = {{"trivial", one_element_module(m2.monoid)},
                      {"gf2", as_module(*fixtures::ring_zmod(2))},
                      {"z4", fixtures::z4_over_m2()},
                      {"gf2^2", fixtures::gf2_power(2)},
                      {"gf2^3", fixtures::gf2_power(3)}};
        families.push_back(std::move(m2));
    }
    {
        Family m3{"m3", fixtures::m3(), {}};
        m3.modules = {{"trivial", one_element_module(m3.monoid)},
                      {"gf3", as_module(*fixtures::ring_zmod(3))},
                      {"gf3^2", fixtures::gf3_power(2)},
                      {"gf3^3", fixtures::gf3_power(3)},
                      {"z6", fixtures::z6_over_m3()}};
        families.push_back(std::move(m3));
    }
    {
        NearRingPtr j = dickson_fixture();
        Family dk{"dickson", j->monoid, {}};
        dk.modules = {{"trivial", one_element_module(j->monoid)},
                      {"j", fixtures::dickson_module()},
                      {"j^2", fixtures::dickson_square()},
                      {"half-action", fixtures::dickson_half_action()}};
        families.push_back(std::move(dk));
    }

    for (const auto& fam : families) {
        MultiNearRing rr = enumerate_multi_nearring(fam.monoid);
        std::size_t mismatches = 0;
        for (const auto& [name, v] : fam.modules) {
            bool nvs = check_nvs(*v).is_nvs;
            bool andre = check_andre(*v, rr).is_andre;
            if (nvs != andre) ++mismatches;
        }
        r.check(fam.name + "-nvs-equals-andre", mismatches == 0,
                std::to_string(fam.modules.size()) + " modules (designated set size " +
                    std::to_string(rr.designated.size()) + ")");

        for (const auto& [name, v] : fam.modules) {
            if (!check_nvs(*v).is_nvs) continue;
            bool tfae_ok = true;
            std::string info;
            try {
                check_tfae(v);
            } catch (const Error& e) {
                tfae_ok = false;
                info = e.what();
            }
            r.check(fam.name + "-" + name + "-tfae", tfae_ok, info);

            bool decomp_ok = true;
            std::string why;
            try {
                for (const auto& cert : decompose_all(*v, rr)) {
                    std::size_t oracle =
                        mv_oracle(*v, quasi_kernel(*v).qv, cert.target, cert.m_v + 1);
                    if (oracle != cert.m_v) {
                        decomp_ok = false;
                        why = "m_v mismatch at " + v->label(cert.target);
                        break;
                    }
                }
            } catch (const Error& e) {
                decomp_ok = false;
                why = e.what();
            }
            r.check(fam.name + "-" + name + "-decompose", decomp_ok, why);
        }
    }

    r.elapsed_ms = timer.ms();
    return r;
}

SuiteResult factorization_suite(std::uint64_t seed) {
    Timer timer;
    SuiteResult r;
    r.name = "factorization";

    struct Family {
        std::string name;
        std::vector<ModulePtr> modules;
        MultiNearRing rr;
    };
    std::vector<Family> families;
    families.push_back({"gf3",
                        {fixtures::gf3_power(1), fixtures::gf3_power(2), fixtures::gf3_power(3)},
                        make_multi_nearring(fixtures::m3(), {fixtures::ring_zmod(3)})});
    families.push_back({"gf2",
                        {fixtures::gf2_power(1), fixtures::gf2_power(2), fixtures::gf2_power(3)},
                        make_multi_nearring(fixtures::m2(), {fixtures::ring_zmod(2)})});
    {
        NearRingPtr j = dickson_fixture();
        families.push_back({"dickson",
                            {fixtures::dickson_module(), fixtures::dickson_square()},
                            enumerate_multi_nearring(j->monoid)});
    }
    {
        NearRingPtr z9 = fixtures::z9_plus();
        ModulePtr m = as_module(*z9);
        families.push_back({"z9-ring",
                            {m, product(z9->monoid, {m, m})},
                            make_multi_nearring(z9->monoid, {z9})});
    }

    Rng rng(seed ^ 0xFAC702ull);
    std::size_t total = 0, violations = 0;
    for (auto& fam : families) {
        std::vector<ModuleMorphism> fs = random_morphisms(rng, fam.modules, 14);
        for (const auto& f : fs) {
            ++total;
            Factorization fac = factorize(f);
            bool ok = fac.kernel.carrier.count() * fac.image.carrier.count() == f.dom->order();
            InducedSubmodule ker = submodule_as_module(f.dom, fac.kernel);
            ok = ok && check_andre(*ker.module_, fam.rr).is_andre;
            ok = ok && check_andre(*fac.cokernel, fam.rr).is_andre;
            if (!ok) ++violations;
        }
    }
    r.check("kernel-cokernel-inheritance", total >= 50 && violations == 0,
            std::to_string(total) + " morphisms, " + std::to_string(violations) +
                " violations");

    r.elapsed_ms = timer.ms();
    return r;
}

std::vector<std::string> all_suite_names() {
    return {"hash",        "z9",          "enumeration", "dickson",     "lema",
            "closure",     "qstar-oracle", "single-ring", "andremodule", "factorization"};
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, std::uint64_t seed) {
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            auto all = all_suite_names();
            expanded.insert(expanded.end(), all.begin(), all.end());
        } else {
            expanded.push_back(n);
        }
    }
    std::vector<SuiteResult> out;
    for (const auto& n : expanded) {
        if (n == "hash")
            out.push_back(hash_suite());
        else if (n == "z9")
            out.push_back(z9_suite());
        else if (n == "enumeration")
            out.push_back(enumeration_suite());
        else if (n == "dickson")
            out.push_back(dickson_suite());
        else if (n == "lema")
            out.push_back(lema_suite());
        else if (n == "closure")
            out.push_back(closure_suite());
        else if (n == "qstar-oracle")
            out.push_back(qstar_oracle_suite(seed));
        else if (n == "single-ring" || n == "singleR")
            out.push_back(single_ring_suite(seed));
        else if (n == "andremodule")
            out.push_back(andremodule_tfae_suite());
        else if (n == "factorization")
            out.push_back(factorization_suite(seed));
        else
            fail(ErrorClass::Usage, "UnknownSuite", "no suite named " + n);
    }
    return out;
}

std::vector<ModulePtr> random_m3_modules(Rng& rng, std::size_t count, std::size_t max_order) {
    // Valid (z, t) pairs per group shape are enumerated once, then sampled.
    std::vector<std::vector<ModulePtr>> catalog;
    for (const auto& g : groups_up_to(max_order)) {
        if (g.order < 2) continue;
        auto mods = m3_modules_on(g);
        if (!mods.empty()) catalog.push_back(std::move(mods));
    }
    std::vector<ModulePtr> out;
    out.reserve(count);
    while (out.size() < count) {
        const auto& bucket = catalog[rng.below(catalog.size())];
        out.push_back(bucket[rng.below(bucket.size())]);
    }
    return out;
}

std::vector<ModuleMorphism> random_morphisms(Rng& rng, const std::vector<ModulePtr>& pool,
                                             std::size_t count) {
    struct GenInfo {
        std::vector<Idx> gens;
        std::vector<std::pair<int, Idx>> parent;
    };
    auto analyze = [](const MModule& v) {
        GenInfo info;
        info.parent.assign(v.order(), {-1, 0});
        ElementSet closed(v.order());
        closed.set(v.zero());
        for (std::size_t x = 0; x < v.order(); ++x) {
            if (closed.test(x)) continue;
            info.gens.push_back(static_cast<Idx>(x));
            std::vector<Idx> frontier = closed.indices();
            while (!frontier.empty()) {
                std::vector<Idx> next;
                for (Idx e : frontier)
                    for (Idx gen : info.gens) {
                        Idx y = v.add(e, gen);
                        if (!closed.test(y)) {
                            closed.set(y);
                            info.parent[y] = {static_cast<int>(e), gen};
                            next.push_back(y);
                        }
                    }
                frontier = std::move(next);
            }
        }
        return info;
    };

    std::vector<GenInfo> infos;
    infos.reserve(pool.size());
    for (const auto& v : pool) infos.push_back(analyze(*v));

    std::vector<ModuleMorphism> out;
    std::size_t attempts = 0, max_attempts = count * 400;
    while (out.size() < count && attempts < max_attempts) {
        ++attempts;
        std::size_t di = rng.below(pool.size()), ci = rng.below(pool.size());
        const ModulePtr& dom = pool[di];
        const ModulePtr& cod = pool[ci];
        if (!same_monoid(*dom->monoid, *cod->monoid)) continue;
        const GenInfo& info = infos[di];

        std::vector<Idx> map(dom->order());
        map[dom->zero()] = cod->zero();
        std::map<Idx, Idx> gen_image;
        for (Idx g : info.gens) gen_image[g] = static_cast<Idx>(rng.below(cod->order()));
        // Fill along recorded decompositions.
        std::vector<bool> done(dom->order(), false);
        done[dom->zero()] = true;
        for (std::size_t guard = 0; guard < dom->order(); ++guard)
            for (std::size_t x = 0; x < dom->order(); ++x) {
                if (done[x]) continue;
                auto [prev, gen] = info.parent[x];
                if (prev >= 0 && done[static_cast<std::size_t>(prev)]) {
                    map[x] = cod->add(map[static_cast<std::size_t>(prev)], gen_image[gen]);
                    done[x] = true;
                }
            }
        try {
            out.push_back(make_morphism(dom, cod, std::move(map)));
        } catch (const Error&) {
        }
    }
    return out;
}

std::size_t mv_oracle(const MModule& v, const ElementSet& qv, Idx target, std::size_t max_len) {
    if (target == v.zero()) return 0;
    std::vector<Idx> steps;
    for (Idx q : qv.indices())
        if (q != v.zero()) steps.push_back(q);

    std::function<bool(Idx, std::size_t, std::size_t)> reach = [&](Idx rest, std::size_t k,
                                                                   std::size_t lo) {
        if (k == 0) return rest == v.zero();
        for (std::size_t i = lo; i < steps.size(); ++i)
            if (reach(v.group.sub(rest, steps[i]), k - 1, i)) return true;
        return false;
    };
    for (std::size_t k = 1; k <= max_len; ++k)
        if (reach(target, k, 0)) return k;
    return std::numeric_limits<std::size_t>::max();
}

}  // namespace suites
}  // namespace natk
