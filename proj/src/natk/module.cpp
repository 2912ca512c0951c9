#include "natk/module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace natk {

ModulePtr validate_module(MonoidPtr monoid, FiniteAbelianGroup group, std::vector<Idx> act,
                          std::vector<std::string> labels) {
    if (!monoid) fail(ErrorClass::Usage, "NoMonoid", "module: monoid reference required");
    const std::size_t nm = monoid->order, nv = group.order;
    if (act.size() != nm * nv)
        fail_validation("BadShape", "module: action table must be |M| x |V|");
    for (auto x : act)
        if (x >= nv) fail_validation("BadShape", "module: action entry out of range");
    if (labels.empty()) labels = default_labels(nv);
    if (labels.size() != nv) fail_validation("BadShape", "module: need one label per element");

    MModule m;
    m.monoid = std::move(monoid);
    m.group = std::move(group);
    m.act = std::move(act);
    m.labels = std::move(labels);

    const FiniteMonoid& mon = *m.monoid;
    for (std::size_t v = 0; v < nv; ++v)
        if (m.scale(mon.one, static_cast<Idx>(v)) != v)
            fail_validation("NotUnital", "module: 1*v != v",
                            {{"NotUnital", {static_cast<int>(v)}}});

    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b) {
            Idx ab = mon.at(static_cast<Idx>(a), static_cast<Idx>(b));
            for (std::size_t v = 0; v < nv; ++v) {
                Idx lhs = m.scale(ab, static_cast<Idx>(v));
                Idx rhs = m.scale(static_cast<Idx>(a), m.scale(static_cast<Idx>(b),
                                                               static_cast<Idx>(v)));
                if (lhs != rhs)
                    fail_validation("NotAction", "module: (ab)*v != a*(b*v)",
                                    {{"NotAction", {static_cast<int>(a), static_cast<int>(b),
                                                    static_cast<int>(v)}}});
            }
        }

    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t u = 0; u < nv; ++u)
            for (std::size_t v = 0; v < nv; ++v) {
                Idx lhs = m.scale(static_cast<Idx>(a), m.add(static_cast<Idx>(u),
                                                             static_cast<Idx>(v)));
                Idx rhs = m.add(m.scale(static_cast<Idx>(a), static_cast<Idx>(u)),
                                m.scale(static_cast<Idx>(a), static_cast<Idx>(v)));
                if (lhs != rhs)
                    fail_validation("NotEndomorphism", "module: a*(u+v) != a*u + a*v",
                                    {{"NotEndomorphism", {static_cast<int>(a),
                                                          static_cast<int>(u),
                                                          static_cast<int>(v)}}});
            }

    // Consequences a*0 = 0 and a*(-v) = -(a*v); cannot fail once the above hold.
    for (std::size_t a = 0; a < nm; ++a) {
        if (m.scale(static_cast<Idx>(a), m.zero()) != m.zero())
            fail(ErrorClass::Internal, "BrokenConsequence", "module: a*0 != 0");
        for (std::size_t v = 0; v < nv; ++v)
            if (m.scale(static_cast<Idx>(a), m.neg(static_cast<Idx>(v))) !=
                m.neg(m.scale(static_cast<Idx>(a), static_cast<Idx>(v))))
                fail(ErrorClass::Internal, "BrokenConsequence", "module: a*(-v) != -(a*v)");
    }

    return std::make_shared<const MModule>(std::move(m));
}

ElementSet orbit(const MModule& v, const ElementSet& s) {
    ElementSet out(v.order());
    for (std::size_t x = 0; x < s.size(); ++x) {
        if (!s.test(x)) continue;
        for (std::size_t a = 0; a < v.monoid->order; ++a)
            out.set(v.scale(static_cast<Idx>(a), static_cast<Idx>(x)));
    }
    return out;
}

ElementSet group_closure(const MModule& v, const ElementSet& s) {
    const FiniteAbelianGroup& g = v.group;
    ElementSet closed(g.order);
    closed.set(g.zero);
    for (std::size_t x = 0; x < s.size(); ++x)
        if (s.test(x) && !closed.test(x))
            closed = subgroup_extend(g, closed, static_cast<Idx>(x));
    return closed;
}

ElementSet subgroup_extend(const FiniteAbelianGroup& g, const ElementSet& base, Idx gen) {
    if (base.test(gen)) return base;
    // Multiples of gen, then all coset translates of the base subgroup.
    std::vector<Idx> cyc;
    Idx x = gen;
    while (x != g.zero) {
        cyc.push_back(x);
        x = g.at(x, gen);
    }
    ElementSet out = base;
    auto members = base.indices();
    for (Idx c : cyc)
        for (Idx b : members) out.set(g.at(b, c));
    return out;
}

Submodule generated_submodule(const MModule& v, const ElementSet& s) {
    ElementSet carrier = group_closure(v, orbit(v, s));
    // The group closure of an orbit is action-stable; certify anyway.
    if (!is_submodule(v, carrier))
        fail(ErrorClass::Internal, "NotClosed", "generated set is not a submodule");
    return Submodule{carrier};
}

bool is_submodule(const MModule& v, const ElementSet& s) {
    if (s.size() != v.order() || !s.test(v.zero())) return false;
    auto members = s.indices();
    for (Idx x : members) {
        if (!s.test(v.neg(x))) return false;
        for (Idx y : members)
            if (!s.test(v.add(x, y))) return false;
        for (std::size_t a = 0; a < v.monoid->order; ++a)
            if (!s.test(v.scale(static_cast<Idx>(a), x))) return false;
    }
    return true;
}

std::vector<Submodule> enumerate_submodules(const MModule& v, std::size_t bound) {
    if (v.order() > bound)
        fail(ErrorClass::Bound, "BoundExceeded",
             "submodule enumeration bound exceeded: |V| = " + std::to_string(v.order()));

    auto less = [](const ElementSet& a, const ElementSet& b) { return a.canonical_less(b); };
    std::set<ElementSet, decltype(less)> known(less);

    ElementSet empty(v.order());
    ElementSet zero_only = generated_submodule(v, empty).carrier;
    known.insert(zero_only);
    std::deque<ElementSet> frontier{zero_only};

    while (!frontier.empty()) {
        ElementSet w = frontier.front();
        frontier.pop_front();
        for (std::size_t x = 0; x < v.order(); ++x) {
            if (w.test(x)) continue;
            ElementSet gens = w;
            gens.set(x);
            ElementSet bigger = generated_submodule(v, gens).carrier;
            if (known.insert(bigger).second) frontier.push_back(bigger);
        }
    }

    std::vector<Submodule> out;
    out.reserve(known.size());
    for (const auto& c : known) out.push_back(Submodule{c});
    return out;
}

QuotientResult quotient(ModulePtr v, const Submodule& w) {
    if (!is_submodule(*v, w.carrier))
        fail_validation("NotSubmodule", "quotient: subset is not a submodule");

    const std::size_t nv = v->order();
    const std::size_t nm = v->monoid->order;
    std::vector<int> cls(nv, -1);
    std::vector<Idx> reps;
    auto members = w.carrier.indices();
    for (std::size_t x = 0; x < nv; ++x) {
        if (cls[x] >= 0) continue;
        int k = static_cast<int>(reps.size());
        reps.push_back(static_cast<Idx>(x));  // x is minimal in its coset: ascending scan
        for (Idx m : members) cls[v->add(static_cast<Idx>(x), m)] = k;
    }

    const std::size_t nq = reps.size();
    if (nq * w.carrier.count() != nv)
        fail(ErrorClass::Internal, "BadCosets", "quotient: |V/W| * |W| != |V|");

    std::vector<Idx> qadd(nq * nq), qact(nm * nq);
    std::vector<std::string> qlabels(nq);
    for (std::size_t i = 0; i < nq; ++i) qlabels[i] = "[" + v->label(reps[i]) + "]";
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < nq; ++j)
            qadd[i * nq + j] = static_cast<Idx>(cls[v->add(reps[i], reps[j])]);
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t i = 0; i < nq; ++i)
            qact[a * nq + i] = static_cast<Idx>(cls[v->scale(static_cast<Idx>(a), reps[i])]);

    ModulePtr q = validate_module(v->monoid, validate_abelian_group(nq, std::move(qadd)),
                                  std::move(qact), std::move(qlabels));

    std::vector<Idx> proj(nv);
    for (std::size_t x = 0; x < nv; ++x) proj[x] = static_cast<Idx>(cls[x]);
    ModuleMorphism pi = make_morphism(v, q, std::move(proj));
    return QuotientResult{q, std::move(pi), std::move(reps)};
}

ModulePtr one_element_module(MonoidPtr monoid) {
    FiniteAbelianGroup g = validate_abelian_group(1, {0});
    std::vector<Idx> act(monoid->order, 0);
    return validate_module(std::move(monoid), std::move(g), std::move(act), {"0"});
}

ModulePtr product(MonoidPtr monoid, const std::vector<ModulePtr>& factors, std::size_t bound) {
    if (!monoid) fail(ErrorClass::Usage, "NoMonoid", "product: monoid reference required");
    if (factors.empty()) return one_element_module(std::move(monoid));
    for (const auto& f : factors)
        if (!same_monoid(*f->monoid, *monoid))
            fail_validation("MixedMonoids", "product: all factors must share the monoid");

    MixedRadix radix;
    for (const auto& f : factors) radix.sizes.push_back(f->order());
    const std::size_t n = radix.total();
    if (n > bound)
        fail(ErrorClass::Bound, "BoundExceeded",
             "product: carrier size " + std::to_string(n) + " exceeds bound");

    const std::size_t nm = monoid->order;
    const std::size_t k = factors.size();
    std::vector<Idx> xs(k), ys(k), zs(k);
    std::vector<Idx> add(n * n), act(nm * n);
    std::vector<std::string> labels(n);

    for (std::size_t i = 0; i < n; ++i) {
        radix.decode(i, xs);
        std::string lab = "(";
        for (std::size_t c = 0; c < k; ++c) {
            if (c) lab += ",";
            lab += factors[c]->label(xs[c]);
        }
        labels[i] = lab + ")";
        for (std::size_t j = 0; j < n; ++j) {
            radix.decode(j, ys);
            for (std::size_t c = 0; c < k; ++c) zs[c] = factors[c]->add(xs[c], ys[c]);
            add[i * n + j] = static_cast<Idx>(radix.encode(zs));
        }
        for (std::size_t a = 0; a < nm; ++a) {
            for (std::size_t c = 0; c < k; ++c) zs[c] = factors[c]->scale(static_cast<Idx>(a), xs[c]);
            act[a * n + i] = static_cast<Idx>(radix.encode(zs));
        }
    }

    return validate_module(std::move(monoid), validate_abelian_group(n, std::move(add)),
                           std::move(act), std::move(labels));
}

InducedSubmodule submodule_as_module(ModulePtr v, const Submodule& w) {
    if (!is_submodule(*v, w.carrier))
        fail_validation("NotSubmodule", "induced module: subset is not a submodule");
    std::vector<Idx> elems = w.carrier.indices();
    const std::size_t n = elems.size();
    const std::size_t nm = v->monoid->order;
    std::vector<int> pos(v->order(), -1);
    for (std::size_t i = 0; i < n; ++i) pos[elems[i]] = static_cast<int>(i);

    std::vector<Idx> add(n * n), act(nm * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = v->label(elems[i]);
        for (std::size_t j = 0; j < n; ++j)
            add[i * n + j] = static_cast<Idx>(pos[v->add(elems[i], elems[j])]);
        for (std::size_t a = 0; a < nm; ++a)
            act[a * n + i] = static_cast<Idx>(pos[v->scale(static_cast<Idx>(a), elems[i])]);
    }
    ModulePtr sub = validate_module(v->monoid, validate_abelian_group(n, std::move(add)),
                                    std::move(act), std::move(labels));
    std::vector<Idx> inc(n);
    for (std::size_t i = 0; i < n; ++i) inc[i] = elems[i];
    ModuleMorphism incl = make_morphism(sub, v, std::move(inc));
    return InducedSubmodule{sub, std::move(incl), std::move(elems)};
}

ModuleMorphism make_morphism(ModulePtr dom, ModulePtr cod, std::vector<Idx> map) {
    if (!dom || !cod) fail(ErrorClass::Usage, "NoModule", "morphism: dom/cod required");
    if (!same_monoid(*dom->monoid, *cod->monoid))
        fail_validation("MixedMonoids", "morphism: dom and cod must share the monoid");
    if (map.size() != dom->order())
        fail_validation("BadShape", "morphism: map must have |dom| entries");
    for (auto x : map)
        if (x >= cod->order()) fail_validation("BadShape", "morphism: image out of range");

    for (std::size_t u = 0; u < dom->order(); ++u)
        for (std::size_t v = 0; v < dom->order(); ++v)
            if (map[dom->add(static_cast<Idx>(u), static_cast<Idx>(v))] !=
                cod->add(map[u], map[v]))
                fail_validation("NotAdditive", "morphism: f(u+v) != f(u)+f(v)",
                                {{"NotAdditive", {static_cast<int>(u), static_cast<int>(v)}}});

    for (std::size_t a = 0; a < dom->monoid->order; ++a)
        for (std::size_t v = 0; v < dom->order(); ++v)
            if (map[dom->scale(static_cast<Idx>(a), static_cast<Idx>(v))] !=
                cod->scale(static_cast<Idx>(a), map[v]))
                fail_validation("NotEquivariant", "morphism: f(a*v) != a*f(v)",
                                {{"NotEquivariant", {static_cast<int>(a), static_cast<int>(v)}}});

    return ModuleMorphism{std::move(dom), std::move(cod), std::move(map)};
}

Factorization factorize(const ModuleMorphism& f) {
    const MModule& dom = *f.dom;
    const MModule& cod = *f.cod;

    ElementSet ker(dom.order()), img(cod.order());
    for (std::size_t x = 0; x < dom.order(); ++x) {
        if (f.map[x] == cod.zero()) ker.set(x);
        img.set(f.map[x]);
    }
    if (!is_submodule(dom, ker))
        fail(ErrorClass::Internal, "BadKernel", "kernel is not a submodule");
    if (!is_submodule(cod, img))
        fail(ErrorClass::Internal, "BadImage", "image is not a submodule");
    if (ker.count() * img.count() != dom.order())
        fail(ErrorClass::Internal, "BadFactorization", "|dom| != |ker| * |im|");

    QuotientResult q = quotient(f.cod, Submodule{img});
    return Factorization{Submodule{ker}, Submodule{img}, q.module_, std::move(q.projection)};
}

ActionPropertyReport check_action_properties(const MModule& v, int threads) {
    ActionPropertyReport r;
    const std::size_t nm = v.monoid->order, nv = v.order();

    auto fa_probe = [&](std::size_t flat) {
        std::size_t a = flat / (nm * nv);
        std::size_t rest = flat % (nm * nv);
        std::size_t b = rest / nv, x = rest % nv;
        if (a == b || x == v.zero()) return false;
        return v.scale(static_cast<Idx>(a), static_cast<Idx>(x)) ==
               v.scale(static_cast<Idx>(b), static_cast<Idx>(x));
    };
    auto hit = first_hit(nm * nm * nv, threads, fa_probe);
    if (hit) {
        std::size_t flat = *hit;
        r.fa = false;
        r.fa_witness = std::array<Idx, 3>{static_cast<Idx>(flat / (nm * nv)),
                                          static_cast<Idx>((flat % (nm * nv)) / nv),
                                          static_cast<Idx>(flat % nv)};
    } else {
        r.fa = true;
    }

    if (!v.monoid->zero || !v.monoid->minus_one) {
        r.sa = ActionPropertyReport::Status::NotApplicable;
        return r;
    }
    Idx z = *v.monoid->zero, m1 = *v.monoid->minus_one;
    r.sa = ActionPropertyReport::Status::Holds;
    for (std::size_t x = 0; x < nv; ++x) {
        if (v.scale(z, static_cast<Idx>(x)) != v.zero() ||
            v.scale(m1, static_cast<Idx>(x)) != v.neg(static_cast<Idx>(x))) {
            r.sa = ActionPropertyReport::Status::Fails;
            r.sa_witness = static_cast<Idx>(x);
            break;
        }
    }
    return r;
}

}  // namespace natk
