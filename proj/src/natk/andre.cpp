#include "natk/andre.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace natk {

namespace {

/// Per-module cache of generated submodules closure(M*{v}), shared between
/// the per-element scans. Elements with equal orbits share one entry.
class OrbitClosureCache {
public:
    explicit OrbitClosureCache(const MModule& v) : v_(v), slot_(v.order(), -1) {}

    const ElementSet& of(Idx x) const {
        int s = slot_[x];
        if (s >= 0) return store_[static_cast<std::size_t>(s)];
        ElementSet orb = orbit(v_, ElementSet::single(v_.order(), x));
        auto it = by_orbit_.find(orb);
        if (it == by_orbit_.end()) {
            ElementSet closed = group_closure(v_, orb);
            store_.push_back(std::move(closed));
            it = by_orbit_.emplace(std::move(orb), store_.size() - 1).first;
        }
        slot_[x] = static_cast<int>(it->second);
        return store_[it->second];
    }

private:
    struct Less {
        bool operator()(const ElementSet& a, const ElementSet& b) const {
            return a.canonical_less(b);
        }
    };
    const MModule& v_;
    mutable std::vector<int> slot_;
    mutable std::deque<ElementSet> store_;  // reference-stable under growth
    mutable std::map<ElementSet, std::size_t, Less> by_orbit_;
};

/// Group closure of M*T computed incrementally, skipping generators already
/// absorbed.
ElementSet closure_of_orbit_set(const MModule& v, const ElementSet& t) {
    ElementSet s(v.order());
    s.set(v.zero());
    const std::size_t nm = v.monoid->order;
    for (std::size_t x = 0; x < t.size(); ++x) {
        if (!t.test(x)) continue;
        for (std::size_t a = 0; a < nm; ++a) {
            Idx g = v.scale(static_cast<Idx>(a), static_cast<Idx>(x));
            if (!s.test(g)) s = subgroup_extend(v.group, s, g);
        }
    }
    return s;
}

bool qk1_holds_for(const MModule& v, const NearRing& n, Idx x) {
    const std::size_t nm = v.monoid->order;
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b) {
            Idx lhs = v.scale(n.plus(static_cast<Idx>(a), static_cast<Idx>(b)), x);
            Idx rhs = v.add(v.scale(static_cast<Idx>(a), x), v.scale(static_cast<Idx>(b), x));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace

MultiNearRing make_multi_nearring(MonoidPtr monoid, std::vector<NearRingPtr> designated) {
    if (!monoid) fail(ErrorClass::Usage, "NoMonoid", "multi-near-ring: monoid required");
    for (const auto& n : designated)
        if (!same_monoid(*n->monoid, *monoid))
            fail_validation("MixedMonoids",
                            "multi-near-ring: designated near-ring on a different monoid");
    for (std::size_t i = 0; i < designated.size(); ++i)
        for (std::size_t j = i + 1; j < designated.size(); ++j)
            if (designated[i]->add.add == designated[j]->add.add)
                fail_validation("DuplicateDesignated",
                                "multi-near-ring: designated additions must be distinct tables");
    return MultiNearRing{std::move(monoid), std::move(designated)};
}

MultiNearRing enumerate_multi_nearring(MonoidPtr monoid, std::size_t order_bound) {
    EnumerationTask task;
    task.monoid = monoid;
    task.order_bound = order_bound;
    EnumerationResult res = enumerate_nearrings(task);
    std::vector<NearRingPtr> designated;
    designated.reserve(res.additions.size());
    for (auto& t : res.additions) designated.push_back(validate_nearring(monoid, std::move(t)));
    return MultiNearRing{std::move(monoid), std::move(designated)};
}

QuasiKernelReport quasi_kernel(const MModule& v, int threads) {
    const std::size_t nm = v.monoid->order, nv = v.order();
    QuasiKernelReport r;
    r.qv = ElementSet(nv);
    r.gamma.assign(nv * nm * nm, 0);

    std::vector<char> member(nv, 0);
    auto scan_one = [&](std::size_t x) {
        for (std::size_t a = 0; a < nm; ++a)
            for (std::size_t b = 0; b < nm; ++b) {
                Idx sum = v.add(v.scale(static_cast<Idx>(a), static_cast<Idx>(x)),
                                v.scale(static_cast<Idx>(b), static_cast<Idx>(x)));
                bool found = false;
                for (std::size_t g = 0; g < nm && !found; ++g)
                    if (v.scale(static_cast<Idx>(g), static_cast<Idx>(x)) == sum) {
                        r.gamma[(x * nm + a) * nm + b] = static_cast<Idx>(g);
                        found = true;
                    }
                if (!found) return false;
            }
        return true;
    };
    // Partitioned by element; each element's scan is independent.
    first_hit(nv, threads, [&](std::size_t x) {
        member[x] = scan_one(x) ? 1 : 0;
        return false;
    });
    for (std::size_t x = 0; x < nv; ++x)
        if (member[x]) r.qv.set(x);
    return r;
}

Qk1Result max_qk1_set(const MModule& v, const MultiNearRing& r) {
    const std::size_t nv = v.order();
    Qk1Result out;
    out.qstar = ElementSet(nv);
    out.qstar.set(v.zero());
    out.witness.assign(nv, -1);
    for (std::size_t x = 0; x < nv; ++x) {
        if (static_cast<Idx>(x) == v.zero()) continue;
        for (std::size_t i = 0; i < r.designated.size(); ++i)
            if (qk1_holds_for(v, *r.designated[i], static_cast<Idx>(x))) {
                out.qstar.set(x);
                out.witness[x] = static_cast<int>(i);
                break;
            }
    }
    return out;
}

Qk2Result check_qk2(const MModule& v, const ElementSet& q) {
    OrbitClosureCache closures(v);
    std::map<std::vector<Idx>, ElementSet> recovered;  // keyed by the intersection
    for (std::size_t x = 0; x < v.order(); ++x) {
        ElementSet t = closures.of(static_cast<Idx>(x)) & q;
        auto key = t.indices();
        auto it = recovered.find(key);
        if (it == recovered.end())
            it = recovered.emplace(std::move(key), closure_of_orbit_set(v, t)).first;
        if (!it->second.test(x)) return {false, static_cast<Idx>(x)};
    }
    return {true, std::nullopt};
}

Qk3Result check_qk3(const MModule& v, const ElementSet& q, const MultiNearRing& r) {
    const std::size_t nm = v.monoid->order, nv = v.order();
    std::optional<Idx> excluded;
    if (v.monoid->zero) excluded = *v.monoid->zero;
    (void)r;

    OrbitClosureCache closures(v);
    for (std::size_t x = 0; x < nv; ++x) {
        if (q.test(x)) continue;
        const ElementSet& w = closures.of(static_cast<Idx>(x));
        for (std::size_t qi = 0; qi < nv; ++qi) {
            if (!q.test(qi)) continue;
            for (std::size_t a = 0; a < nm; ++a) {
                if (excluded && static_cast<Idx>(a) == *excluded) continue;
                Idx aq = v.scale(static_cast<Idx>(a), static_cast<Idx>(qi));
                for (std::size_t rr = 0; rr < nv; ++rr) {
                    if (!w.test(v.add(aq, static_cast<Idx>(rr)))) continue;
                    bool found = false;
                    for (std::size_t b = 0; b < nm && !found; ++b)
                        found = w.test(v.add(static_cast<Idx>(qi),
                                             v.scale(static_cast<Idx>(b),
                                                     static_cast<Idx>(rr))));
                    if (!found)
                        return {false, std::array<Idx, 4>{static_cast<Idx>(x),
                                                          static_cast<Idx>(qi),
                                                          static_cast<Idx>(a),
                                                          static_cast<Idx>(rr)}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

AndreReport check_andre(const MModule& v, const MultiNearRing& r) {
    if (!same_monoid(*v.monoid, *r.monoid))
        fail_validation("MixedMonoids", "module and multi-near-ring monoids differ");
    Qk1Result q1 = max_qk1_set(v, r);
    Qk2Result q2 = check_qk2(v, q1.qstar);
    AndreReport rep;
    rep.is_andre = q2.ok;
    rep.qstar = std::move(q1.qstar);
    rep.nearring_witness = std::move(q1.witness);
    rep.qk2_failure = q2.failure;
    return rep;
}

bool oracle_exists_q(const MModule& v, const MultiNearRing& r, std::size_t max_order) {
    const std::size_t nv = v.order();
    if (nv > max_order || nv > 20)
        fail(ErrorClass::Bound, "BoundExceeded", "powerset oracle limited to small modules");

    // Elementwise (QK1) admissibility; the condition does not depend on Q.
    std::vector<char> admissible(nv, 0);
    for (std::size_t x = 0; x < nv; ++x)
        for (const auto& n : r.designated)
            if (qk1_holds_for(v, *n, static_cast<Idx>(x))) {
                admissible[x] = 1;
                break;
            }

    OrbitClosureCache closures(v);
    const std::size_t total = std::size_t(1) << nv;
    for (std::size_t mask = 0; mask < total; ++mask) {
        bool qk1 = true;
        ElementSet q(nv);
        for (std::size_t x = 0; x < nv && qk1; ++x) {
            if (!(mask & (std::size_t(1) << x))) continue;
            q.set(x);
            if (static_cast<Idx>(x) != v.zero() && !admissible[x]) qk1 = false;
        }
        if (!qk1) continue;
        bool qk2 = true;
        for (std::size_t x = 0; x < nv && qk2; ++x) {
            ElementSet t = closures.of(static_cast<Idx>(x)) & q;
            qk2 = closure_of_orbit_set(v, t).test(x);
        }
        if (qk2) return true;
    }
    return false;
}

NvsReport check_nvs(const MModule& v, int threads) {
    NvsReport r;
    r.scalar = check_scalar_group(*v.monoid);
    r.action = check_action_properties(v, threads);
    r.qv_generates = group_closure(v, quasi_kernel(v, threads).qv) ==
                     ElementSet::full(v.order());
    if (!r.scalar.is_scalar_group)
        r.failure = "monoid-not-scalar-group";
    else if (!r.action.fa)
        r.failure = "fa";
    else if (r.action.sa != ActionPropertyReport::Status::Holds)
        r.failure = "sa";
    else if (!r.qv_generates)
        r.failure = "quasi-kernel-does-not-generate";
    else
        r.is_nvs = true;
    return r;
}

EndoSetReport nvs_to_endoset(const MModule& v) {
    NvsReport nvs = check_nvs(v);
    if (!nvs.is_nvs)
        fail(ErrorClass::Usage, "NotNearVectorSpace",
             "endofunction presentation requires a near-vector space");
    if (v.order() <= 1)
        fail(ErrorClass::Usage, "TrivialModule",
             "endofunction presentation excludes the one-element module");

    const std::size_t nm = v.monoid->order, nv = v.order();
    EndoSetReport r;
    r.fstar.resize(nm);
    for (std::size_t a = 0; a < nm; ++a) {
        r.fstar[a].resize(nv);
        for (std::size_t x = 0; x < nv; ++x)
            r.fstar[a][x] = v.scale(static_cast<Idx>(a), static_cast<Idx>(x));
    }

    std::vector<Idx> zero_fn(nv, v.zero()), id_fn(nv), neg_fn(nv);
    for (std::size_t x = 0; x < nv; ++x) {
        id_fn[x] = static_cast<Idx>(x);
        neg_fn[x] = v.neg(static_cast<Idx>(x));
    }
    auto have = [&](const std::vector<Idx>& f) {
        return std::find(r.fstar.begin(), r.fstar.end(), f) != r.fstar.end();
    };
    r.has_zero_one_minus_one = have(zero_fn) && have(id_fn) && have(neg_fn);

    r.nonzero_subgroup = true;
    const Idx z = *v.monoid->zero;
    for (std::size_t a = 0; a < nm && r.nonzero_subgroup; ++a) {
        if (static_cast<Idx>(a) == z) continue;
        ElementSet image(nv);
        for (std::size_t x = 0; x < nv; ++x) image.set(r.fstar[a][x]);
        if (image.count() != nv) r.nonzero_subgroup = false;  // not a permutation
        auto inv = two_sided_inverse(*v.monoid, static_cast<Idx>(a));
        if (!inv) r.nonzero_subgroup = false;
    }
    for (std::size_t a = 0; a < nm && r.nonzero_subgroup; ++a)
        for (std::size_t b = 0; b < nm; ++b) {
            if (static_cast<Idx>(a) == z || static_cast<Idx>(b) == z) continue;
            Idx ab = v.monoid->at(static_cast<Idx>(a), static_cast<Idx>(b));
            for (std::size_t x = 0; x < nv; ++x)
                if (r.fstar[a][r.fstar[b][x]] != r.fstar[ab][x]) {
                    r.nonzero_subgroup = false;
                    break;
                }
            if (ab == z) r.nonzero_subgroup = false;  // nonzero set must be closed
        }

    r.fixed_point_free = nvs.action.fa;
    r.generates = nvs.qv_generates;
    return r;
}

DesignatedProduct product_of_designated(const MultiNearRing& r,
                                        const std::vector<std::size_t>& selection) {
    if (selection.empty())
        fail(ErrorClass::Usage, "EmptySelection", "product of designated: empty selection");
    for (auto i : selection)
        if (i >= r.designated.size())
            fail(ErrorClass::Usage, "BadSelection", "product of designated: index out of range");

    std::vector<ModulePtr> factors;
    factors.reserve(selection.size());
    for (auto i : selection) factors.push_back(as_module(*r.designated[i]));
    ModulePtr prod = product(r.monoid, factors);

    MixedRadix radix;
    for (const auto& f : factors) radix.sizes.push_back(f->order());
    ElementSet q(prod->order());
    std::vector<Idx> coords(selection.size());
    for (std::size_t i = 0; i < selection.size(); ++i) {
        for (std::size_t j = 0; j < selection.size(); ++j)
            coords[j] = (i == j) ? r.monoid->one : r.designated[selection[j]]->add.zero;
        q.set(radix.encode(coords));
    }

    DesignatedProduct out;
    out.qk2_ok = check_qk2(*prod, q).ok;
    out.andre_ok = check_andre(*prod, r).is_andre;
    out.module_ = std::move(prod);
    out.q = std::move(q);
    return out;
}

bool check_ring_module_equiv(const MModule& v, const MultiNearRing& r) {
    if (r.designated.size() != 1)
        fail(ErrorClass::Usage, "NotSingleRing",
             "ring-module equivalence requires exactly one designated near-ring");
    const NearRing& n = *r.designated[0];
    if (!classify(n).is_ring)
        fail(ErrorClass::Usage, "NotSingleRing",
             "ring-module equivalence requires the designated near-ring to be a ring");

    bool andre = check_andre(v, r).is_andre;
    bool direct = true;
    const std::size_t nm = v.monoid->order;
    for (std::size_t a = 0; a < nm && direct; ++a)
        for (std::size_t b = 0; b < nm && direct; ++b)
            for (std::size_t x = 0; x < v.order() && direct; ++x)
                direct = v.scale(n.plus(static_cast<Idx>(a), static_cast<Idx>(b)),
                                 static_cast<Idx>(x)) ==
                         v.add(v.scale(static_cast<Idx>(a), static_cast<Idx>(x)),
                               v.scale(static_cast<Idx>(b), static_cast<Idx>(x)));
    if (andre != direct)
        fail(ErrorClass::Theorem, "TheoremViolation",
             "module decision and ring distributivity scan disagree");
    return andre;
}

std::vector<std::size_t> mv_layers(const MModule& v, const ElementSet& qv) {
    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(v.order(), kInf);
    dist[v.zero()] = 0;
    std::vector<Idx> frontier{v.zero()};
    auto steps = qv.indices();
    while (!frontier.empty()) {
        std::vector<Idx> next;
        for (Idx x : frontier)
            for (Idx q : steps) {
                if (q == v.zero()) continue;
                Idx y = v.add(x, q);
                if (dist[y] == kInf) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return dist;
}

namespace {

struct DecomposeContext {
    const MModule& v;
    const MultiNearRing& r;
    ElementSet qv;
    std::vector<int> nr_of;  // canonical designated index per quasi-kernel element
    std::vector<std::size_t> dist;
    OrbitClosureCache closures;

    DecomposeContext(const MModule& v_, const MultiNearRing& r_)
        : v(v_), r(r_), closures(v_) {}
};

DecomposeContext make_context(const MModule& v, const MultiNearRing& r) {
    if (!same_monoid(*v.monoid, *r.monoid))
        fail_validation("MixedMonoids", "decompose: module and multi-near-ring monoids differ");
    DecomposeContext ctx(v, r);
    ctx.qv = quasi_kernel(v).qv;

    ctx.nr_of.assign(v.order(), -1);
    for (std::size_t x = 0; x < v.order(); ++x) {
        if (!ctx.qv.test(x) || static_cast<Idx>(x) == v.zero()) continue;
        for (std::size_t i = 0; i < r.designated.size(); ++i)
            if (qk1_holds_for(v, *r.designated[i], static_cast<Idx>(x))) {
                ctx.nr_of[x] = static_cast<int>(i);
                break;
            }
        if (ctx.nr_of[x] < 0)
            fail(ErrorClass::Usage, "HypothesisFailed",
                 "decompose: Q(V) does not satisfy (QK1) against the designated set",
                 {{"QK1", {static_cast<int>(x)}}});
    }

    if (orbit(v, ctx.qv) != ctx.qv)
        fail(ErrorClass::Usage, "HypothesisFailed",
             "decompose: Q(V) is not stable under the action", {{"OrbitStability", {}}});
    if (group_closure(v, ctx.qv) != ElementSet::full(v.order()))
        fail(ErrorClass::Usage, "HypothesisFailed",
             "decompose: Q(V) does not generate the carrier", {{"Generation", {}}});
    Qk3Result qk3 = check_qk3(v, ctx.qv, r);
    if (!qk3.ok) {
        auto w = *qk3.failure;
        fail(ErrorClass::Usage, "HypothesisFailed", "decompose: (QK3) fails",
             {{"QK3", {static_cast<int>(w[0]), static_cast<int>(w[1]),
                       static_cast<int>(w[2]), static_cast<int>(w[3])}}});
    }

    ctx.dist = mv_layers(v, ctx.qv);
    return ctx;
}

/// Lexicographically least ascending multiset of n quasi-kernel elements
/// summing to target, consistent with the BFS layers.
std::vector<Idx> minimal_presentation(const DecomposeContext& ctx, Idx target, std::size_t n) {
    const MModule& v = ctx.v;
    std::vector<Idx> parts;
    Idx remaining = target;
    Idx lower = 0;
    for (std::size_t k = n; k > 0; --k) {
        bool found = false;
        for (std::size_t q = lower; q < v.order() && !found; ++q) {
            if (!ctx.qv.test(q) || static_cast<Idx>(q) == v.zero()) continue;
            Idx rest = v.group.sub(remaining, static_cast<Idx>(q));
            if (ctx.dist[rest] == k - 1) {
                parts.push_back(static_cast<Idx>(q));
                remaining = rest;
                lower = static_cast<Idx>(q);
                found = true;
            }
        }
        if (!found)
            fail(ErrorClass::Internal, "NoPresentation",
                 "decompose: BFS layering admits no presentation");
    }
    return parts;
}

void decompose_rec(const DecomposeContext& ctx, Idx target, std::vector<Idx>& parts,
                   std::vector<TrailStep>& trail) {
    const MModule& v = ctx.v;
    if (target == v.zero()) return;
    if (ctx.qv.test(target)) {
        parts.push_back(target);
        return;
    }
    const std::size_t n = ctx.dist[target];
    if (n == std::numeric_limits<std::size_t>::max())
        fail(ErrorClass::Internal, "NoPresentation", "decompose: unreachable element");

    std::vector<Idx> pres = minimal_presentation(ctx, target, n);
    Idx q1 = pres[0], q2 = pres[1];
    const NearRing& n1 = *ctx.r.designated[static_cast<std::size_t>(ctx.nr_of[q1])];
    const NearRing& n2 = *ctx.r.designated[static_cast<std::size_t>(ctx.nr_of[q2])];
    if (&n1 == &n2)
        fail(ErrorClass::Internal, "SharedAddition",
             "decompose: minimal presentation with a shared designated addition");

    // Least (alpha, beta) on which the two additions differ.
    const std::size_t nm = v.monoid->order;
    Idx alpha = 0, beta = 0;
    bool found = false;
    for (std::size_t a = 0; a < nm && !found; ++a)
        for (std::size_t b = 0; b < nm && !found; ++b)
            if (n1.plus(static_cast<Idx>(a), static_cast<Idx>(b)) !=
                n2.plus(static_cast<Idx>(a), static_cast<Idx>(b))) {
                alpha = static_cast<Idx>(a);
                beta = static_cast<Idx>(b);
                found = true;
            }
    if (!found)
        fail(ErrorClass::Internal, "SharedAddition", "decompose: designated additions coincide");

    const Idx s1 = n1.plus(alpha, beta);
    // r = sum over the tail of ((alpha +_qi beta) -_qi (alpha +_q1 beta)) * qi.
    Idx rsum = v.zero();
    for (std::size_t i = 2; i < pres.size(); ++i) {
        const NearRing& ni = *ctx.r.designated[static_cast<std::size_t>(ctx.nr_of[pres[i]])];
        Idx ci = ni.minus(ni.plus(alpha, beta), s1);
        rsum = v.add(rsum, v.scale(ci, pres[i]));
    }
    const Idx alpha2 = n2.minus(n2.plus(alpha, beta), s1);

    const ElementSet& w = ctx.closures.of(target);
    if (!w.test(v.add(v.scale(alpha2, q2), rsum)))
        fail(ErrorClass::Internal, "BrokenIdentity",
             "decompose: rewrite residue left the orbit closure");

    std::optional<Idx> beta_prime;
    for (std::size_t b = 0; b < nm && !beta_prime; ++b)
        if (w.test(v.add(q2, v.scale(static_cast<Idx>(b), rsum))))
            beta_prime = static_cast<Idx>(b);
    if (!beta_prime)
        fail(ErrorClass::Internal, "NoExchangeWitness",
             "decompose: (QK3) witness search failed after the hypothesis held");

    Idx vpp = v.add(q2, v.scale(*beta_prime, rsum));
    Idx vp = v.group.sub(target, vpp);
    if (ctx.dist[vp] >= n || ctx.dist[vpp] >= n)
        fail(ErrorClass::Internal, "NotShorter",
             "decompose: rewrite did not shorten the presentation");

    trail.push_back(TrailStep{target, q1, q2, alpha, beta, *beta_prime});
    decompose_rec(ctx, vp, parts, trail);
    decompose_rec(ctx, vpp, parts, trail);
}

DecompositionCertificate decompose_with(const DecomposeContext& ctx, Idx target) {
    DecompositionCertificate cert;
    cert.target = target;
    decompose_rec(ctx, target, cert.parts, cert.trail);
    cert.m_v = ctx.dist[target];

    // Certificate soundness, independent of the trail.
    const ElementSet& w = ctx.closures.of(target);
    Idx sum = ctx.v.zero();
    for (Idx p : cert.parts) {
        if (!w.test(p) || !ctx.qv.test(p))
            fail(ErrorClass::Internal, "BadPart",
                 "decompose: part outside closure(M*{v}) intersect Q(V)");
        sum = ctx.v.add(sum, p);
    }
    if (sum != target)
        fail(ErrorClass::Internal, "BadSum", "decompose: parts do not sum to the target");
    return cert;
}

}  // namespace

DecompositionCertificate decompose_quasikernel(const MModule& v, const MultiNearRing& r,
                                               Idx target) {
    if (target >= v.order())
        fail(ErrorClass::Usage, "BadElement", "decompose: element index out of range");
    DecomposeContext ctx = make_context(v, r);
    return decompose_with(ctx, target);
}

std::vector<DecompositionCertificate> decompose_all(const MModule& v, const MultiNearRing& r) {
    DecomposeContext ctx = make_context(v, r);
    std::vector<DecompositionCertificate> out;
    out.reserve(v.order());
    for (std::size_t x = 0; x < v.order(); ++x)
        out.push_back(decompose_with(ctx, static_cast<Idx>(x)));
    return out;
}

TfaeReport check_tfae(const ModulePtr& vp) {
    const MModule& v = *vp;
    NvsReport nvs = check_nvs(v);
    if (!nvs.is_nvs)
        fail(ErrorClass::Usage, "NotNearVectorSpace",
             "the subspace equivalences are stated for near-vector spaces");

    ElementSet qv = quasi_kernel(v).qv;
    OrbitClosureCache closures(v);

    TfaeReport r;
    r.qk2_all = r.qk2prime_all = r.thmaa_equality = true;
    for (std::size_t x = 0; x < v.order(); ++x) {
        ElementSet t = closures.of(static_cast<Idx>(x)) & qv;
        ElementSet direct = group_closure(v, t);
        ElementSet orbited = closure_of_orbit_set(v, t);
        if (!orbited.test(x))
            fail(ErrorClass::Theorem, "TheoremViolation",
                 "subspace equivalences: (QK2) fails on a near-vector space",
                 {{"qk2", {static_cast<int>(x)}}});
        if (!direct.test(x))
            fail(ErrorClass::Theorem, "TheoremViolation",
                 "subspace equivalences: (QK2') fails on a near-vector space",
                 {{"qk2prime", {static_cast<int>(x)}}});
        if (direct != orbited)
            fail(ErrorClass::Theorem, "TheoremViolation",
                 "subspace equivalences: the two closure expressions differ",
                 {{"closure-equality", {static_cast<int>(x)}}});
    }

    r.submodules_generated = r.qw_identity = true;
    for (const Submodule& w : enumerate_submodules(v)) {
        InducedSubmodule sub = submodule_as_module(vp, w);
        ElementSet qw_in_v(v.order());
        ElementSet qw = quasi_kernel(*sub.module_).qv;
        for (std::size_t i = 0; i < sub.elements.size(); ++i)
            if (qw.test(i)) qw_in_v.set(sub.elements[i]);
        if (qw_in_v != (w.carrier & qv))
            fail(ErrorClass::Theorem, "TheoremViolation",
                 "subspace equivalences: Q(W) != W intersect Q(V)");
        if (group_closure(v, qw_in_v) != w.carrier)
            fail(ErrorClass::Theorem, "TheoremViolation",
                 "subspace equivalences: a submodule is not generated by its quasi-kernel");
    }
    return r;
}

}  // namespace natk
