#include "natk/nearring.hpp"

#include <algorithm>
#include <map>

namespace natk {

NearRingPtr validate_nearring(MonoidPtr monoid, FiniteAbelianGroup add) {
    if (!monoid) fail(ErrorClass::Usage, "NoMonoid", "nearring: monoid reference required");
    if (add.order != monoid->order)
        fail_validation("BadShape", "nearring: addition must live on the monoid carrier");

    NearRing n;
    n.monoid = std::move(monoid);
    n.add = std::move(add);

    const std::size_t k = n.order();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                Idx lhs = n.mul(static_cast<Idx>(a), n.plus(static_cast<Idx>(b),
                                                            static_cast<Idx>(c)));
                Idx rhs = n.plus(n.mul(static_cast<Idx>(a), static_cast<Idx>(b)),
                                 n.mul(static_cast<Idx>(a), static_cast<Idx>(c)));
                if (lhs != rhs)
                    fail_validation("NotLeftDistributive", "nearring: a(b+c) != ab + ac",
                                    {{"NotLeftDistributive",
                                      {static_cast<int>(a), static_cast<int>(b),
                                       static_cast<int>(c)}}});
            }
    return std::make_shared<const NearRing>(std::move(n));
}

NearRingPtr validate_nearring(MonoidPtr monoid, std::vector<Idx> add_table) {
    if (!monoid) fail(ErrorClass::Usage, "NoMonoid", "nearring: monoid reference required");
    FiniteAbelianGroup g;
    try {
        g = validate_abelian_group(monoid->order, std::move(add_table));
    } catch (const Error& e) {
        if (e.cls == ErrorClass::Validation)
            fail_validation("NotAbelianGroup", std::string("nearring: ") + e.what(),
                            e.witnesses);
        throw;
    }
    return validate_nearring(std::move(monoid), std::move(g));
}

ModulePtr as_module(const NearRing& n) {
    const std::size_t k = n.order();
    std::vector<Idx> act(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t v = 0; v < k; ++v)
            act[a * k + v] = n.mul(static_cast<Idx>(a), static_cast<Idx>(v));
    return validate_module(n.monoid, n.add, std::move(act), n.monoid->labels);
}

NearRingReport classify(const NearRing& n, int threads) {
    NearRingReport r;
    const std::size_t k = n.order();
    const Idx zero = n.add.zero;
    const Idx one = n.monoid->one;

    // Right distributivity.
    auto rd_probe = [&](std::size_t flat) {
        std::size_t a = flat / (k * k), b = (flat / k) % k, c = flat % k;
        return n.mul(n.plus(static_cast<Idx>(a), static_cast<Idx>(b)), static_cast<Idx>(c)) !=
               n.plus(n.mul(static_cast<Idx>(a), static_cast<Idx>(c)),
                      n.mul(static_cast<Idx>(b), static_cast<Idx>(c)));
    };
    auto rd = first_hit(k * k * k, threads, rd_probe);
    r.is_ring = !rd;
    if (rd) {
        std::size_t f = *rd;
        r.witnesses.push_back({"NotRightDistributive",
                               {static_cast<int>(f / (k * k)), static_cast<int>((f / k) % k),
                                static_cast<int>(f % k)}});
    }

    // Near-field: nonzero elements closed under multiplication and two-sided
    // invertible. The one-element near-ring counts as a near-field.
    r.is_nearfield = true;
    for (std::size_t a = 0; a < k && r.is_nearfield; ++a) {
        if (static_cast<Idx>(a) == zero) continue;
        if (!two_sided_inverse(*n.monoid, static_cast<Idx>(a))) {
            r.is_nearfield = false;
            r.witnesses.push_back({"NonInvertible", {static_cast<int>(a)}});
            break;
        }
        for (std::size_t b = 0; b < k; ++b) {
            if (static_cast<Idx>(b) == zero) continue;
            if (n.mul(static_cast<Idx>(a), static_cast<Idx>(b)) == zero) {
                r.is_nearfield = false;
                r.witnesses.push_back({"ZeroDivisor", {static_cast<int>(a), static_cast<int>(b)}});
                break;
            }
        }
    }

    // FA over the self-module.
    auto fa_probe = [&](std::size_t flat) {
        std::size_t a = flat / (k * k), b = (flat / k) % k, v = flat % k;
        if (a == b || static_cast<Idx>(v) == zero) return false;
        return n.mul(static_cast<Idx>(a), static_cast<Idx>(v)) ==
               n.mul(static_cast<Idx>(b), static_cast<Idx>(v));
    };
    auto fa = first_hit(k * k * k, threads, fa_probe);
    r.fa = !fa;
    if (fa) {
        std::size_t f = *fa;
        r.witnesses.push_back({"FA", {static_cast<int>(f / (k * k)),
                                      static_cast<int>((f / k) % k), static_cast<int>(f % k)}});
    }

    // SA with 0 the additive identity and -1 the additive inverse of 1.
    const Idx m1 = n.add.neg[one];
    r.sa = true;
    for (std::size_t v = 0; v < k; ++v) {
        if (n.mul(zero, static_cast<Idx>(v)) != zero ||
            n.mul(m1, static_cast<Idx>(v)) != n.add.neg[v]) {
            r.sa = false;
            r.witnesses.push_back({"SA", {static_cast<int>(v)}});
            break;
        }
    }

    std::vector<Idx> sols = eta_solutions(*n.monoid);
    std::vector<Idx> expected{one};
    if (m1 != one) expected.push_back(m1);
    std::sort(expected.begin(), expected.end());
    r.s1_for_minus_one = sols == expected;
    if (!r.s1_for_minus_one) {
        Witness w{"S1", {}};
        for (Idx s : sols) w.elements.push_back(static_cast<int>(s));
        r.witnesses.push_back(std::move(w));
    }
    return r;
}

NearRingPtr hash_construction(const NearRing& ring, unsigned n) {
    NearRingReport base = classify(ring);
    if (!base.is_ring)
        fail(ErrorClass::Usage, "NotRing", "hash construction requires a ring input");
    const std::size_t k = ring.order();

    auto pow = [&](Idx a) {
        Idx p = ring.monoid->one;
        for (unsigned i = 0; i < n; ++i) p = ring.mul(p, a);
        return p;
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) {
            Idx ac = ring.mul(static_cast<Idx>(a), static_cast<Idx>(c));
            if (pow(ac) != ring.mul(pow(static_cast<Idx>(a)), pow(static_cast<Idx>(c))))
                fail_validation("PowerLawFails", "(ac)^n != a^n c^n in the base ring",
                                {{"PowerLawFails", {static_cast<int>(a), static_cast<int>(c)}}});
        }

    const std::size_t m = k * k;  // pairs (a,b) -> a*k + b
    std::vector<Idx> mul(m * m), add(m * m);
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        Idx a = static_cast<Idx>(i / k), b = static_cast<Idx>(i % k);
        labels[i] = "(" + ring.monoid->label(a) + "," + ring.monoid->label(b) + ")";
        for (std::size_t j = 0; j < m; ++j) {
            Idx c = static_cast<Idx>(j / k), d = static_cast<Idx>(j % k);
            Idx pa = ring.mul(a, c);
            Idx pb = ring.plus(ring.mul(b, c), ring.mul(pow(a), d));
            mul[i * m + j] = static_cast<Idx>(static_cast<std::size_t>(pa) * k + pb);
            Idx sa = ring.plus(a, c), sb = ring.plus(b, d);
            add[i * m + j] = static_cast<Idx>(static_cast<std::size_t>(sa) * k + sb);
        }
    }

    MonoidPtr monoid = make_monoid(m, std::move(labels), std::move(mul));
    Idx expected_one = static_cast<Idx>(static_cast<std::size_t>(ring.monoid->one) * k +
                                        ring.add.zero);
    if (monoid->one != expected_one)
        fail(ErrorClass::Internal, "BadIdentity", "hash construction: identity is not (1,0)");
    return validate_nearring(std::move(monoid), std::move(add));
}

NearRingPtr fun_nearring(const FiniteAbelianGroup& a, std::size_t bound) {
    const std::size_t n = a.order;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= n;
        if (total > bound)
            fail(ErrorClass::Bound, "BoundExceeded",
                 "fun nearring: |A|^|A| exceeds bound " + std::to_string(bound));
    }

    // Function index: digits f(0)..f(n-1), leftmost most significant.
    MixedRadix radix;
    radix.sizes.assign(n, n);
    std::vector<Idx> fx(n), gx(n), hx(n);
    std::vector<Idx> mul(total * total), add(total * total);
    std::vector<std::string> labels(total);

    for (std::size_t i = 0; i < total; ++i) {
        radix.decode(i, fx);
        std::string lab = "f";
        for (std::size_t x = 0; x < n; ++x) lab += std::to_string(fx[x]);
        labels[i] = lab;
        for (std::size_t j = 0; j < total; ++j) {
            radix.decode(j, gx);
            for (std::size_t x = 0; x < n; ++x) hx[x] = gx[fx[x]];  // f*g = g o f
            mul[i * total + j] = static_cast<Idx>(radix.encode(hx));
            for (std::size_t x = 0; x < n; ++x) hx[x] = a.at(fx[x], gx[x]);
            add[i * total + j] = static_cast<Idx>(radix.encode(hx));
        }
    }

    MonoidPtr monoid = make_monoid(total, std::move(labels), std::move(mul));
    return validate_nearring(std::move(monoid), std::move(add));
}

bool is_multiplicative_automorphism(const FiniteMonoid& m, const std::vector<Idx>& phi,
                                    std::optional<std::array<Idx, 2>>* witness) {
    if (phi.size() != m.order) return false;
    ElementSet seen(m.order);
    for (auto x : phi) {
        if (x >= m.order || seen.test(x)) return false;
        seen.set(x);
    }
    for (std::size_t a = 0; a < m.order; ++a)
        for (std::size_t b = 0; b < m.order; ++b)
            if (phi[m.at(static_cast<Idx>(a), static_cast<Idx>(b))] !=
                m.at(phi[a], phi[b])) {
                if (witness)
                    *witness = std::array<Idx, 2>{static_cast<Idx>(a), static_cast<Idx>(b)};
                return false;
            }
    // For a multiplicative bijection the identity is automatically fixed.
    return phi[m.one] == m.one;
}

NearRingPtr transport_addition(const NearRing& n, const std::vector<Idx>& phi) {
    std::optional<std::array<Idx, 2>> w;
    if (!is_multiplicative_automorphism(*n.monoid, phi, &w)) {
        std::vector<Witness> ws;
        if (w) ws.push_back({"NotMultiplicativeAutomorphism",
                             {static_cast<int>((*w)[0]), static_cast<int>((*w)[1])}});
        fail_validation("NotMultiplicativeAutomorphism",
                        "transport: phi is not a multiplicative automorphism", std::move(ws));
    }
    const std::size_t k = n.order();
    std::vector<Idx> inv(k);
    for (std::size_t x = 0; x < k; ++x) inv[phi[x]] = static_cast<Idx>(x);

    std::vector<Idx> add(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            add[a * k + b] = inv[n.plus(phi[a], phi[b])];
    return validate_nearring(n.monoid, std::move(add));
}

NearRingPtr dickson_fixture() {
    // GF(9) = GF(3)[x]/(x^2+1), element a+bx at index a+3b.
    const std::size_t k = 9;
    auto fadd = [](Idx u, Idx v) {
        return static_cast<Idx>((u % 3 + v % 3) % 3 + 3 * ((u / 3 + v / 3) % 3));
    };
    auto fmul = [](Idx u, Idx v) {
        int a = u % 3, b = u / 3, c = v % 3, d = v / 3;
        int re = (a * c + 2 * b * d) % 3;  // x^2 = -1
        int im = (a * d + b * c) % 3;
        return static_cast<Idx>(re + 3 * im);
    };
    auto frob = [&](Idx u) {  // u^3, the field automorphism
        return fmul(fmul(u, u), u);
    };

    ElementSet squares(k);
    for (std::size_t u = 1; u < k; ++u) squares.set(fmul(static_cast<Idx>(u), static_cast<Idx>(u)));

    std::vector<Idx> mul(k * k), add(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            bool twist = x != 0 && !squares.test(x);
            mul[x * k + y] = fmul(static_cast<Idx>(x),
                                  twist ? frob(static_cast<Idx>(y)) : static_cast<Idx>(y));
            add[x * k + y] = fadd(static_cast<Idx>(x), static_cast<Idx>(y));
        }

    std::vector<std::string> labels{"0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"};
    MonoidPtr monoid = make_monoid(k, std::move(labels), std::move(mul));
    return validate_nearring(std::move(monoid), std::move(add));
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_order_census(const NearRing& n) {
    std::map<std::size_t, std::size_t> census;
    const Idx zero = n.add.zero;
    for (std::size_t a = 0; a < n.order(); ++a) {
        if (static_cast<Idx>(a) == zero) continue;
        Idx p = static_cast<Idx>(a);
        std::size_t ord = 1;
        while (p != n.monoid->one) {
            p = n.mul(p, static_cast<Idx>(a));
            ++ord;
            if (ord > n.order())
                fail(ErrorClass::Usage, "NotAGroup",
                     "order census requires invertible nonzero elements");
        }
        census[ord]++;
    }
    return {census.begin(), census.end()};
}

NearRingReport verify_lema(const NearRing& n) {
    NearRingReport r = classify(n);
    if (r.is_nearfield && !r.fa)
        fail(ErrorClass::Theorem, "TheoremViolation", "near-field without the free action property");
    if (r.fa && !r.sa)
        fail(ErrorClass::Theorem, "TheoremViolation",
             "free action without scalar action for -1 = -(1)");
    if (r.fa) {
        std::vector<Idx> sols = eta_solutions(*n.monoid);
        Idx m1 = n.add.neg[n.monoid->one];
        for (Idx s : sols)
            if (s != n.monoid->one && s != m1)
                fail(ErrorClass::Theorem, "TheoremViolation",
                     "free action with an involution outside {1,-1}");
    }
    return r;
}

}  // namespace natk
