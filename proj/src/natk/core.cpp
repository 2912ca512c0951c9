#include "natk/core.hpp"

#include <algorithm>
#include <set>

namespace natk {

std::vector<std::string> default_labels(std::size_t order) {
    std::vector<std::string> out(order);
    for (std::size_t i = 0; i < order; ++i) out[i] = std::to_string(i);
    return out;
}

namespace {

void check_table_shape(const char* what, std::size_t order, const std::vector<Idx>& table) {
    if (order == 0 || order > kMaxOrder)
        fail_validation("BadShape", std::string(what) + ": order out of range");
    if (table.size() != order * order)
        fail_validation("BadShape", std::string(what) + ": table must have order^2 entries, got " +
                                        std::to_string(table.size()));
    for (auto v : table)
        if (v >= order)
            fail_validation("BadShape", std::string(what) + ": entry " + std::to_string(v) +
                                            " out of range [0," + std::to_string(order) + ")");
}

}  // namespace

FiniteMonoid validate_monoid(std::size_t order, std::vector<std::string> labels,
                             std::vector<Idx> mul_table) {
    check_table_shape("monoid", order, mul_table);
    if (labels.empty()) labels = default_labels(order);
    if (labels.size() != order)
        fail_validation("BadShape", "monoid: need one label per element");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != order) fail_validation("BadShape", "monoid: labels must be distinct");
    }

    FiniteMonoid m;
    m.order = order;
    m.labels = std::move(labels);
    m.mul = std::move(mul_table);

    std::optional<Idx> one;
    for (std::size_t e = 0; e < order && !one; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < order && ok; ++a)
            ok = m.at(static_cast<Idx>(e), static_cast<Idx>(a)) == a &&
                 m.at(static_cast<Idx>(a), static_cast<Idx>(e)) == a;
        if (ok) one = static_cast<Idx>(e);
    }
    if (!one) fail_validation("NoIdentity", "monoid: no two-sided identity element");
    m.one = *one;

    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c) {
                Idx ab = m.at(static_cast<Idx>(a), static_cast<Idx>(b));
                Idx bc = m.at(static_cast<Idx>(b), static_cast<Idx>(c));
                if (m.at(ab, static_cast<Idx>(c)) != m.at(static_cast<Idx>(a), bc))
                    fail_validation(
                        "NotAssociative", "monoid: (a*b)*c != a*(b*c)",
                        {{"NotAssociative", {static_cast<int>(a), static_cast<int>(b),
                                             static_cast<int>(c)}}});
            }

    m.zero = find_zero(m);
    m.minus_one = find_minus_one(m);
    return m;
}

FiniteAbelianGroup validate_abelian_group(std::size_t order, std::vector<Idx> add_table) {
    check_table_shape("group", order, add_table);

    FiniteAbelianGroup g;
    g.order = order;
    g.add = std::move(add_table);

    std::optional<Idx> zero;
    for (std::size_t e = 0; e < order && !zero; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < order && ok; ++a)
            ok = g.at(static_cast<Idx>(e), static_cast<Idx>(a)) == a;
        if (ok) zero = static_cast<Idx>(e);
    }
    if (!zero) fail_validation("NoZero", "group: no additive identity");
    g.zero = *zero;

    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = a + 1; b < order; ++b)
            if (g.at(static_cast<Idx>(a), static_cast<Idx>(b)) !=
                g.at(static_cast<Idx>(b), static_cast<Idx>(a)))
                fail_validation("NotCommutative", "group: a+b != b+a",
                                {{"NotCommutative", {static_cast<int>(a), static_cast<int>(b)}}});

    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c) {
                Idx ab = g.at(static_cast<Idx>(a), static_cast<Idx>(b));
                Idx bc = g.at(static_cast<Idx>(b), static_cast<Idx>(c));
                if (g.at(ab, static_cast<Idx>(c)) != g.at(static_cast<Idx>(a), bc))
                    fail_validation(
                        "NotAssociative", "group: (a+b)+c != a+(b+c)",
                        {{"NotAssociative", {static_cast<int>(a), static_cast<int>(b),
                                             static_cast<int>(c)}}});
            }

    g.neg.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a) {
        std::optional<Idx> inv;
        for (std::size_t b = 0; b < order && !inv; ++b)
            if (g.at(static_cast<Idx>(a), static_cast<Idx>(b)) == g.zero)
                inv = static_cast<Idx>(b);
        if (!inv)
            fail_validation("NoInverse", "group: element has no additive inverse",
                            {{"NoInverse", {static_cast<int>(a)}}});
        g.neg[a] = *inv;
    }

    // Rows of a group table are permutations; guarded here as a cheap
    // structural invariant.
    for (std::size_t a = 0; a < order; ++a) {
        ElementSet seen(order);
        for (std::size_t b = 0; b < order; ++b) {
            Idx v = g.at(static_cast<Idx>(a), static_cast<Idx>(b));
            if (seen.test(v))
                fail_validation("NotAGroupRow", "group: row is not a permutation",
                                {{"NotAGroupRow", {static_cast<int>(a)}}});
            seen.set(v);
        }
    }
    return g;
}

std::optional<Idx> find_zero(const FiniteMonoid& m) {
    for (std::size_t e = 0; e < m.order; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < m.order && ok; ++a)
            ok = m.at(static_cast<Idx>(e), static_cast<Idx>(a)) == e &&
                 m.at(static_cast<Idx>(a), static_cast<Idx>(e)) == e;
        if (ok) return static_cast<Idx>(e);  // absorbing element is unique
    }
    return std::nullopt;
}

std::vector<Idx> eta_solutions(const FiniteMonoid& m) {
    std::vector<Idx> out;
    for (std::size_t a = 0; a < m.order; ++a)
        if (m.at(static_cast<Idx>(a), static_cast<Idx>(a)) == m.one)
            out.push_back(static_cast<Idx>(a));
    return out;
}

std::optional<Idx> find_minus_one(const FiniteMonoid& m) {
    std::vector<Idx> sols = eta_solutions(m);
    if (sols.size() == 1) return m.one;
    if (sols.size() == 2) return sols[0] == m.one ? sols[1] : sols[0];
    return std::nullopt;
}

std::optional<Idx> two_sided_inverse(const FiniteMonoid& m, Idx a) {
    for (std::size_t b = 0; b < m.order; ++b)
        if (m.at(a, static_cast<Idx>(b)) == m.one && m.at(static_cast<Idx>(b), a) == m.one)
            return static_cast<Idx>(b);
    return std::nullopt;
}

ScalarGroupReport check_scalar_group(const FiniteMonoid& m) {
    ScalarGroupReport r;
    r.zero = m.zero;
    r.minus_one = m.minus_one;
    r.eta_solutions = eta_solutions(m);
    if (!r.zero) {
        r.failure = Witness{"no-absorbing-zero", {}};
        return r;
    }
    if (!r.minus_one) {
        // More than two involutions; report the least solution distinct from one.
        for (Idx s : r.eta_solutions)
            if (s != m.one) {
                r.failure = Witness{"too-many-involutions", {static_cast<int>(s)}};
                break;
            }
        return r;
    }
    for (std::size_t a = 0; a < m.order; ++a) {
        if (static_cast<Idx>(a) == *r.zero) continue;
        if (!two_sided_inverse(m, static_cast<Idx>(a))) {
            r.failure = Witness{"non-invertible", {static_cast<int>(a)}};
            return r;
        }
    }
    r.is_scalar_group = true;
    return r;
}

bool same_monoid(const FiniteMonoid& a, const FiniteMonoid& b) {
    return a.order == b.order && a.mul == b.mul;
}

}  // namespace natk
