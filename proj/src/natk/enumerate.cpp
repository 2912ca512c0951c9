#include "natk/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace natk {

namespace {

/// Cell-by-cell backtracking over symmetric tables with eager propagation of
/// the Latin property, commutativity and the left-multiplication
/// endomorphism constraints.
class AdditionSearch {
public:
    AdditionSearch(const FiniteMonoid& m, std::optional<std::size_t> max)
        : m_(m), n_(m.order), max_(max), table_(n_ * n_, kUnset), row_used_(n_, 0) {}

    std::pair<std::vector<std::vector<Idx>>, bool> run() {
        for (std::size_t e = 0; e < n_; ++e) {
            bool candidate = true;
            for (std::size_t a = 0; a < n_ && candidate; ++a)
                candidate = m_.at(static_cast<Idx>(a), static_cast<Idx>(e)) == e;
            if (!candidate) continue;  // a*0 = 0 holds in every near-ring
            std::fill(table_.begin(), table_.end(), kUnset);
            std::fill(row_used_.begin(), row_used_.end(), 0u);
            trail_.clear();
            bool ok = true;
            for (std::size_t x = 0; x < n_ && ok; ++x) {
                ok = assign(static_cast<Idx>(e), static_cast<Idx>(x), static_cast<Idx>(x)) &&
                     assign(static_cast<Idx>(x), static_cast<Idx>(e), static_cast<Idx>(x));
            }
            if (ok && !search(0)) return {std::move(found_), false};
        }
        std::sort(found_.begin(), found_.end());
        found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
        return {std::move(found_), true};
    }

private:
    static constexpr int kUnset = -1;

    int cell(Idx a, Idx b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }

    // Returns false on conflict. Records every write for undo.
    bool assign(Idx a, Idx b, Idx v) {
        int cur = cell(a, b);
        if (cur != kUnset) return cur == static_cast<int>(v);
        if (row_used_[a] & (1u << v)) return false;
        if (a != b && (row_used_[b] & (1u << v))) return false;
        write(a, b, v);
        if (a != b) write(b, a, v);

        // Associativity on triples whose intermediate cells are all known.
        for (std::size_t w = 0; w < n_; ++w) {
            int vw = cell(v, static_cast<Idx>(w));
            int bw = cell(b, static_cast<Idx>(w));
            if (vw != kUnset && bw != kUnset) {
                int a_bw = cell(a, static_cast<Idx>(bw));
                if (a_bw != kUnset && a_bw != vw) return false;
            }
            int wa = cell(static_cast<Idx>(w), a);
            if (wa != kUnset) {
                int wa_b = cell(static_cast<Idx>(wa), b);
                int wv = cell(static_cast<Idx>(w), v);
                if (wa_b != kUnset && wv != kUnset && wa_b != wv) return false;
            }
        }

        // lambda_s is an endomorphism: s*(a+b) = s*a + s*b.
        for (std::size_t s = 0; s < n_; ++s) {
            Idx sa = m_.at(static_cast<Idx>(s), a);
            Idx sb = m_.at(static_cast<Idx>(s), b);
            Idx sv = m_.at(static_cast<Idx>(s), v);
            if (!assign(sa, sb, sv)) return false;
        }
        return true;
    }

    void write(Idx a, Idx b, Idx v) {
        table_[static_cast<std::size_t>(a) * n_ + b] = static_cast<int>(v);
        row_used_[a] |= 1u << v;
        trail_.push_back(static_cast<std::size_t>(a) * n_ + b);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            std::size_t pos = trail_.back();
            trail_.pop_back();
            Idx a = static_cast<Idx>(pos / n_);
            Idx v = static_cast<Idx>(table_[pos]);
            table_[pos] = kUnset;
            row_used_[a] &= ~(1u << v);
        }
    }

    // Returns false when max_results has been reached.
    bool search(std::size_t from) {
        std::size_t pos = from;
        while (pos < n_ * n_ && table_[pos] != kUnset) ++pos;
        if (pos == n_ * n_) return emit();
        Idx a = static_cast<Idx>(pos / n_), b = static_cast<Idx>(pos % n_);
        for (std::size_t v = 0; v < n_; ++v) {
            std::size_t mark = trail_.size();
            if (assign(a, b, static_cast<Idx>(v))) {
                if (!search(pos + 1)) return false;
            }
            undo_to(mark);
        }
        return true;
    }

    bool emit() {
        std::vector<Idx> t(n_ * n_);
        for (std::size_t i = 0; i < n_ * n_; ++i) t[i] = static_cast<Idx>(table_[i]);
        // Full re-validation, independent of the propagation above.
        FiniteAbelianGroup g;
        try {
            g = validate_abelian_group(n_, t);
        } catch (const Error&) {
            return true;
        }
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c) {
                    Idx lhs = m_.at(static_cast<Idx>(a), g.at(static_cast<Idx>(b),
                                                              static_cast<Idx>(c)));
                    Idx rhs = g.at(m_.at(static_cast<Idx>(a), static_cast<Idx>(b)),
                                   m_.at(static_cast<Idx>(a), static_cast<Idx>(c)));
                    if (lhs != rhs) return true;
                }
        found_.push_back(std::move(t));
        return !(max_ && found_.size() >= *max_);
    }

    const FiniteMonoid& m_;
    std::size_t n_;
    std::optional<std::size_t> max_;
    std::vector<int> table_;
    std::vector<std::uint32_t> row_used_;
    std::vector<std::size_t> trail_;
    std::vector<std::vector<Idx>> found_;
};

}  // namespace

EnumerationResult enumerate_nearrings(const EnumerationTask& task) {
    if (!task.monoid) fail(ErrorClass::Usage, "NoMonoid", "enumeration: monoid required");
    const FiniteMonoid& m = *task.monoid;
    if (m.order > task.order_bound)
        fail(ErrorClass::Bound, "BoundExceeded",
             "enumeration bound exceeded: |M| = " + std::to_string(m.order) + " > " +
                 std::to_string(task.order_bound));
    if (m.order > 31)
        fail(ErrorClass::Bound, "BoundExceeded", "enumeration limited to |M| <= 31");

    AdditionSearch search(m, task.max_results);
    auto [tables, complete] = search.run();
    EnumerationResult r;
    r.additions = std::move(tables);
    r.complete = complete;
    if (!complete) std::sort(r.additions.begin(), r.additions.end());
    if (task.dedup_by_automorphism) r = dedup_by_automorphism(std::move(r), m);
    return r;
}

EnumerationResult oracle_enumerate_nearrings(const FiniteMonoid& m) {
    const std::size_t n = m.order;
    if (n > 5)
        fail(ErrorClass::Bound, "BoundExceeded", "oracle enumeration limited to |M| <= 5");

    std::vector<std::vector<Idx>> perms;
    {
        std::vector<Idx> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Idx>(i);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<std::vector<Idx>> rows(n);
    std::vector<std::vector<Idx>> found;

    // Direct law checks, written independently of validate_* on purpose.
    auto is_nearring_table = [&](const std::vector<Idx>& t) {
        std::optional<std::size_t> zero;
        for (std::size_t e = 0; e < n && !zero; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) ok = t[e * n + a] == a;
            if (ok) zero = e;
        }
        if (!zero) return false;
        for (std::size_t a = 0; a < n; ++a) {
            bool has_inv = false;
            for (std::size_t b = 0; b < n && !has_inv; ++b) has_inv = t[a * n + b] == *zero;
            if (!has_inv) return false;
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
                    Idx lhs = m.at(static_cast<Idx>(a), static_cast<Idx>(t[b * n + c]));
                    Idx rhs = t[static_cast<std::size_t>(m.at(static_cast<Idx>(a),
                                                              static_cast<Idx>(b))) *
                                    n +
                                m.at(static_cast<Idx>(a), static_cast<Idx>(c))];
                    if (lhs != rhs) return false;
                }
        return true;
    };

    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == n) {
            std::vector<Idx> t(n * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) t[r * n + c] = rows[r][c];
            if (is_nearring_table(t)) found.push_back(std::move(t));
            return;
        }
        for (const auto& p : perms) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = p[j] == rows[j][i];  // symmetry
            if (!ok) continue;
            rows[i] = p;
            place(i + 1);
        }
    };
    place(0);

    std::sort(found.begin(), found.end());
    EnumerationResult r;
    r.additions = std::move(found);
    r.complete = true;
    return r;
}

std::vector<std::vector<Idx>> monoid_automorphisms(const FiniteMonoid& m) {
    const std::size_t n = m.order;
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<Idx>> found;

    img[m.one] = static_cast<int>(m.one);
    used[m.one] = true;

    auto consistent = [&](std::size_t x) {
        for (std::size_t a = 0; a <= x; ++a) {
            if (img[a] < 0) continue;
            for (std::size_t b = 0; b <= x; ++b) {
                if (img[b] < 0) continue;
                Idx ab = m.at(static_cast<Idx>(a), static_cast<Idx>(b));
                if (img[ab] < 0) continue;
                if (m.at(static_cast<Idx>(img[a]), static_cast<Idx>(img[b])) != img[ab])
                    return false;
            }
        }
        return true;
    };

    std::function<void(std::size_t)> place = [&](std::size_t x) {
        if (x == n) {
            std::vector<Idx> phi(n);
            for (std::size_t i = 0; i < n; ++i) phi[i] = static_cast<Idx>(img[i]);
            if (is_multiplicative_automorphism(m, phi)) found.push_back(std::move(phi));
            return;
        }
        if (img[x] >= 0) {
            place(x + 1);
            return;
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y]) continue;
            img[x] = static_cast<int>(y);
            used[y] = true;
            if (consistent(x)) place(x + 1);
            img[x] = -1;
            used[y] = false;
        }
    };
    place(0);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Idx> transported_table(const std::vector<Idx>& add, std::size_t n,
                                   const std::vector<Idx>& phi) {
    std::vector<Idx> inv(n);
    for (std::size_t x = 0; x < n; ++x) inv[phi[x]] = static_cast<Idx>(x);
    std::vector<Idx> out(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            out[a * n + b] = inv[add[static_cast<std::size_t>(phi[a]) * n + phi[b]]];
    return out;
}

EnumerationResult dedup_by_automorphism(EnumerationResult result, const FiniteMonoid& m) {
    if (!result.complete)
        fail(ErrorClass::Usage, "Truncated",
             "orbit grouping requires a complete enumeration");
    auto autos = monoid_automorphisms(m);
    std::map<std::vector<Idx>, std::size_t> index_of;
    for (std::size_t i = 0; i < result.additions.size(); ++i)
        index_of[result.additions[i]] = i;

    std::vector<bool> seen(result.additions.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < result.additions.size(); ++i) {
        if (seen[i]) continue;
        std::set<std::size_t> orbit;
        for (const auto& phi : autos) {
            auto t = transported_table(result.additions[i], m.order, phi);
            auto it = index_of.find(t);
            if (it == index_of.end())
                fail(ErrorClass::Internal, "OrbitEscape",
                     "transport of an enumerated addition is missing from the enumeration");
            orbit.insert(it->second);
        }
        std::vector<std::size_t> o(orbit.begin(), orbit.end());
        for (auto j : o) seen[j] = true;
        orbits.push_back(std::move(o));
    }
    result.orbits = std::move(orbits);
    return result;
}

}  // namespace natk
