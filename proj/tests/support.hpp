#pragma once

#include <functional>
#include <string>
#include <vector>

#include "natk/fixtures.hpp"

namespace natk_test {

using namespace natk;

inline std::string fixture_path(const std::string& name) {
    return std::string(NATK_SOURCE_DIR) + "/fixtures/" + name;
}

inline std::vector<Idx> table_from(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<Idx> flat;
    for (const auto& r : rows)
        for (int x : r) flat.push_back(static_cast<Idx>(x));
    return flat;
}

/// Independent three-loop scan of all module identities on raw tables;
/// the oracle validate_module is measured against.
inline bool module_axioms_hold(const FiniteMonoid& m, const FiniteAbelianGroup& g,
                               const std::vector<Idx>& act) {
    const std::size_t nm = m.order, nv = g.order;
    auto at = [&](std::size_t a, std::size_t v) { return act[a * nv + v]; };
    for (std::size_t v = 0; v < nv; ++v)
        if (at(m.one, v) != v) return false;
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b)
            for (std::size_t v = 0; v < nv; ++v)
                if (at(m.at(static_cast<Idx>(a), static_cast<Idx>(b)), v) !=
                    at(a, at(b, v)))
                    return false;
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t u = 0; u < nv; ++u)
            for (std::size_t v = 0; v < nv; ++v)
                if (at(a, g.at(static_cast<Idx>(u), static_cast<Idx>(v))) !=
                    g.at(at(a, u), at(a, v)))
                    return false;
    return true;
}

/// Powerset enumeration of submodules, for carriers of at most 16 elements.
inline std::vector<ElementSet> powerset_submodules(const MModule& v) {
    const std::size_t n = v.order();
    std::vector<ElementSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        ElementSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) s.set(i);
        if (is_submodule(v, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.canonical_less(b); });
    return out;
}

}  // namespace natk_test
