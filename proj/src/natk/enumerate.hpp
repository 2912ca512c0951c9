#pragma once

#include "natk/nearring.hpp"

namespace natk {

struct EnumerationTask {
    MonoidPtr monoid;
    std::optional<std::size_t> max_results;
    bool dedup_by_automorphism = false;
    std::size_t order_bound = 12;
};

struct EnumerationResult {
    std::vector<std::vector<Idx>> additions;  // flat n*n tables, lexicographically sorted
    bool complete = true;
    std::optional<std::vector<std::vector<std::size_t>>> orbits;  // index groups, when deduped
};

/// All abelian group tables on the monoid's carrier for which every left
/// multiplication is an endomorphism (equivalently, which make the carrier a
/// near-ring). Backtracking over table cells: additive identity candidates
/// are the elements e with a*e = e for all a; commutativity, the Latin
/// property and the endomorphism constraints propagate eagerly; completed
/// tables are re-validated from scratch.
EnumerationResult enumerate_nearrings(const EnumerationTask& task);

/// Independent oracle for small monoids (order <= 5): walks all tables whose
/// rows are permutations (with symmetry pruning) and filters by the full
/// axiom set, with no constraint propagation shared with the search above.
EnumerationResult oracle_enumerate_nearrings(const FiniteMonoid& m);

/// All monoid automorphisms, as permutation tables, lexicographically sorted.
std::vector<std::vector<Idx>> monoid_automorphisms(const FiniteMonoid& m);

/// The addition table conjugated by phi: a (+) b = phi^-1(phi(a) + phi(b)).
std::vector<Idx> transported_table(const std::vector<Idx>& add, std::size_t n,
                                   const std::vector<Idx>& phi);

/// Groups a complete enumeration into orbits under automorphism transport;
/// the canonical representative of an orbit is its lexicographically least
/// table.
EnumerationResult dedup_by_automorphism(EnumerationResult result, const FiniteMonoid& m);

}  // namespace natk
