#pragma once

#include "natk/enumerate.hpp"

namespace natk {

/// A monoid together with a set of designated near-rings sharing it as
/// multiplicative structure. Additions are distinct as tables; the list may
/// be empty.
struct MultiNearRing {
    MonoidPtr monoid;
    std::vector<NearRingPtr> designated;
};

MultiNearRing make_multi_nearring(MonoidPtr monoid, std::vector<NearRingPtr> designated);

/// The multi-near-ring whose designated set is every near-ring on the monoid.
MultiNearRing enumerate_multi_nearring(MonoidPtr monoid, std::size_t order_bound = 12);

struct QuasiKernelReport {
    ElementSet qv;
    /// gamma[(v*|M| + a)*|M| + b] = least gamma with gamma*v = a*v + b*v,
    /// populated for members of qv.
    std::vector<Idx> gamma;
};

/// Q(V) = { v : for all a,b there is gamma with a*v + b*v = gamma*v }.
QuasiKernelReport quasi_kernel(const MModule& v, int threads = 1);

struct Qk1Result {
    ElementSet qstar;          // {0} plus every element with a designated witness
    std::vector<int> witness;  // per element: least designated index, or -1
};

/// The maximal (QK1) set: 0 together with every v for which some designated
/// addition satisfies (a +_N b)*v = a*v + b*v for all a, b.
Qk1Result max_qk1_set(const MModule& v, const MultiNearRing& r);

struct Qk2Result {
    bool ok = false;
    std::optional<Idx> failure;  // first v outside its recovered closure
};

/// (QK2) for the given Q: every v lies in the group closure of
/// M * (closure(M*{v}) intersected with Q).
Qk2Result check_qk2(const MModule& v, const ElementSet& q);

struct Qk3Result {
    bool ok = false;
    std::optional<std::array<Idx, 4>> failure;  // (v, q, alpha, r)
};

/// (QK3): for v outside Q, q in Q, alpha distinct from the monoid zero and
/// any r with alpha*q + r in the submodule generated by v, some beta gives
/// q + beta*r in that submodule. When the monoid has no absorbing zero all
/// alpha are quantified.
Qk3Result check_qk3(const MModule& v, const ElementSet& q, const MultiNearRing& r);

struct AndreReport {
    bool is_andre = false;
    ElementSet qstar;
    std::vector<int> nearring_witness;
    std::optional<Idx> qk2_failure;
};

/// Decides the module property via the maximal (QK1) set: a witness subset
/// exists iff the maximal one passes (QK2).
AndreReport check_andre(const MModule& v, const MultiNearRing& r);

/// Exhaustive powerset decision of "some Q subset of V satisfies (QK1) and
/// (QK2)"; the independent check the maximal-set shortcut is measured
/// against. Guarded to |V| <= max_order.
bool oracle_exists_q(const MModule& v, const MultiNearRing& r, std::size_t max_order = 16);

struct NvsReport {
    bool is_nvs = false;
    ScalarGroupReport scalar;
    ActionPropertyReport action;
    bool qv_generates = false;
    std::string failure;  // first failing clause tag, empty when is_nvs
};

/// Near-vector-space test: scalar-group monoid, (FA), (SA), and the quasi-
/// kernel generates the carrier.
NvsReport check_nvs(const MModule& v, int threads = 1);

struct EndoSetReport {
    std::vector<std::vector<Idx>> fstar;  // the action endofunctions, by scalar index
    bool has_zero_one_minus_one = false;
    bool nonzero_subgroup = false;   // nonzero endofunctions form a permutation group
    bool fixed_point_free = false;
    bool generates = false;          // quasi-kernel generates the carrier
};

/// Repackages a nontrivial near-vector space as a set of endofunctions and
/// certifies the classical axioms for that presentation. Throws
/// TrivialModule when |V| = 1 and NotNearVectorSpace otherwise.
EndoSetReport nvs_to_endoset(const MModule& v);

struct DesignatedProduct {
    ModulePtr module_;
    ElementSet q;  // the coordinate-unit subset
    bool qk2_ok = false;
    bool andre_ok = false;
};

/// Product of designated near-rings (as modules, diagonal action), together
/// with the coordinate-unit subset Q = {e_N} and the outcome of (QK2) on it
/// and of the module decision. Throws EmptySelection.
DesignatedProduct product_of_designated(const MultiNearRing& r,
                                        const std::vector<std::size_t>& selection);

/// For a multi-near-ring with exactly one designated ring: the module
/// decision must coincide with the direct distributivity scan. Throws
/// NotSingleRing, TheoremViolation.
bool check_ring_module_equiv(const MModule& v, const MultiNearRing& r);

struct TrailStep {
    Idx target;      // the element being rewritten
    Idx q1, q2;      // quasi-kernel summands with distinct designated additions
    Idx alpha, beta; // scalars separating the two additions
    Idx beta_prime;  // the (QK3) witness
};

struct DecompositionCertificate {
    Idx target;
    std::vector<Idx> parts;  // in closure(M*{target}) intersect Q(V), summing to target
    std::size_t m_v;         // minimal quasi-kernel presentation length
    std::vector<TrailStep> trail;
};

/// Constructive rewriting of v as a sum of quasi-kernel elements of its own
/// orbit closure, by strong induction on the minimal presentation length.
/// Hypotheses checked: Q(V) satisfies (QK1) against r, M*Q(V) = Q(V),
/// Q(V) generates, and (QK3) holds; throws HypothesisFailed otherwise, and
/// NoPresentation when the target is unreachable (an implementation bug).
DecompositionCertificate decompose_quasikernel(const MModule& v, const MultiNearRing& r,
                                               Idx target);

/// All certificates at once (hypotheses checked a single time).
std::vector<DecompositionCertificate> decompose_all(const MModule& v, const MultiNearRing& r);

/// Minimal number of quasi-kernel summands per element, by breadth-first
/// layering over Q(V) sums; SIZE_MAX marks unreachable elements.
std::vector<std::size_t> mv_layers(const MModule& v, const ElementSet& qv);

struct TfaeReport {
    bool submodules_generated = false;  // every submodule W has closure(Q(W)) = W
    bool qk2_all = false;               // v in cl(M*(cl(M*{v}) cap Q(V))) for all v
    bool qk2prime_all = false;          // v in cl(cl(M*{v}) cap Q(V)) for all v
    bool thmaa_equality = false;        // the two closures agree as sets, per element
    bool qw_identity = false;           // Q(W) = W cap Q(V) for every submodule
};

/// The subspace-hypothesis equivalences on a near-vector space; all five
/// facts are asserted and a TheoremViolation carries the first witness.
/// Throws NotNearVectorSpace when the module is not one.
TfaeReport check_tfae(const ModulePtr& v);

}  // namespace natk
