#pragma once

#include "natk/module.hpp"

namespace natk {

/// A (left unitary abelian) near-ring: one carrier bearing a monoid table and
/// an abelian group table, with a*(b+c) = a*b + a*c. The carrier is a module
/// over its own monoid via left multiplication.
struct NearRing {
    MonoidPtr monoid;
    FiniteAbelianGroup add;

    std::size_t order() const { return add.order; }
    Idx mul(Idx a, Idx b) const { return monoid->at(a, b); }
    Idx plus(Idx a, Idx b) const { return add.at(a, b); }
    Idx minus(Idx a, Idx b) const { return add.sub(a, b); }
};

using NearRingPtr = std::shared_ptr<const NearRing>;

struct NearRingReport {
    bool is_nearfield = false;
    bool is_ring = false;  // both distributive laws
    bool fa = false;
    bool sa = false;                 // 0_add * v = 0_add and (-1)*v = -v, -1 = -(1)
    bool s1_for_minus_one = false;   // solutions of eta^2 = 1 equal {1, -1}
    std::vector<Witness> witnesses;  // one labeled witness per failed law
};

/// Validates the left distributive law over a certified abelian group on the
/// monoid's carrier. Throws: NotAbelianGroup (forwarded), BadShape,
/// NotLeftDistributive(a,b,c).
NearRingPtr validate_nearring(MonoidPtr monoid, FiniteAbelianGroup add);
NearRingPtr validate_nearring(MonoidPtr monoid, std::vector<Idx> add_table);

/// The carrier as a module over its own monoid, act[a][v] = a*v.
ModulePtr as_module(const NearRing& n);

/// All flags computed by exhaustive scans; scanning continues past the first
/// failed law so reports list every failure.
NearRingReport classify(const NearRing& n, int threads = 1);

/// The pairing (a,b)#(c,d) = (ac, bc + a^n d) on R x R for a ring R. Succeeds
/// exactly when (ac)^n = a^n c^n holds in R; throws PowerLawFails(a,c)
/// otherwise, and NotRing when R is not a ring.
NearRingPtr hash_construction(const NearRing& ring, unsigned n);

/// All endofunctions of A's carrier under pointwise addition and opposite
/// composition f*g = g o f. Throws BoundExceeded when |A|^|A| > bound.
NearRingPtr fun_nearring(const FiniteAbelianGroup& a, std::size_t bound = 256);

/// Checks phi(ab) = phi(a)phi(b) and phi(1) = 1 for a permutation phi.
bool is_multiplicative_automorphism(const FiniteMonoid& m, const std::vector<Idx>& phi,
                                    std::optional<std::array<Idx, 2>>* witness = nullptr);

/// New addition a (+) b = phi^-1(phi(a) + phi(b)) along a multiplicative
/// automorphism phi. Throws NotMultiplicativeAutomorphism(a,b).
NearRingPtr transport_addition(const NearRing& n, const std::vector<Idx>& phi);

/// The order-9 near-field on GF(9) = GF(3)[x]/(x^2+1): x*y is the field
/// product when x is a nonzero square or zero, and x*y^3 otherwise. A
/// near-field that is not a ring; its nonzero elements form the quaternion
/// group.
NearRingPtr dickson_fixture();

/// Multiplicities of multiplicative element orders among nonzero elements;
/// requires the nonzero elements to form a group.
std::vector<std::pair<std::size_t, std::size_t>> nonzero_order_census(const NearRing& n);

/// Asserts, on this instance: near-field => FA; FA => SA with -1 the additive
/// inverse of 1; FA => solutions of eta^2=1 lie in {1,-1}. Throws
/// TheoremViolation if an implication fails (an implementation bug), else
/// returns the classification report.
NearRingReport verify_lema(const NearRing& n);

}  // namespace natk
