#pragma once

#include "natk/andre.hpp"

namespace natk {
namespace fixtures {

/// Multiplicative monoid of Z/n.
MonoidPtr zmod_mult(std::size_t n);
/// Cyclic group of order n, viewed as a monoid.
MonoidPtr cyclic_as_monoid(std::size_t n);
/// Klein four-group as a monoid.
MonoidPtr klein_as_monoid();
/// {1, e, z} with an idempotent e and absorbing z.
MonoidPtr idempotent_three();
inline MonoidPtr trivial_monoid() { return zmod_mult(1); }
inline MonoidPtr m2() { return zmod_mult(2); }
inline MonoidPtr m3() { return zmod_mult(3); }

/// Cyclic group Z/n as an abelian group table.
FiniteAbelianGroup cyclic_group(std::size_t n);
/// Direct product of cyclic groups (leftmost factor most significant).
FiniteAbelianGroup group_product(const std::vector<std::size_t>& orders);

/// Z/n as a (near-)ring.
NearRingPtr ring_zmod(std::size_t n);
/// The ring of upper triangular 2x2 matrices over Z/2; index = 4a + 2b + d
/// for [[a,b],[0,d]].
NearRingPtr upper_triangular_z2();

/// The Z/9 automorphism swapping 3 and 6 (fixing units and 0).
std::vector<Idx> z9_swap_automorphism();
NearRingPtr z9_plus();
NearRingPtr z9_phi();
/// (Z/9 monoid, {+, +_phi}).
MultiNearRing z9_multi();
/// (Z/9,+) x (Z/9,+_phi) with componentwise multiplication as the action.
ModulePtr z9_product_module();

/// Z/4 over the GF(2) monoid, 0*v = 0 and 1*v = v.
ModulePtr z4_over_m2();
/// GF(2)^k over the GF(2) monoid.
ModulePtr gf2_power(std::size_t k);
/// GF(3)^k over the GF(3) monoid, scalar action.
ModulePtr gf3_power(std::size_t k);
/// Z/6 over the GF(3) monoid, acting by multiplication by 0 -> 3x, 2 -> 5x.
ModulePtr z6_over_m3();

/// The order-9 near-field as a module over its own monoid.
ModulePtr dickson_module();
/// Its square, diagonal action.
ModulePtr dickson_square();
/// J x J acting on the first coordinate only; a module that is not a
/// near-vector space.
ModulePtr dickson_half_action();

}  // namespace fixtures
}  // namespace natk
