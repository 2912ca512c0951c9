#include "natk/fixtures.hpp"

namespace natk {
namespace fixtures {

MonoidPtr zmod_mult(std::size_t n) {
    std::vector<Idx> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Idx>(a * b % n);
    return make_monoid(n, {}, std::move(mul));
}

MonoidPtr cyclic_as_monoid(std::size_t n) {
    std::vector<Idx> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Idx>((a + b) % n);
    return make_monoid(n, {}, std::move(mul));
}

MonoidPtr klein_as_monoid() {
    std::vector<Idx> mul(16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) mul[a * 4 + b] = static_cast<Idx>(a ^ b);
    return make_monoid(4, {}, std::move(mul));
}

MonoidPtr idempotent_three() {
    // 0 = identity, 1 = idempotent e with e*z = z*e = z, 2 = absorbing z.
    std::vector<Idx> mul{0, 1, 2, 1, 1, 2, 2, 2, 2};
    return make_monoid(3, {"1", "e", "z"}, std::move(mul));
}

FiniteAbelianGroup cyclic_group(std::size_t n) {
    std::vector<Idx> add(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) add[a * n + b] = static_cast<Idx>((a + b) % n);
    return validate_abelian_group(n, std::move(add));
}

FiniteAbelianGroup group_product(const std::vector<std::size_t>& orders) {
    MixedRadix radix{orders};
    std::size_t n = radix.total();
    std::vector<Idx> xs, ys, zs;
    std::vector<Idx> add(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        radix.decode(i, xs);
        for (std::size_t j = 0; j < n; ++j) {
            radix.decode(j, ys);
            zs.resize(xs.size());
            for (std::size_t c = 0; c < xs.size(); ++c)
                zs[c] = static_cast<Idx>((xs[c] + ys[c]) % orders[c]);
            add[i * n + j] = static_cast<Idx>(radix.encode(zs));
        }
    }
    return validate_abelian_group(n, std::move(add));
}

NearRingPtr ring_zmod(std::size_t n) {
    return validate_nearring(zmod_mult(n), cyclic_group(n));
}

NearRingPtr upper_triangular_z2() {
    const std::size_t n = 8;
    auto a_of = [](std::size_t i) { return (i >> 2) & 1; };
    auto b_of = [](std::size_t i) { return (i >> 1) & 1; };
    auto d_of = [](std::size_t i) { return i & 1; };
    std::vector<Idx> mul(n * n), add(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t a = a_of(i) & a_of(j);
            std::size_t b = (a_of(i) & b_of(j)) ^ (b_of(i) & d_of(j));
            std::size_t d = d_of(i) & d_of(j);
            mul[i * n + j] = static_cast<Idx>(4 * a + 2 * b + d);
            add[i * n + j] = static_cast<Idx>(i ^ j);
        }
    return validate_nearring(make_monoid(n, {}, std::move(mul)), std::move(add));
}

std::vector<Idx> z9_swap_automorphism() {
    std::vector<Idx> phi(9);
    for (std::size_t x = 0; x < 9; ++x) phi[x] = static_cast<Idx>(x);
    phi[3] = 6;
    phi[6] = 3;
    return phi;
}

NearRingPtr z9_plus() { return ring_zmod(9); }

NearRingPtr z9_phi() { return transport_addition(*z9_plus(), z9_swap_automorphism()); }

MultiNearRing z9_multi() {
    NearRingPtr plus = z9_plus();
    NearRingPtr phi = transport_addition(*plus, z9_swap_automorphism());
    return make_multi_nearring(plus->monoid, {plus, phi});
}

ModulePtr z9_product_module() {
    MultiNearRing r = z9_multi();
    return product(r.monoid, {as_module(*r.designated[0]), as_module(*r.designated[1])});
}

ModulePtr z4_over_m2() {
    MonoidPtr m = m2();
    FiniteAbelianGroup g = cyclic_group(4);
    std::vector<Idx> act(2 * 4, 0);
    for (std::size_t v = 0; v < 4; ++v) act[4 + v] = static_cast<Idx>(v);
    return validate_module(std::move(m), std::move(g), std::move(act));
}

ModulePtr gf2_power(std::size_t k) {
    MonoidPtr m = m2();
    std::size_t n = std::size_t(1) << k;
    FiniteAbelianGroup g = group_product(std::vector<std::size_t>(k, 2));
    std::vector<Idx> act(2 * n, 0);
    for (std::size_t v = 0; v < n; ++v) act[n + v] = static_cast<Idx>(v);
    return validate_module(std::move(m), std::move(g), std::move(act));
}

ModulePtr gf3_power(std::size_t k) {
    MonoidPtr m = m3();
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= 3;
    FiniteAbelianGroup g = group_product(std::vector<std::size_t>(k, 3));
    std::vector<Idx> act(3 * n);
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t v = 0; v < n; ++v) {
            // Scale each base-3 digit.
            std::size_t x = v, y = 0, p = 1;
            for (std::size_t d = 0; d < k; ++d) {
                y += (x % 3) * s % 3 * p;
                x /= 3;
                p *= 3;
            }
            act[s * n + v] = static_cast<Idx>(y);
        }
    return validate_module(std::move(m), std::move(g), std::move(act));
}

ModulePtr z6_over_m3() {
    MonoidPtr m = m3();
    FiniteAbelianGroup g = cyclic_group(6);
    std::vector<Idx> act(3 * 6);
    for (std::size_t v = 0; v < 6; ++v) {
        act[0 * 6 + v] = static_cast<Idx>(3 * v % 6);
        act[1 * 6 + v] = static_cast<Idx>(v);
        act[2 * 6 + v] = static_cast<Idx>(5 * v % 6);
    }
    return validate_module(std::move(m), std::move(g), std::move(act));
}

ModulePtr dickson_module() { return as_module(*dickson_fixture()); }

ModulePtr dickson_square() {
    ModulePtr j = dickson_module();
    return product(j->monoid, {j, j});
}

ModulePtr dickson_half_action() {
    NearRingPtr j = dickson_fixture();
    const std::size_t k = j->order(), n = k * k;
    FiniteAbelianGroup g = validate_abelian_group(n, [&] {
        std::vector<Idx> add(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jx = 0; jx < n; ++jx) {
                Idx a = j->plus(static_cast<Idx>(i / k), static_cast<Idx>(jx / k));
                Idx b = j->plus(static_cast<Idx>(i % k), static_cast<Idx>(jx % k));
                add[i * n + jx] = static_cast<Idx>(static_cast<std::size_t>(a) * k + b);
            }
        return add;
    }());
    std::vector<Idx> act(k * n);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t v = 0; v < n; ++v) {
            Idx first = j->mul(static_cast<Idx>(s), static_cast<Idx>(v / k));
            act[s * n + v] = static_cast<Idx>(static_cast<std::size_t>(first) * k + v % k);
        }
    return validate_module(j->monoid, std::move(g), std::move(act));
}

}  // namespace fixtures
}  // namespace natk
