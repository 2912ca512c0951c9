#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace natk {

/// Element of a finite carrier, a dense index in [0, order).
using Idx = std::uint16_t;

/// Hard cap on carrier sizes of constructed structures (products, Fun(A), ...).
inline constexpr std::size_t kMaxOrder = 1u << 14;

/// A labeled tuple of elements attached to a failed law or a report.
struct Witness {
    std::string label;
    std::vector<int> elements;
};

enum class ErrorClass {
    Validation,  // an algebraic law failed on the given tables
    Parse,       // malformed document text
    Usage,       // bad command line / unresolved reference / precondition
    Io,          // filesystem
    Bound,       // configured size bound exceeded
    Theorem,     // a theorem-backed implication failed (implementation bug)
    Internal,    // broken internal invariant
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& message,
          std::vector<Witness> witnesses = {})
        : std::runtime_error(message),
          cls(cls),
          kind(std::move(kind)),
          witnesses(std::move(witnesses)) {}

    ErrorClass cls;
    std::string kind;
    std::vector<Witness> witnesses;
};

[[noreturn]] inline void fail(ErrorClass cls, std::string kind, const std::string& msg,
                              std::vector<Witness> ws = {}) {
    throw Error(cls, std::move(kind), msg, std::move(ws));
}

[[noreturn]] inline void fail_validation(std::string kind, const std::string& msg,
                                         std::vector<Witness> ws = {}) {
    fail(ErrorClass::Validation, std::move(kind), msg, std::move(ws));
}

/// Fixed-size bitset over a structure's carrier.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}

    static ElementSet full(std::size_t n) {
        ElementSet s(n);
        for (std::size_t i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static ElementSet single(std::size_t n, std::size_t i) {
        ElementSet s(n);
        s.set(i);
        return s;
    }
    template <class It>
    static ElementSet of(std::size_t n, It first, It last) {
        ElementSet s(n);
        for (; first != last; ++first) s.set(static_cast<std::size_t>(*first));
        return s;
    }
    static ElementSet of(std::size_t n, std::initializer_list<std::size_t> xs) {
        return of(n, xs.begin(), xs.end());
    }

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : bits_)
            if (w) return true;
        return false;
    }

    std::vector<Idx> indices() const {
        std::vector<Idx> out;
        out.reserve(count());
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(static_cast<Idx>(i));
        return out;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

    bool operator==(const ElementSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    bool contains(const ElementSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (o.bits_[i] & ~bits_[i]) return false;
        return true;
    }

    /// Canonical order used for sorted submodule listings: by size, then by
    /// the ascending index sequence lexicographically.
    bool canonical_less(const ElementSet& o) const {
        std::size_t a = count(), b = o.count();
        if (a != b) return a < b;
        for (std::size_t i = 0; i < n_; ++i) {
            bool x = test(i), y = o.test(i);
            if (x != y) return x;  // earlier element present -> smaller
        }
        return false;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Deterministic 64-bit RNG (splitmix64); distributions are hand-rolled so
/// sequences are identical across platforms/toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    bool coin() { return next() & 1u; }
    /// Derived stream for a subtask.
    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xD1B54A32D192ED03ull)); }

private:
    std::uint64_t s_;
};

/// FNV-1a, used for content hashes in the catalog index.
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string to_hex16(std::uint64_t v);

/// Mixed-radix index for product carriers; leftmost factor is most significant.
struct MixedRadix {
    std::vector<std::size_t> sizes;

    std::size_t total() const {
        std::size_t t = 1;
        for (auto s : sizes) t *= s;
        return t;
    }
    std::size_t encode(const std::vector<Idx>& coords) const {
        std::size_t v = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) v = v * sizes[i] + coords[i];
        return v;
    }
    void decode(std::size_t index, std::vector<Idx>& coords) const {
        coords.resize(sizes.size());
        for (std::size_t i = sizes.size(); i-- > 0;) {
            coords[i] = static_cast<Idx>(index % sizes[i]);
            index /= sizes[i];
        }
    }
};

/// Scans [0, n) for the first index where `probe` reports a hit. Partitioned
/// across `threads` workers; the returned hit is the least-index one, so the
/// result does not depend on the worker count.
std::optional<std::size_t> first_hit(std::size_t n, int threads,
                                     const std::function<bool(std::size_t)>& probe);

}  // namespace natk
