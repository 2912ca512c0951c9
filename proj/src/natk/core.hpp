#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "natk/common.hpp"

namespace natk {

/// A finite monoid as a dense multiplication table. Row selects the left
/// operand: mul[a][b] = a*b. `zero` and `minus_one` are detected, never
/// asserted by callers: `zero` is the unique two-sided absorbing element,
/// `minus_one` the distinguished solution of eta^2 = 1 when that equation has
/// at most two solutions.
struct FiniteMonoid {
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<Idx> mul;  // order*order, row-major
    Idx one = 0;
    std::optional<Idx> zero;
    std::optional<Idx> minus_one;

    Idx at(Idx a, Idx b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
    const std::string& label(Idx a) const { return labels[a]; }
};

/// A finite abelian group as a dense addition table, with located zero and
/// negation table.
struct FiniteAbelianGroup {
    std::size_t order = 0;
    std::vector<Idx> add;  // order*order, row-major
    Idx zero = 0;
    std::vector<Idx> neg;

    Idx at(Idx a, Idx b) const { return add[static_cast<std::size_t>(a) * order + b]; }
    Idx sub(Idx a, Idx b) const { return at(a, neg[b]); }
};

struct ScalarGroupReport {
    bool is_scalar_group = false;
    std::optional<Idx> zero;
    std::optional<Idx> minus_one;
    std::vector<Idx> eta_solutions;  // all solutions of eta^2 = 1, ascending
    std::optional<Witness> failure;  // first failing axiom, when not a scalar group
};

/// Default presentation labels "0", "1", ...
std::vector<std::string> default_labels(std::size_t order);

/// Validates a multiplication table as a monoid. `labels` may be empty (the
/// defaults are used). Throws Error kinds: BadShape, NoIdentity,
/// NotAssociative(a,b,c).
FiniteMonoid validate_monoid(std::size_t order, std::vector<std::string> labels,
                             std::vector<Idx> mul_table);

/// Validates an addition table as an abelian group; locates zero and computes
/// negation. Throws: BadShape, NoZero, NotCommutative(a,b),
/// NotAssociative(a,b,c), NoInverse(a).
FiniteAbelianGroup validate_abelian_group(std::size_t order, std::vector<Idx> add_table);

/// The unique two-sided absorbing element, if any.
std::optional<Idx> find_zero(const FiniteMonoid& m);

/// All solutions of eta^2 = 1, ascending. Always contains `one`.
std::vector<Idx> eta_solutions(const FiniteMonoid& m);

/// The distinguished -1: `one` if eta^2 = 1 has only the trivial solution,
/// the other solution if there are exactly two, absent otherwise.
std::optional<Idx> find_minus_one(const FiniteMonoid& m);

/// Two-sided inverse of `a`, if any.
std::optional<Idx> two_sided_inverse(const FiniteMonoid& m, Idx a);

/// Scalar-group test: an absorbing zero exists, -1 is defined, and every
/// element other than zero is two-sided invertible.
ScalarGroupReport check_scalar_group(const FiniteMonoid& m);

/// Structural equality of the multiplicative data (labels ignored).
bool same_monoid(const FiniteMonoid& a, const FiniteMonoid& b);

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

inline MonoidPtr make_monoid(std::size_t order, std::vector<std::string> labels,
                             std::vector<Idx> mul_table) {
    return std::make_shared<const FiniteMonoid>(
        validate_monoid(order, std::move(labels), std::move(mul_table)));
}

}  // namespace natk
