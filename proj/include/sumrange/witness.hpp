#pragma once

// Constructive generators for sets realizing prescribed sumset sizes.
// Every constructor re-verifies its claim through the core kernels before
// returning; an unverifiable witness is a defect and throws logic_error.

#include <string_view>
#include <variant>

#include "sumrange/core.hpp"

namespace sumrange {

enum class WitnessKind {
    two_fold,
    two_fold_restricted,
    h3_family,
    ap_minimum,
    powers_maximum,
    named_family,
    group_counterexample,
};

enum class Extreme { minimum, maximum };

/// The literal four- and five-element families used to realize the
/// three-fold size ranges for k = 4 and k = 5.
enum class Family { P1, P2, Q1, Q2, Q3, Q4, Q5 };

struct Witness {
    std::variant<IntSet, GroupSet> set;
    Int h = 0;
    bool restricted = false;
    Int claimed_size = 0;
    WitnessKind kind{};

    /// Recomputes |h*set| (or the restricted size) through core.
    bool verify() const;
    bool holds_int_set() const { return std::holds_alternative<IntSet>(set); }
    const IntSet& int_set() const { return std::get<IntSet>(set); }
    const GroupSet& group_set() const { return std::get<GroupSet>(set); }
};

/// A k-element set A in [0, 2^k - 1] with |2A| = t, for any
/// t in [2k-1, (k^2+k)/2].
Witness witness_sumset_2(Int k, Int t);

/// A k-element set A in [0, 2^(k-2)] with restricted 2-fold size t, for any
/// t in [2k-3, (k^2-k)/2] (k >= 2).
Witness witness_restricted_2(Int k, Int t);

/// The set {0,1,b} with |hA| = t, for t in range_h3_closed_form(h).
Witness witness_h3(Int h, Int t);

/// minimum: the arithmetic progression [0, k-1];
/// maximum: k powers of g = h+1, whose h-fold sums are all distinct.
Witness witness_extremes(Int h, Int k, Extreme which, bool restricted);

/// Literal family member; b must lie in the family's admitted range.
IntSet family_member(Family name, Int b);

/// A k-element subset of Z/mZ + Z (m = hk-h, or hk-h^2 restricted) whose
/// h-fold size equals m, below the minimum possible over the integers.
/// Requires m >= max(2, k) so that {(i,0) : i in [0,k-1]} has k elements.
Witness group_counterexample(Int h, Int k, bool restricted);

std::string_view to_string(WitnessKind kind);
std::string_view to_string(Family name);
std::optional<Family> family_from_string(std::string_view name);

}  // namespace sumrange
