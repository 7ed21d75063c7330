#pragma once

// Exact set and group arithmetic for h-fold sumsets and restricted sumsets.
//
// Integer sumsets run on a dense bit-vector kernel over the translated
// offset range [0, h*diameter] (shift-or accumulation); sets whose diameter
// exceeds a configurable limit fall back to a sorted-merge kernel.  All
// arithmetic is overflow-checked: a computation that would leave the int64
// range throws std::overflow_error instead of wrapping.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumrange {

using Int = std::int64_t;

inline constexpr std::string_view kVersion = "0.1.0";

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Sorted set of distinct integers.  May be empty as a *result* value;
/// sumset operations reject empty inputs.
class IntSet {
public:
    IntSet() = default;
    /// Sorts and removes duplicates.
    explicit IntSet(std::vector<Int> elems);
    /// Precondition: `elems` strictly increasing (checked).
    static IntSet from_sorted(std::vector<Int> elems);
    /// The interval of integers [lo, hi]; empty when lo > hi.
    static IntSet interval(Int lo, Int hi);

    Int size() const { return static_cast<Int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    Int min() const;
    Int max() const;
    /// max - min; 0 for singletons.  Throws on empty.
    Int diameter() const;
    /// Sum of all elements (overflow-checked).
    Int element_sum() const;
    bool contains(Int x) const;

    const std::vector<Int>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
        return a.elems_ <=> b.elems_;
    }

private:
    std::vector<Int> elems_;
};

/// Finitely generated abelian group  Z/m1 + ... + Z/mr + Z^s.
/// Coordinates are ordered torsion first, then free.
class GroupSpec {
public:
    GroupSpec() = default;  // trivial group
    GroupSpec(std::vector<Int> torsion_moduli, Int free_rank);

    const std::vector<Int>& torsion_moduli() const { return moduli_; }
    Int torsion_rank() const { return static_cast<Int>(moduli_.size()); }
    Int free_rank() const { return free_rank_; }
    Int coord_count() const { return torsion_rank() + free_rank_; }
    /// True iff the group contains elements of arbitrarily large order;
    /// for this group shape that means free rank >= 1.
    bool unbounded_exponent() const { return free_rank_ >= 1; }
    /// Number of elements of the torsion part (1 when there is none).
    Int torsion_size() const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<Int> moduli_;
    Int free_rank_ = 0;
};

/// Element coordinates, torsion coordinates stored reduced into [0, m_i).
struct GroupElem {
    std::vector<Int> coords;
    friend bool operator==(const GroupElem&, const GroupElem&) = default;
    friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
        return a.coords <=> b.coords;
    }
};

GroupElem g_zero(const GroupSpec& spec);
/// Reduces torsion coordinates; validates coordinate count.
GroupElem g_reduce(const GroupSpec& spec, std::vector<Int> coords);
GroupElem g_add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b);
GroupElem g_negate(const GroupSpec& spec, const GroupElem& a);
GroupElem g_scale(const GroupSpec& spec, Int n, const GroupElem& a);
/// Order of `a` in the group; 0 means infinite.
Int g_order(const GroupSpec& spec, const GroupElem& a);

/// Duplicate-free set of group elements sharing one spec, kept in
/// lexicographic coordinate order.
class GroupSet {
public:
    explicit GroupSet(GroupSpec spec) : spec_(std::move(spec)) {}
    /// Reduces, sorts and removes duplicates.
    GroupSet(GroupSpec spec, std::vector<GroupElem> elems);

    const GroupSpec& spec() const { return spec_; }
    Int size() const { return static_cast<Int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    const std::vector<GroupElem>& elements() const { return elems_; }
    bool contains(const GroupElem& e) const;

    friend bool operator==(const GroupSet&, const GroupSet&) = default;

private:
    GroupSpec spec_;
    std::vector<GroupElem> elems_;
};

// --- integer operations ------------------------------------------------

/// The h-fold sumset hA = { a_1 + ... + a_h : a_i in A }.
IntSet sumset(const IntSet& a, Int h);
/// The h-fold restricted sumset: sums of h pairwise distinct elements.
/// Empty when h > |A|.
IntSet restricted_sumset(const IntSet& a, Int h);
/// |hA| / |h^A| without materializing the result set.
Int sumset_size(const IntSet& a, Int h);
Int restricted_sumset_size(const IntSet& a, Int h);
/// Allocation-light variants over a strictly increasing span (hot loops).
Int sumset_size_sorted(std::span<const Int> elems, Int h);
Int restricted_sumset_size_sorted(std::span<const Int> elems, Int h);

/// Canonical representative of A under affine maps x -> lambda*x + c:
/// translate min to 0, divide by the gcd (|A| >= 2), then take the
/// lexicographically smaller of the result and its reflection.
/// Sumset sizes are constant on each affine orbit.
IntSet normalize(const IntSet& a);
bool is_arithmetic_progression(const IntSet& a);

/// Diameter above which integer kernels switch from the dense bit-vector
/// to the sorted-merge fallback.  Default 1 << 26.
Int dense_diameter_limit();
void set_dense_diameter_limit(Int limit);

// --- group operations --------------------------------------------------

GroupSet sumset(const GroupSet& a, Int h);
GroupSet restricted_sumset(const GroupSet& a, Int h);

/// True iff A = x + H for a subgroup H with |H| = |A|; decided by
/// translating by one element and checking closure of the translate.
/// Sets of size >= 2 with a nonzero free coordinate are rejected.
bool is_subgroup_coset(const GroupSet& a);

/// The image { a * generator : a in A }.  `h` is the intended fold count:
/// a generator of finite order must have order exceeding h * max(A).
GroupSet embed_integers(const IntSet& a, const GroupSpec& spec,
                        const GroupElem& generator, Int h);

}  // namespace sumrange
