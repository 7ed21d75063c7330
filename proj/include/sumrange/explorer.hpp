#pragma once

// Exhaustive enumeration of sumset-size ranges over canonical representatives.
//
// Integer enumeration fixes 0 in the set, requires gcd 1 for k >= 2 and keeps
// only reflection-minimal sets (affine canonical form).  Group enumeration
// (torsion rank <= 1 plus free rank <= 1) canonicalizes up to translation
// only.  Candidate streams are ranked lexicographically; parallel scans split
// the rank space into contiguous chunks and merge by minimum rank, so results
// are identical for any worker count.

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "sumrange/core.hpp"

namespace sumrange {

struct ExplorerConfig {
    Int budget = 100'000'000;  // hard cap on candidate subsets per scan
    bool force = false;        // over-budget scans run truncated instead of refusing
    int workers = 1;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Int estimated, Int budget);
    Int estimated() const { return estimated_; }
    Int budget() const { return budget_; }

private:
    Int estimated_;
    Int budget_;
};

using SetValue = std::variant<IntSet, GroupSet>;

/// An achieved-size set with one witness per size.  `complete` means the
/// full canonical space within the search bound was covered; it is *not* a
/// certificate that `sizes` equals the true range for all of Z.
struct SizeRange {
    Int h = 0, k = 0;
    bool restricted = false;
    std::optional<GroupSpec> group;  // nullopt: the integers
    Int search_bound = 0;
    bool complete = false;
    std::vector<Int> sizes;
    std::map<Int, SetValue> witnesses;

    friend bool operator==(const SizeRange&, const SizeRange&) = default;
};

SizeRange enumerate_range(Int h, Int k, Int n, bool restricted = false,
                          const std::optional<GroupSpec>& group = std::nullopt,
                          const ExplorerConfig& cfg = {});

/// Largest bound N <= 2^k - 1 whose canonical candidate count fits the budget.
Int default_search_bound(Int k, const ExplorerConfig& cfg = {});

/// Canonical candidates for k-subsets of [0, N]: C(N, k-1), saturating.
Int canonical_candidate_count(Int k, Int n);

/// True iff the sorted zero-based set is its own affine canonical form:
/// gcd 1 (k >= 2) and lexicographically <= its reflection.
bool is_canonical_int_set(std::span<const Int> sorted_with_zero);

struct MissingSizeReport {
    Int h = 0, k = 0;
    Int search_bound = 0;
    Int inspected = 0;  // canonical sets checked
    bool complete = false;
    struct Violation {
        IntSet set;
        Int size = 0;
        bool arithmetic_progression = false;
    };
    std::vector<Violation> violations;
};

/// Checks, over every canonical k-subset of [0, N], that arithmetic
/// progressions have h-fold size hk-h+1 and everything else at least
/// hk-h+3 (so hk-h+2 never occurs).  Requires h, k >= 3.
MissingSizeReport verify_missing(Int h, Int k, Int n, const ExplorerConfig& cfg = {});

struct Trajectory {
    IntSet base_set;
    std::vector<Int> values;  // values[i] = |(i+1)A|
    /// Common difference of the last >= 3 steps, when they agree.
    std::optional<Int> eventual_difference;
};

Trajectory trajectory(const IntSet& a, Int len);

struct TrajectorySet {
    Int len = 0;
    Int k = 0;  // 0 when several set sizes were scanned
    Int search_bound = 0;
    bool complete = false;
    std::vector<std::vector<Int>> trajectories;  // sorted lexicographically
};

/// Distinct size trajectories (|1A|, ..., |len A|) of canonical k-subsets
/// of [0, N].
TrajectorySet enumerate_trajectories(Int len, Int k, Int n, const ExplorerConfig& cfg = {});

struct TrajectoryConstraint {
    Int h = 0;
    Int value = 0;  // requires |hA| == value
};

/// Trajectories satisfying every |h_i A| = value_i constraint.  When the
/// first constraint is not on h = 1, all compatible set sizes are scanned.
TrajectorySet filter_trajectories(const std::vector<TrajectoryConstraint>& constraints, Int len,
                                  Int n, const ExplorerConfig& cfg = {});

/// Least N <= n_max with the same achieved-size set as n_max: an empirical,
/// non-certified lower-bound candidate for the least sufficient bound.
/// Absent when the n_max scan was truncated.
std::optional<Int> empirical_search_bound(Int h, Int k, Int n_max, bool restricted = false,
                                          const ExplorerConfig& cfg = {});

struct SizePairSet {
    Int h = 0, k = 0;
    Int search_bound = 0;
    bool complete = false;
    std::vector<std::pair<Int, Int>> pairs;  // (|hA|, restricted size), sorted
};

/// Joint distribution of plain and restricted h-fold sizes (experimental).
SizePairSet enumerate_size_pairs(Int h, Int k, Int n, const ExplorerConfig& cfg = {});

// --- result cache --------------------------------------------------------
// One JSON document per (group, h, k, restricted, N) cell.  Loads are
// revalidated by recomputing one witness per size through core.

std::string cache_cell_name(Int h, Int k, bool restricted, const std::optional<GroupSpec>& group,
                            Int n);
void cache_store(const std::filesystem::path& dir, const SizeRange& range);
std::optional<SizeRange> cache_load(const std::filesystem::path& dir, Int h, Int k,
                                    bool restricted, const std::optional<GroupSpec>& group, Int n);

}  // namespace sumrange
