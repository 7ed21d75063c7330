#pragma once

// Closed-form calculators for the extremal sumset-size quantities.
// Everything here is exact integer arithmetic; binomials are computed with
// unbounded precision.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumrange/core.hpp"

namespace sumrange {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, r); 0 when r < 0 or r > n.
BigInt binomial(Int n, Int r);

struct BoundsReport {
    Int h = 0, k = 0;
    BigInt min_sumset_ordered;                   // hk - h + 1
    BigInt max_sumset;                           // C(k+h-1, h)
    BigInt min_sumset_general;                   // k
    BigInt max_restricted;                       // C(k, h); 0 when h > k
    std::optional<BigInt> min_restricted_ordered;  // hk - h^2 + 1, present iff h <= k
    std::optional<BigInt> min_restricted_general;  // max(k-h+1, h+1), present iff h <= k-1
};

BoundsReport bounds_report(Int h, Int k);

/// The full set of h-fold sumset sizes of 3-element integer sets:
/// { C(h+2,2) - C(t,2) : t in [1,h] }, ascending.
std::vector<Int> range_h3_closed_form(Int h);

struct Interval {
    Int lo = 0, hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Two-fold size range over the integers: [2k-1, (k^2+k)/2], or
/// [2k-3, (k^2-k)/2] for the restricted kind (k >= 2).
Interval interval_2fold(Int k, bool restricted);

}  // namespace sumrange
