#include "sumrange/bounds.hpp"

#include <algorithm>

namespace sumrange {

BigInt binomial(Int n, Int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (Int i = 1; i <= r; ++i) {
        acc *= (n - r + i);
        acc /= i;  // exact: acc is C(n-r+i, i) after this step
    }
    return acc;
}

BoundsReport bounds_report(Int h, Int k) {
    if (h < 1 || k < 1) throw std::domain_error("bounds_report: h and k must be >= 1");
    BoundsReport r;
    r.h = h;
    r.k = k;
    const BigInt bh{h}, bk{k};
    r.min_sumset_ordered = bh * bk - bh + 1;
    r.max_sumset = binomial(checked_sub(checked_add(k, h), 1), h);
    r.min_sumset_general = bk;
    r.max_restricted = binomial(k, h);
    if (h <= k) r.min_restricted_ordered = BigInt(bh * bk - bh * bh + 1);
    if (h <= k - 1) r.min_restricted_general = std::max<BigInt>(BigInt(bk - bh + 1), BigInt(bh + 1));
    if (r.min_sumset_ordered > r.max_sumset)
        throw std::logic_error("bounds_report: lower bound exceeds upper bound");
    return r;
}

std::vector<Int> range_h3_closed_form(Int h) {
    if (h < 1) throw std::domain_error("range_h3_closed_form: h must be >= 1");
    const Int top = checked_mul(checked_add(h, 2), checked_add(h, 1)) / 2;  // C(h+2,2)
    std::vector<Int> sizes;
    sizes.reserve(static_cast<std::size_t>(h));
    for (Int t = h; t >= 1; --t) sizes.push_back(top - t * (t - 1) / 2);
    return sizes;  // ascending: decreasing t gives increasing size
}

Interval interval_2fold(Int k, bool restricted) {
    if (k < 1) throw std::domain_error("interval_2fold: k must be >= 1");
    if (restricted) {
        if (k < 2) throw std::domain_error("interval_2fold: restricted kind needs k >= 2");
        return {checked_sub(checked_mul(2, k), 3), checked_mul(k, k - 1) / 2};
    }
    return {checked_sub(checked_mul(2, k), 1), checked_mul(k, checked_add(k, 1)) / 2};
}

}  // namespace sumrange
