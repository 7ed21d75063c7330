#include "sumrange/witness.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "sumrange/bounds.hpp"

namespace sumrange {

namespace {

Int to_int_checked(const BigInt& v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw std::overflow_error("value exceeds the 64-bit range");
    return static_cast<Int>(v);
}

Witness make_verified(std::variant<IntSet, GroupSet> set, Int h, bool restricted, Int claimed,
                      WitnessKind kind) {
    Witness w{std::move(set), h, restricted, claimed, kind};
    if (!w.verify())
        throw std::logic_error("witness failed self-verification (claimed size " +
                               std::to_string(claimed) + ")");
    return w;
}

// Direct family [0, k-2] + {b}, then recursion B + {2 max(B) + 1};
// output is always strictly increasing.
std::vector<Int> build_two_fold(Int k, Int t) {
    if (k == 1) return {0};
    if (k == 2) return {0, 1};
    if (k == 3) return t == 5 ? std::vector<Int>{0, 1, 2} : std::vector<Int>{0, 1, 3};
    if (t <= 3 * k - 3) {
        std::vector<Int> a;
        for (Int i = 0; i <= k - 2; ++i) a.push_back(i);
        a.push_back(t - k);
        return a;
    }
    std::vector<Int> b = build_two_fold(k - 1, t - k);
    b.push_back(checked_add(checked_mul(2, b.back()), 1));
    return b;
}

std::vector<Int> build_two_fold_restricted(Int k, Int t) {
    if (k == 2) return {0, 1};
    if (k == 3) return {0, 1, 2};
    if (k == 4) return t == 5 ? std::vector<Int>{0, 1, 2, 3} : std::vector<Int>{0, 1, 2, 4};
    if (t <= 3 * k - 6) {
        std::vector<Int> a;
        for (Int i = 0; i <= k - 2; ++i) a.push_back(i);
        a.push_back(t - k + 2);
        return a;
    }
    std::vector<Int> b = build_two_fold_restricted(k - 1, t - k + 1);
    b.push_back(checked_mul(2, b.back()));
    return b;
}

}  // namespace

bool Witness::verify() const {
    if (holds_int_set()) {
        const IntSet& a = int_set();
        const Int got = restricted ? restricted_sumset_size(a, h) : sumset_size(a, h);
        return got == claimed_size;
    }
    const GroupSet& a = group_set();
    const GroupSet r = restricted ? restricted_sumset(a, h) : sumset(a, h);
    return r.size() == claimed_size;
}

Witness witness_sumset_2(Int k, Int t) {
    if (k < 1) throw std::domain_error("witness_sumset_2: k must be >= 1");
    const Interval iv = interval_2fold(k, false);
    if (t < iv.lo || t > iv.hi)
        throw std::domain_error("witness_sumset_2: t = " + std::to_string(t) +
                                " outside [2k-1, (k^2+k)/2] = [" + std::to_string(iv.lo) + "," +
                                std::to_string(iv.hi) + "]");
    return make_verified(IntSet::from_sorted(build_two_fold(k, t)), 2, false, t,
                         WitnessKind::two_fold);
}

Witness witness_restricted_2(Int k, Int t) {
    if (k < 2) throw std::domain_error("witness_restricted_2: k must be >= 2");
    const Interval iv = interval_2fold(k, true);
    if (t < iv.lo || t > iv.hi)
        throw std::domain_error("witness_restricted_2: t = " + std::to_string(t) +
                                " outside [2k-3, (k^2-k)/2] = [" + std::to_string(iv.lo) + "," +
                                std::to_string(iv.hi) + "]");
    return make_verified(IntSet::from_sorted(build_two_fold_restricted(k, t)), 2, true, t,
                         WitnessKind::two_fold_restricted);
}

Witness witness_h3(Int h, Int t) {
    if (h < 1) throw std::domain_error("witness_h3: h must be >= 1");
    const Int top = checked_mul(checked_add(h, 2), checked_add(h, 1)) / 2;  // C(h+2,2)
    for (Int u = 1; u <= h; ++u) {
        if (top - u * (u - 1) / 2 == t) {
            const Int b = h + 2 - u;  // in [2, h+1]
            return make_verified(IntSet(std::vector<Int>{0, 1, b}), h, false, t,
                                 WitnessKind::h3_family);
        }
    }
    throw std::domain_error("witness_h3: t = " + std::to_string(t) +
                            " is not of the form C(h+2,2) - C(u,2) with u in [1,h]");
}

Witness witness_extremes(Int h, Int k, Extreme which, bool restricted) {
    if (h < 1 || k < 1) throw std::domain_error("witness_extremes: h and k must be >= 1");
    if (restricted && h > k)
        throw std::domain_error("witness_extremes: restricted kind needs h <= k");
    if (which == Extreme::minimum) {
        const Int claimed = restricted ? checked_add(checked_mul(h, checked_sub(k, h)), 1)
                                       : checked_add(checked_mul(h, checked_sub(k, 1)), 1);
        return make_verified(IntSet::interval(0, k - 1), h, restricted, claimed,
                             WitnessKind::ap_minimum);
    }
    const Int g = checked_add(h, 1);
    std::vector<Int> powers{1};
    for (Int i = 1; i < k; ++i) powers.push_back(checked_mul(powers.back(), g));
    const Int claimed =
        to_int_checked(restricted ? binomial(k, h) : binomial(checked_sub(checked_add(k, h), 1), h));
    return make_verified(IntSet::from_sorted(std::move(powers)), h, restricted, claimed,
                         WitnessKind::powers_maximum);
}

IntSet family_member(Family name, Int b) {
    struct Entry {
        Int lo, hi;
        std::vector<Int> (*make)(Int);
    };
    static const auto entry = [](Family f) -> Entry {
        switch (f) {
            case Family::P1: return {3, 7, [](Int b) { return std::vector<Int>{0, 1, 2, b}; }};
            case Family::P2: return {4, 10, [](Int b) { return std::vector<Int>{0, 1, 3, b}; }};
            case Family::Q1: return {4, 10, [](Int b) { return std::vector<Int>{0, 1, 2, 3, b}; }};
            case Family::Q2: return {5, 13, [](Int b) { return std::vector<Int>{0, 1, 3, 4, b}; }};
            case Family::Q3: return {11, 16, [](Int b) { return std::vector<Int>{0, 1, 4, 5, b}; }};
            case Family::Q4: return {19, 22, [](Int b) { return std::vector<Int>{0, 1, 5, 7, b}; }};
            case Family::Q5:
                return {0, 2, [](Int b) { return std::vector<Int>{0, 1, 5, 8, 19 + 3 * b}; }};
        }
        throw std::logic_error("unreachable");
    };
    const Entry e = entry(name);
    if (b < e.lo || b > e.hi)
        throw std::domain_error(std::string("family ") + std::string(to_string(name)) +
                                ": b = " + std::to_string(b) + " outside [" + std::to_string(e.lo) +
                                "," + std::to_string(e.hi) + "]");
    return IntSet(e.make(b));
}

Witness group_counterexample(Int h, Int k, bool restricted) {
    if (h < 2 || k < 2) throw std::domain_error("group_counterexample: h and k must be >= 2");
    const Int m = restricted ? checked_sub(checked_mul(h, k), checked_mul(h, h))
                             : checked_sub(checked_mul(h, k), h);
    if (m < 2)
        throw std::domain_error("group_counterexample: degenerate modulus m = " +
                                std::to_string(m) + "; the construction needs m >= 2");
    if (m < k)
        throw std::domain_error("group_counterexample: modulus m = " + std::to_string(m) +
                                " is smaller than k = " + std::to_string(k) +
                                "; {(i,0) : i in [0,k-1]} would collapse below k elements");
    const GroupSpec spec({m}, 1);
    std::vector<GroupElem> elems;
    elems.reserve(static_cast<std::size_t>(k));
    for (Int i = 0; i < k; ++i) elems.push_back(GroupElem{{i, 0}});
    return make_verified(GroupSet(spec, std::move(elems)), h, restricted, m,
                         WitnessKind::group_counterexample);
}

std::string_view to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::two_fold: return "two_fold";
        case WitnessKind::two_fold_restricted: return "two_fold_restricted";
        case WitnessKind::h3_family: return "h3_family";
        case WitnessKind::ap_minimum: return "ap_minimum";
        case WitnessKind::powers_maximum: return "powers_maximum";
        case WitnessKind::named_family: return "named_family";
        case WitnessKind::group_counterexample: return "group_counterexample";
    }
    return "unknown";
}

std::string_view to_string(Family name) {
    switch (name) {
        case Family::P1: return "P1";
        case Family::P2: return "P2";
        case Family::Q1: return "Q1";
        case Family::Q2: return "Q2";
        case Family::Q3: return "Q3";
        case Family::Q4: return "Q4";
        case Family::Q5: return "Q5";
    }
    return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
    auto eq = [&](std::string_view s) {
        if (name.size() != s.size()) return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (std::toupper(static_cast<unsigned char>(name[i])) != s[i]) return false;
        return true;
    };
    for (Family f : {Family::P1, Family::P2, Family::Q1, Family::Q2, Family::Q3, Family::Q4,
                     Family::Q5})
        if (eq(to_string(f))) return f;
    return std::nullopt;
}

}  // namespace sumrange
