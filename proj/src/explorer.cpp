#include "sumrange/explorer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "sumrange/bitvec.hpp"
#include "sumrange/bounds.hpp"

namespace sumrange {

BudgetExceeded::BudgetExceeded(Int estimated, Int budget)
    : std::runtime_error("enumeration would scan about " + std::to_string(estimated) +
                         " candidate sets, over the budget of " + std::to_string(budget)),
      estimated_(estimated),
      budget_(budget) {}

namespace {

constexpr Int kIntMax = std::numeric_limits<Int>::max();

// C(n, r), saturating at kIntMax.
Int binom_sat(Int n, Int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (Int i = 1; i <= r; ++i) {
        acc *= static_cast<unsigned __int128>(n - r + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(kIntMax)) return kIntMax;
    }
    return static_cast<Int>(acc);
}

// Lexicographic j-element combinations of [0, m), combinatorial number system.
void unrank_combination(Int m, Int j, Int rank, std::vector<Int>& out) {
    out.resize(static_cast<std::size_t>(j));
    Int v = 0;
    for (Int i = 0; i < j; ++i) {
        for (;; ++v) {
            const Int c = binom_sat(m - 1 - v, j - i - 1);
            if (rank < c) {
                out[static_cast<std::size_t>(i)] = v++;
                break;
            }
            rank -= c;
        }
    }
}

bool next_combination(std::vector<Int>& c, Int m) {
    const Int j = static_cast<Int>(c.size());
    Int i = j - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == m - j + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (Int t = i + 1; t < j; ++t)
        c[static_cast<std::size_t>(t)] = c[static_cast<std::size_t>(t - 1)] + 1;
    return true;
}

struct ScanPlan {
    Int universe = 0;  // combinations are (choose)-subsets of [0, universe)
    Int choose = 0;
    Int total = 0;
    Int scan_end = 0;
    bool complete = false;
};

ScanPlan plan_scan(Int universe, Int choose, const ExplorerConfig& cfg) {
    if (cfg.budget < 1) throw std::domain_error("candidate budget must be >= 1");
    const Int total = binom_sat(universe, choose);
    if (total > cfg.budget) {
        if (!cfg.force) throw BudgetExceeded(total, cfg.budget);
        return {universe, choose, total, cfg.budget, false};
    }
    return {universe, choose, total, total, true};
}

// Runs eval(acc, rank, combination) over contiguous rank chunks, one
// accumulator per worker.  Single-threaded execution and any worker count
// see the same (rank, combination) pairs.
template <class Acc, class Eval>
std::vector<Acc> scan_parallel(const ScanPlan& plan, int workers, Eval eval) {
    int w = std::max(1, workers);
    if (plan.scan_end < w) w = std::max<Int>(1, plan.scan_end);
    std::vector<Acc> accs(static_cast<std::size_t>(w));
    if (plan.scan_end == 0) return accs;

    const Int chunk = (plan.scan_end + w - 1) / w;
    auto run_chunk = [&](int wi) {
        const Int begin = static_cast<Int>(wi) * chunk;
        const Int end = std::min(plan.scan_end, begin + chunk);
        std::vector<Int> idx;
        unrank_combination(plan.universe, plan.choose, begin, idx);
        for (Int rank = begin; rank < end; ++rank) {
            eval(accs[static_cast<std::size_t>(wi)], rank, idx);
            if (rank + 1 < end) next_combination(idx, plan.universe);
        }
    };

    if (w == 1) {
        run_chunk(0);
        return accs;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    for (int wi = 0; wi < w; ++wi) {
        if (static_cast<Int>(wi) * chunk >= plan.scan_end) break;
        threads.emplace_back([&, wi] {
            try {
                run_chunk(wi);
            } catch (...) {
                errors[static_cast<std::size_t>(wi)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return accs;
}

void indices_to_candidate(const std::vector<Int>& idx, Int k, std::vector<Int>& out) {
    out.resize(static_cast<std::size_t>(k));
    out[0] = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) out[i + 1] = idx[i] + 1;
}

bool span_is_ap(std::span<const Int> a) {
    if (a.size() <= 2) return true;
    const Int d = a[1] - a[0];
    for (std::size_t i = 2; i < a.size(); ++i)
        if (a[i] - a[i - 1] != d) return false;
    return true;
}

// values[i] = |(i+1)A| for a sorted set with min 0, via one incremental
// shift-or pass; falls back to per-h kernels past the dense limit.
void kappa_of(std::span<const Int> a, Int len, std::vector<Int>& vals) {
    vals.clear();
    vals.reserve(static_cast<std::size_t>(len));
    const Int dia = a.back();
    if (dia > dense_diameter_limit()) {
        for (Int h = 1; h <= len; ++h) vals.push_back(sumset_size_sorted(a, h));
        return;
    }
    BitVec cur(static_cast<std::size_t>(dia) + 1);
    for (Int v : a) cur.set(static_cast<std::size_t>(v));
    vals.push_back(static_cast<Int>(a.size()));
    for (Int step = 2; step <= len; ++step) {
        BitVec next(static_cast<std::size_t>(checked_add(checked_mul(step, dia), 1)));
        for (Int v : a) next.or_shifted(cur, static_cast<std::size_t>(v));
        cur = std::move(next);
        vals.push_back(static_cast<Int>(cur.count()));
    }
}

// --- integer enumeration --------------------------------------------------

struct RangeAcc {
    std::map<Int, std::pair<Int, std::vector<Int>>> best;  // size -> (rank, set)
    std::vector<Int> scratch;
};

SizeRange enumerate_range_integers(Int h, Int k, Int n, bool restricted,
                                   const ExplorerConfig& cfg) {
    const ScanPlan plan = plan_scan(n, k - 1, cfg);
    auto accs = scan_parallel<RangeAcc>(
        plan, cfg.workers, [&](RangeAcc& acc, Int rank, const std::vector<Int>& idx) {
            indices_to_candidate(idx, k, acc.scratch);
            if (!is_canonical_int_set(acc.scratch)) return;
            const Int size = restricted ? restricted_sumset_size_sorted(acc.scratch, h)
                                        : sumset_size_sorted(acc.scratch, h);
            if (!acc.best.contains(size)) acc.best.emplace(size, std::pair(rank, acc.scratch));
        });

    std::map<Int, std::pair<Int, std::vector<Int>>> merged;
    for (auto& acc : accs)
        for (auto& [size, rw] : acc.best) {
            auto it = merged.find(size);
            if (it == merged.end() || rw.first < it->second.first)
                merged[size] = std::move(rw);
        }

    SizeRange out;
    out.h = h;
    out.k = k;
    out.restricted = restricted;
    out.search_bound = n;
    out.complete = plan.complete;
    for (auto& [size, rw] : merged) {
        out.sizes.push_back(size);
        out.witnesses.emplace(size, IntSet::from_sorted(std::move(rw.second)));
    }
    return out;
}

// --- group enumeration ------------------------------------------------------

std::vector<GroupElem> group_universe(const GroupSpec& spec, Int n) {
    if (spec.free_rank() == 1 && n < 0)
        throw std::domain_error("group enumeration: free-coordinate bound must be >= 0");
    const Int m = spec.torsion_rank() == 1 ? spec.torsion_moduli()[0] : 1;
    const Int fmax = spec.free_rank() == 1 ? n : 0;
    std::vector<GroupElem> u;
    u.reserve(static_cast<std::size_t>(checked_mul(m, checked_add(fmax, 1))));
    for (Int t = 0; t < m; ++t)
        for (Int f = 0; f <= fmax; ++f) {
            std::vector<Int> c;
            if (spec.torsion_rank() == 1) c.push_back(t);
            if (spec.free_rank() == 1) c.push_back(f);
            u.push_back(GroupElem{std::move(c)});
        }
    return u;
}

// Canonical up to translation: lexicographically least among the translates
// A - x that keep free coordinates nonnegative (those with x at the minimal
// free coordinate, which is 0 since the zero element is present).
bool is_canonical_group_set(const GroupSpec& spec, const std::vector<GroupElem>& a) {
    const bool has_free = spec.free_rank() == 1;
    std::vector<GroupElem> b;
    for (const auto& x : a) {
        if (has_free && x.coords.back() != 0) continue;
        const GroupElem nx = g_negate(spec, x);
        b.clear();
        b.reserve(a.size());
        for (const auto& e : a) b.push_back(g_add(spec, e, nx));
        std::sort(b.begin(), b.end());
        if (b < a) return false;
    }
    return true;
}

SizeRange enumerate_range_group(Int h, Int k, Int n, bool restricted, const GroupSpec& spec,
                                const ExplorerConfig& cfg) {
    if (spec.torsion_rank() > 1 || spec.free_rank() > 1)
        throw std::invalid_argument(
            "group enumeration supports torsion rank <= 1 and free rank <= 1");
    const auto universe = group_universe(spec, n);
    if (static_cast<Int>(universe.size()) < k)
        throw std::domain_error("group enumeration: universe holds fewer than k elements");
    const ScanPlan plan = plan_scan(static_cast<Int>(universe.size()) - 1, k - 1, cfg);

    struct GAcc {
        std::map<Int, std::pair<Int, std::vector<GroupElem>>> best;
        std::vector<GroupElem> scratch;
    };
    auto accs = scan_parallel<GAcc>(
        plan, cfg.workers, [&](GAcc& acc, Int rank, const std::vector<Int>& idx) {
            auto& a = acc.scratch;
            a.clear();
            a.push_back(universe[0]);
            for (Int i : idx) a.push_back(universe[static_cast<std::size_t>(i) + 1]);
            if (!is_canonical_group_set(spec, a)) return;
            const GroupSet gs(spec, std::vector<GroupElem>(a));
            const Int size = (restricted ? restricted_sumset(gs, h) : sumset(gs, h)).size();
            if (!acc.best.contains(size)) acc.best.emplace(size, std::pair(rank, a));
        });

    std::map<Int, std::pair<Int, std::vector<GroupElem>>> merged;
    for (auto& acc : accs)
        for (auto& [size, rw] : acc.best) {
            auto it = merged.find(size);
            if (it == merged.end() || rw.first < it->second.first)
                merged[size] = std::move(rw);
        }

    SizeRange out;
    out.h = h;
    out.k = k;
    out.restricted = restricted;
    out.group = spec;
    out.search_bound = n;
    out.complete = plan.complete;
    for (auto& [size, rw] : merged) {
        out.sizes.push_back(size);
        out.witnesses.emplace(size, GroupSet(spec, std::move(rw.second)));
    }
    return out;
}

void check_range_invariants(const SizeRange& out) {
    for (const auto& [size, wit] : out.witnesses) {
        Int got = 0;
        if (std::holds_alternative<IntSet>(wit)) {
            const IntSet& s = std::get<IntSet>(wit);
            got = out.restricted ? restricted_sumset_size(s, out.h) : sumset_size(s, out.h);
        } else {
            const GroupSet& s = std::get<GroupSet>(wit);
            got = (out.restricted ? restricted_sumset(s, out.h) : sumset(s, out.h)).size();
        }
        if (got != size) throw std::logic_error("size-range witness failed re-verification");
    }
    if (!out.group && !out.sizes.empty()) {
        const BoundsReport b = bounds_report(out.h, out.k);
        const BigInt lo = out.restricted
                              ? (out.h <= out.k ? *b.min_restricted_ordered : BigInt(0))
                              : b.min_sumset_ordered;
        const BigInt hi = out.restricted ? b.max_restricted : b.max_sumset;
        if (BigInt(out.sizes.front()) < lo || BigInt(out.sizes.back()) > hi)
            throw std::logic_error("size-range escaped the closed-form envelope");
    }
}

}  // namespace

bool is_canonical_int_set(std::span<const Int> a) {
    if (a.empty() || a.front() != 0) return false;
    if (a.size() == 1) return true;
    Int g = 0;
    for (Int v : a) g = std::gcd(g, v);
    if (g != 1) return false;
    const Int top = a.back();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Int r = top - a[a.size() - 1 - i];
        if (r != a[i]) return r > a[i];
    }
    return true;  // reflection fixed point
}

Int canonical_candidate_count(Int k, Int n) { return binom_sat(n, k - 1); }

Int default_search_bound(Int k, const ExplorerConfig& cfg) {
    if (k < 1) throw std::domain_error("default_search_bound: k must be >= 1");
    const Int envelope = k >= 63 ? kIntMax : std::max<Int>((Int{1} << k) - 1, k - 1);
    Int lo = k - 1, hi = envelope;
    while (lo < hi) {
        const Int mid = lo + (hi - lo + 1) / 2;
        if (binom_sat(mid, k - 1) <= cfg.budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

SizeRange enumerate_range(Int h, Int k, Int n, bool restricted,
                          const std::optional<GroupSpec>& group, const ExplorerConfig& cfg) {
    if (h < 1 || k < 1) throw std::domain_error("enumerate_range: h and k must be >= 1");
    std::optional<GroupSpec> g = group;
    if (g && g->torsion_rank() == 0 && g->free_rank() == 1) g.reset();  // that is just Z
    SizeRange out;
    if (!g) {
        if (n < k - 1) throw std::domain_error("enumerate_range: need N >= k-1");
        out = enumerate_range_integers(h, k, n, restricted, cfg);
    } else {
        out = enumerate_range_group(h, k, n, restricted, *g, cfg);
    }
    check_range_invariants(out);
    return out;
}

MissingSizeReport verify_missing(Int h, Int k, Int n, const ExplorerConfig& cfg) {
    if (h < 3 || k < 3) throw std::domain_error("verify_missing: needs h >= 3 and k >= 3");
    if (n < k - 1) throw std::domain_error("verify_missing: need N >= k-1");
    const Int ap_size = checked_add(checked_mul(h, checked_sub(k, 1)), 1);  // hk-h+1
    const ScanPlan plan = plan_scan(n, k - 1, cfg);

    struct MAcc {
        Int inspected = 0;
        std::vector<std::pair<Int, MissingSizeReport::Violation>> viols;
        std::vector<Int> scratch;
    };
    auto accs = scan_parallel<MAcc>(
        plan, cfg.workers, [&](MAcc& acc, Int rank, const std::vector<Int>& idx) {
            indices_to_candidate(idx, k, acc.scratch);
            if (!is_canonical_int_set(acc.scratch)) return;
            ++acc.inspected;
            const Int size = sumset_size_sorted(acc.scratch, h);
            const bool ap = span_is_ap(acc.scratch);
            const bool ok = ap ? size == ap_size : size >= ap_size + 2;
            if (!ok)
                acc.viols.emplace_back(
                    rank, MissingSizeReport::Violation{
                              IntSet::from_sorted(std::vector<Int>(acc.scratch)), size, ap});
        });

    MissingSizeReport report;
    report.h = h;
    report.k = k;
    report.search_bound = n;
    report.complete = plan.complete;
    std::vector<std::pair<Int, MissingSizeReport::Violation>> all;
    for (auto& acc : accs) {
        report.inspected += acc.inspected;
        for (auto& v : acc.viols) all.push_back(std::move(v));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [_, v] : all) report.violations.push_back(std::move(v));
    return report;
}

Trajectory trajectory(const IntSet& a, Int len) {
    if (a.empty()) throw std::domain_error("trajectory: set must be nonempty");
    if (len < 1) throw std::domain_error("trajectory: length must be >= 1");
    std::vector<Int> off;
    off.reserve(static_cast<std::size_t>(a.size()));
    for (Int v : a) off.push_back(checked_sub(v, a.min()));

    Trajectory t;
    t.base_set = a;
    kappa_of(off, len, t.values);
    if (len >= 4) {
        const auto& v = t.values;
        const std::size_t e = v.size();
        const Int d = v[e - 1] - v[e - 2];
        if (v[e - 2] - v[e - 3] == d && v[e - 3] - v[e - 4] == d) t.eventual_difference = d;
    }
    return t;
}

TrajectorySet enumerate_trajectories(Int len, Int k, Int n, const ExplorerConfig& cfg) {
    if (len < 1 || k < 1) throw std::domain_error("enumerate_trajectories: len and k must be >= 1");
    if (n < k - 1) throw std::domain_error("enumerate_trajectories: need N >= k-1");
    const ScanPlan plan = plan_scan(n, k - 1, cfg);

    struct TAcc {
        std::set<std::vector<Int>> seen;
        std::vector<Int> scratch, vals;
    };
    auto accs = scan_parallel<TAcc>(plan, cfg.workers,
                                    [&](TAcc& acc, Int, const std::vector<Int>& idx) {
                                        indices_to_candidate(idx, k, acc.scratch);
                                        if (!is_canonical_int_set(acc.scratch)) return;
                                        kappa_of(acc.scratch, len, acc.vals);
                                        acc.seen.insert(acc.vals);
                                    });

    std::set<std::vector<Int>> all;
    for (auto& acc : accs) all.merge(acc.seen);
    TrajectorySet out;
    out.len = len;
    out.k = k;
    out.search_bound = n;
    out.complete = plan.complete;
    out.trajectories.assign(all.begin(), all.end());
    return out;
}

TrajectorySet filter_trajectories(const std::vector<TrajectoryConstraint>& constraints, Int len,
                                  Int n, const ExplorerConfig& cfg) {
    if (constraints.empty())
        throw std::domain_error("filter_trajectories: need at least one constraint");
    if (len < 1) throw std::domain_error("filter_trajectories: length must be >= 1");
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        if (c.h < 1 || c.h > len)
            throw std::domain_error("filter_trajectories: constraint fold counts must lie in [1, len]");
        if (c.value < 1) throw std::domain_error("filter_trajectories: constraint sizes must be >= 1");
        if (i > 0 && (constraints[i - 1].h >= c.h || constraints[i - 1].value >= c.value))
            throw std::domain_error(
                "filter_trajectories: fold counts and sizes must be strictly increasing");
    }

    std::vector<Int> set_sizes;
    if (constraints[0].h == 1) {
        set_sizes.push_back(constraints[0].value);
    } else {
        const Int kmax = (constraints[0].value - 1) / constraints[0].h + 1;
        for (Int k = 1; k <= kmax; ++k) set_sizes.push_back(k);
    }

    TrajectorySet out;
    out.len = len;
    out.k = set_sizes.size() == 1 ? set_sizes[0] : 0;
    out.search_bound = n;
    out.complete = true;
    std::set<std::vector<Int>> all;
    for (Int k : set_sizes) {
        if (n < k - 1) continue;
        bool feasible = true;
        for (const auto& c : constraints) {
            const BigInt lo = BigInt(c.h) * k - c.h + 1;
            const BigInt hi = binomial(k + c.h - 1, c.h);
            if (BigInt(c.value) < lo || BigInt(c.value) > hi) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        const ScanPlan plan = plan_scan(n, k - 1, cfg);
        struct FAcc {
            std::set<std::vector<Int>> seen;
            std::vector<Int> scratch, vals;
        };
        auto accs = scan_parallel<FAcc>(
            plan, cfg.workers, [&](FAcc& acc, Int, const std::vector<Int>& idx) {
                indices_to_candidate(idx, k, acc.scratch);
                if (!is_canonical_int_set(acc.scratch)) return;
                kappa_of(acc.scratch, len, acc.vals);
                for (const auto& c : constraints)
                    if (acc.vals[static_cast<std::size_t>(c.h - 1)] != c.value) return;
                acc.seen.insert(acc.vals);
            });
        for (auto& acc : accs) all.merge(acc.seen);
        out.complete = out.complete && plan.complete;
    }
    out.trajectories.assign(all.begin(), all.end());
    return out;
}

SizePairSet enumerate_size_pairs(Int h, Int k, Int n, const ExplorerConfig& cfg) {
    if (h < 1 || k < 1) throw std::domain_error("enumerate_size_pairs: h and k must be >= 1");
    if (n < k - 1) throw std::domain_error("enumerate_size_pairs: need N >= k-1");
    const ScanPlan plan = plan_scan(n, k - 1, cfg);

    struct PAcc {
        std::set<std::pair<Int, Int>> seen;
        std::vector<Int> scratch;
    };
    auto accs = scan_parallel<PAcc>(
        plan, cfg.workers, [&](PAcc& acc, Int, const std::vector<Int>& idx) {
            indices_to_candidate(idx, k, acc.scratch);
            if (!is_canonical_int_set(acc.scratch)) return;
            acc.seen.emplace(sumset_size_sorted(acc.scratch, h),
                             restricted_sumset_size_sorted(acc.scratch, h));
        });

    std::set<std::pair<Int, Int>> all;
    for (auto& acc : accs) all.merge(acc.seen);
    SizePairSet out;
    out.h = h;
    out.k = k;
    out.search_bound = n;
    out.complete = plan.complete;
    out.pairs.assign(all.begin(), all.end());
    return out;
}

std::optional<Int> empirical_search_bound(Int h, Int k, Int n_max, bool restricted,
                                          const ExplorerConfig& cfg) {
    if (h < 1 || k < 1) throw std::domain_error("empirical_search_bound: h and k must be >= 1");
    if (n_max < k - 1) throw std::domain_error("empirical_search_bound: need N >= k-1");
    const ScanPlan plan = plan_scan(n_max, k - 1, cfg);
    if (!plan.complete) return std::nullopt;  // baseline itself is truncated

    struct EAcc {
        std::map<Int, Int> min_top;  // size -> least max element achieving it
        std::vector<Int> scratch;
    };
    auto accs = scan_parallel<EAcc>(
        plan, cfg.workers, [&](EAcc& acc, Int, const std::vector<Int>& idx) {
            indices_to_candidate(idx, k, acc.scratch);
            if (!is_canonical_int_set(acc.scratch)) return;
            const Int size = restricted ? restricted_sumset_size_sorted(acc.scratch, h)
                                        : sumset_size_sorted(acc.scratch, h);
            const Int top = acc.scratch.back();
            auto [it, inserted] = acc.min_top.try_emplace(size, top);
            if (!inserted && top < it->second) it->second = top;
        });

    std::map<Int, Int> merged;
    for (auto& acc : accs)
        for (auto [size, top] : acc.min_top) {
            auto [it, inserted] = merged.try_emplace(size, top);
            if (!inserted && top < it->second) it->second = top;
        }
    Int answer = k - 1;
    for (auto [_, top] : merged) answer = std::max(answer, top);
    return answer;
}

}  // namespace sumrange
