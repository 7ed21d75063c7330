#include "sumrange/repro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "sumrange/bounds.hpp"
#include "sumrange/explorer.hpp"
#include "sumrange/textio.hpp"
#include "sumrange/witness.hpp"

namespace sumrange::repro {

IntSet naive_sumset(const IntSet& a, Int h) {
    if (a.empty() || h < 1) throw std::domain_error("naive_sumset: invalid input");
    std::set<Int> out;
    const auto& e = a.elements();
    std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t start, Int depth, Int sum) {
        if (depth == h) {
            out.insert(sum);
            return;
        }
        for (std::size_t i = start; i < e.size(); ++i) rec(i, depth + 1, checked_add(sum, e[i]));
    };
    rec(0, 0, 0);
    return IntSet(std::vector<Int>(out.begin(), out.end()));
}

IntSet naive_restricted_sumset(const IntSet& a, Int h) {
    if (a.empty() || h < 1) throw std::domain_error("naive_restricted_sumset: invalid input");
    std::set<Int> out;
    const auto& e = a.elements();
    std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t start, Int depth, Int sum) {
        if (depth == h) {
            out.insert(sum);
            return;
        }
        for (std::size_t i = start; i < e.size(); ++i)
            rec(i + 1, depth + 1, checked_add(sum, e[i]));
    };
    rec(0, 0, 0);
    return IntSet(std::vector<Int>(out.begin(), out.end()));
}

namespace {

struct Checker {
    std::ostream& os;
    bool ok = true;
    void line(bool pass, const std::string& what) {
        os << (pass ? "  ok    " : "  FAIL  ") << what << "\n";
        ok = ok && pass;
    }
    void note(const std::string& what) { os << "  note  " << what << "\n"; }
};

int suite_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

ExplorerConfig suite_config() {
    ExplorerConfig cfg;
    cfg.workers = suite_workers();
    return cfg;
}

std::vector<Int> interval_values(Interval iv) {
    std::vector<Int> v;
    for (Int t = iv.lo; t <= iv.hi; ++t) v.push_back(t);
    return v;
}

IntSet random_subset(std::mt19937_64& rng, Int k, Int lo, Int hi) {
    std::uniform_int_distribution<Int> pick(lo, hi);
    std::set<Int> s;
    while (static_cast<Int>(s.size()) < k) s.insert(pick(rng));
    return IntSet(std::vector<Int>(s.begin(), s.end()));
}

struct DenseLimitGuard {
    Int saved = dense_diameter_limit();
    ~DenseLimitGuard() { set_dense_diameter_limit(saved); }
};

// --- suites ----------------------------------------------------------------

bool suite_thm41(std::ostream& os) {
    Checker c{os};
    for (Int k = 1; k <= 20; ++k) {
        const Interval iv = interval_2fold(k, false);
        const Int envelope = (Int{1} << k) - 1;
        bool all = true;
        for (Int t = iv.lo; t <= iv.hi; ++t) {
            const Witness w = witness_sumset_2(k, t);  // constructor re-verifies the size
            const IntSet& a = w.int_set();
            all = all && a.size() == k && a.min() >= 0 && a.max() <= envelope;
        }
        c.line(all, "2-fold witnesses, k=" + std::to_string(k) + ": every t in [" +
                        std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                        "] realized within [0," + std::to_string(envelope) + "]");
    }
    const auto cfg = suite_config();
    for (Int k = 1; k <= 6; ++k) {
        const Interval iv = interval_2fold(k, false);
        const auto r = enumerate_range(2, k, (Int{1} << k) - 1, false, std::nullopt, cfg);
        c.line(r.complete && r.sizes == interval_values(iv),
               "exhaustive 2-fold range, k=" + std::to_string(k) + ": sizes = " +
                   render_size_runs(r.sizes));
    }
    return c.ok;
}

bool suite_thm42(std::ostream& os) {
    Checker c{os};
    for (Int k = 2; k <= 20; ++k) {
        const Interval iv = interval_2fold(k, true);
        const Int envelope = Int{1} << (k - 2);
        bool all = true;
        for (Int t = iv.lo; t <= iv.hi; ++t) {
            const Witness w = witness_restricted_2(k, t);
            const IntSet& a = w.int_set();
            all = all && a.size() == k && a.min() >= 0 && a.max() <= envelope;
        }
        c.line(all, "restricted 2-fold witnesses, k=" + std::to_string(k) + ": every t in [" +
                        std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                        "] realized within [0," + std::to_string(envelope) + "]");
    }
    const auto cfg = suite_config();
    for (Int k = 2; k <= 6; ++k) {
        const Interval iv = interval_2fold(k, true);
        const auto r = enumerate_range(2, k, Int{1} << (k - 2), true, std::nullopt, cfg);
        c.line(r.complete && r.sizes == interval_values(iv),
               "exhaustive restricted 2-fold range, k=" + std::to_string(k) + ": sizes = " +
                   render_size_runs(r.sizes));
    }
    return c.ok;
}

bool suite_families(std::ostream& os) {
    Checker c{os};
    const struct {
        Family fam;
        Int lo, hi;
        std::vector<Int> sizes;
    } rows[] = {
        {Family::P1, 3, 7, {10, 12, 14, 15, 16}},
        {Family::P2, 4, 10, {13, 14, 15, 17, 18, 19}},
        {Family::Q1, 4, 10, {13, 15, 17, 19, 20, 21, 22}},
        {Family::Q2, 5, 13, {16, 18, 19, 21, 23, 24, 25, 26, 27}},
        {Family::Q3, 11, 16, {26, 27, 28, 29, 30}},
        {Family::Q4, 19, 22, {31, 32, 33}},
        {Family::Q5, 0, 2, {32, 33, 34}},
    };
    for (const auto& row : rows) {
        std::set<Int> got;
        for (Int b = row.lo; b <= row.hi; ++b) got.insert(sumset_size(family_member(row.fam, b), 3));
        c.line(std::vector<Int>(got.begin(), got.end()) == row.sizes,
               std::string("family ") + std::string(to_string(row.fam)) + ", b in [" +
                   std::to_string(row.lo) + "," + std::to_string(row.hi) + "]: 3-fold sizes " +
                   render_size_runs(row.sizes));
    }
    c.line(sumset_size(IntSet({1, 4, 16, 64}), 3) == 20 &&
               sumset_size(IntSet({0, 1, 4, 13}), 3) == 20,
           "|3{1,4,16,64}| = |3{0,1,4,13}| = 20");
    c.line(sumset_size(IntSet({1, 4, 16, 64, 256}), 3) == 35, "|3{1,4,16,64,256}| = 35");

    const auto cfg = suite_config();
    auto expect_sizes = [](std::vector<Int> isolated, Int lo, Int hi) {
        for (Int t = lo; t <= hi; ++t) isolated.push_back(t);
        return isolated;
    };
    const auto r33 = enumerate_range(3, 3, 16, false, std::nullopt, cfg);
    c.line(r33.complete && r33.sizes == std::vector<Int>{7, 9, 10},
           "3-fold range of 3-sets within [0,16]: " + render_size_runs(r33.sizes));
    const auto r34 = enumerate_range(3, 4, 24, false, std::nullopt, cfg);
    c.line(r34.complete && r34.sizes == expect_sizes({10}, 12, 20),
           "3-fold range of 4-sets within [0,24]: " + render_size_runs(r34.sizes));
    const auto r35 = enumerate_range(3, 5, 32, false, std::nullopt, cfg);
    c.line(r35.complete && r35.sizes == expect_sizes({13}, 15, 35),
           "3-fold range of 5-sets within [0,32]: " + render_size_runs(r35.sizes));
    return c.ok;
}

bool suite_h3_table(std::ostream& os) {
    Checker c{os};
    static const std::vector<std::vector<Int>> table = {
        {3},
        {5, 6},
        {7, 9, 10},
        {9, 12, 14, 15},
        {11, 15, 18, 20, 21},
        {13, 18, 22, 25, 27, 28},
        {15, 21, 26, 30, 33, 35, 36},
        {17, 24, 30, 35, 39, 42, 44, 45},
        {19, 27, 34, 40, 45, 49, 52, 54, 55},
        {21, 30, 38, 45, 51, 56, 60, 63, 65, 66},
        {23, 33, 42, 50, 57, 63, 68, 72, 75, 77, 78},
        {25, 36, 46, 55, 63, 70, 76, 81, 85, 88, 90, 91},
        {27, 39, 50, 60, 69, 77, 84, 90, 95, 99, 102, 104, 105},
    };
    for (Int h = 1; h <= 13; ++h) {
        const auto closed = range_h3_closed_form(h);
        const auto& golden = table[static_cast<std::size_t>(h - 1)];
        // sufficiency bound: every {0,a,b} with b > h+1 repeats a size below it
        std::set<Int> exhaustive;
        for (Int b = 2; b <= h + 1; ++b)
            for (Int a = 1; a < b; ++a) exhaustive.insert(sumset_size(IntSet({0, a, b}), h));
        bool witnesses = true;
        for (Int t : closed) {
            const Witness w = witness_h3(h, t);
            witnesses = witnesses && w.int_set().size() == 3;
        }
        const bool pass = closed == golden &&
                          std::vector<Int>(exhaustive.begin(), exhaustive.end()) == closed &&
                          static_cast<Int>(closed.size()) == h && witnesses;
        c.line(pass, "h = " + std::to_string(h) + ": closed form " + render_size_runs(closed) +
                         " matches exhaustive {0,a,b} enumeration, with witnesses");
    }
    return c.ok;
}

bool suite_missing(std::ostream& os, std::uint64_t seed) {
    Checker c{os};
    const auto cfg = suite_config();
    for (Int h = 3; h <= 5; ++h)
        for (Int k = 3; k <= 5; ++k) {
            const auto rep = verify_missing(h, k, 20, cfg);
            c.line(rep.complete && rep.violations.empty(),
                   "h=" + std::to_string(h) + " k=" + std::to_string(k) + " N=20: " +
                       std::to_string(rep.inspected) +
                       " canonical sets, no size in {AP minimum + 1}");
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> pick_k(3, 8), pick_h(3, 5);
    bool non_ap_ok = true;
    for (int i = 0; i < 10'000; ++i) {
        const Int k = pick_k(rng), h = pick_h(rng);
        IntSet a = random_subset(rng, k, 0, 1'000'000);
        while (is_arithmetic_progression(a)) a = random_subset(rng, k, 0, 1'000'000);
        if (sumset_size(a, h) < h * k - h + 3) {
            non_ap_ok = false;
            c.note("counterexample: h=" + std::to_string(h) + " A=" + to_string(a));
            break;
        }
    }
    c.line(non_ap_ok, "10000 random non-AP sets (k <= 8, elements <= 10^6, h <= 5): size >= hk-h+3");

    std::uniform_int_distribution<Int> pick_a(0, 100'000), pick_d(1, 10'000);
    bool ap_ok = true;
    for (int i = 0; i < 10'000; ++i) {
        const Int k = pick_k(rng), h = pick_h(rng), a0 = pick_a(rng), d = pick_d(rng);
        std::vector<Int> v;
        for (Int j = 0; j < k; ++j) v.push_back(a0 + j * d);
        if (sumset_size(IntSet::from_sorted(std::move(v)), h) != h * k - h + 1) {
            ap_ok = false;
            break;
        }
    }
    c.line(ap_ok, "10000 random APs: size is exactly hk-h+1");
    return c.ok;
}

bool suite_rsharp33(std::ostream& os, std::uint64_t seed) {
    Checker c{os};
    auto kappa3 = [](std::initializer_list<Int> elems) {
        return trajectory(IntSet(std::vector<Int>(elems)), 3).values;
    };
    c.line(kappa3({0, 1, 2}) == std::vector<Int>{3, 5, 7}, "trajectory of {0,1,2} is (3,5,7)");
    c.line(kappa3({0, 1, 3}) == std::vector<Int>{3, 6, 9}, "trajectory of {0,1,3} is (3,6,9)");
    c.line(kappa3({0, 1, 4}) == std::vector<Int>{3, 6, 10}, "trajectory of {0,1,4} is (3,6,10)");

    const auto cfg = suite_config();
    const auto all = enumerate_trajectories(3, 3, 8, cfg);
    const std::vector<std::vector<Int>> golden = {{3, 5, 7}, {3, 6, 9}, {3, 6, 10}};
    c.line(all.complete && all.trajectories == golden,
           "distinct 3-step trajectories of 3-sets within [0,8]: exactly three");

    using TC = TrajectoryConstraint;
    const auto f1 = filter_trajectories({TC{1, 3}, TC{3, 9}}, 3, 8, cfg);
    c.line(f1.trajectories == std::vector<std::vector<Int>>{{3, 6, 9}},
           "constraints |A|=3, |3A|=9 leave only (3,6,9)");
    const auto f2 = filter_trajectories({TC{1, 3}, TC{2, 5}}, 3, 8, cfg);
    c.line(f2.trajectories == std::vector<std::vector<Int>>{{3, 5, 7}},
           "constraints |A|=3, |2A|=5 leave only (3,5,7)");
    const auto f3 = filter_trajectories({TC{1, 3}, TC{3, 8}}, 3, 8, cfg);
    c.line(f3.trajectories.empty(), "constraints |A|=3, |3A|=8 leave nothing");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> pick_k(1, 6);
    bool detect_ok = true;
    for (int i = 0; i < 1'000; ++i) {
        const Int k = pick_k(rng);
        const IntSet a = random_subset(rng, k, 0, 20);
        const IntSet norm = normalize(a);
        const auto t = trajectory(a, 40);
        if (t.eventual_difference != std::optional<Int>(norm.empty() ? 0 : norm.max())) {
            detect_ok = false;
            c.note("detection failed for A=" + to_string(a));
            break;
        }
    }
    c.line(detect_ok,
           "1000 random sets (k <= 6, max <= 20): eventual difference found within 40 steps "
           "and equals the normalized maximum");
    return c.ok;
}

bool suite_counterexamples(std::ostream& os) {
    Checker c{os};
    for (Int h = 1; h <= 5; ++h) {
        bool row = true;
        for (Int k = 1; k <= 5; ++k) {
            const Witness w = witness_extremes(h, k, Extreme::maximum, false);
            row = row && BigInt(w.claimed_size) == binomial(k + h - 1, h);
            if (h <= k) {
                const Witness wr = witness_extremes(h, k, Extreme::maximum, true);
                row = row && BigInt(wr.claimed_size) == binomial(k, h);
            }
        }
        c.line(row, "powers-of-" + std::to_string(h + 1) + " witnesses, k in [1,5]: plain size "
                    "C(k+h-1,h), restricted size C(k,h)");
    }
    for (Int h = 2; h <= 5; ++h) {
        bool row = true;
        for (Int k = 2; k <= 5; ++k) {
            const Witness w = group_counterexample(h, k, false);
            row = row && w.claimed_size == h * k - h;
        }
        c.line(row, "h=" + std::to_string(h) + ": torsion-plus-free sets of size k in [2,5] reach "
                    "hk-h, below the integer minimum hk-h+1");
    }
    for (Int h = 2; h <= 5; ++h)
        for (Int k = 2; k <= 5; ++k) {
            const Int m = h * k - h * h;
            if (m < 2) continue;  // degenerate modulus, no construction claimed
            if (m < k) {
                bool rejected = false;
                try {
                    group_counterexample(h, k, true);
                } catch (const std::domain_error&) {
                    rejected = true;
                }
                c.line(rejected, "restricted h=" + std::to_string(h) + " k=" + std::to_string(k) +
                                     ": m = " + std::to_string(m) +
                                     " < k admits no k-element residue set (and the target is "
                                     "below the universal minimum max(k-h+1,h+1)); rejected");
                continue;
            }
            const Witness w = group_counterexample(h, k, true);
            c.line(w.claimed_size == m, "restricted h=" + std::to_string(h) +
                                            " k=" + std::to_string(k) + ": size hk-h^2 = " +
                                            std::to_string(m) + " reached in z/" +
                                            std::to_string(m) + " + z");
        }
    return c.ok;
}

bool suite_coset_lemma(std::ostream& os) {
    Checker c{os};
    for (Int m = 1; m <= 12; ++m) {
        const GroupSpec spec = m == 1 ? GroupSpec{} : GroupSpec({m}, 0);
        bool all = true;
        const Int subsets = (Int{1} << m) - 1;
        for (Int mask = 1; mask <= subsets && all; ++mask) {
            std::vector<GroupElem> elems;
            for (Int i = 0; i < m; ++i)
                if ((mask >> i) & 1)
                    elems.push_back(m == 1 ? g_zero(spec) : GroupElem{{i}});
            const GroupSet a(spec, std::move(elems));
            const bool coset = is_subgroup_coset(a);
            for (Int h = 2; h <= 4; ++h)
                all = all && ((sumset(a, h).size() == a.size()) == coset);
        }
        c.line(all, "z/" + std::to_string(m) + ": all " + std::to_string(subsets) +
                        " nonempty subsets, h in [2,4]: |hA| = |A| iff A is a subgroup coset");
    }
    return c.ok;
}

bool suite_properties(std::ostream& os, std::uint64_t seed) {
    Checker c{os};
    std::mt19937_64 rng(seed);

    {
        std::uniform_int_distribution<Int> pick_k(2, 8);
        bool ok = true;
        for (int i = 0; i < 10'000 && ok; ++i) {
            const Int k = pick_k(rng);
            const IntSet a = random_subset(rng, k, 0, 10'000);
            const Int h = std::uniform_int_distribution<Int>(1, k - 1)(rng);
            const IntSet lhs = restricted_sumset(a, k - h);
            const IntSet rhs = restricted_sumset(a, h);
            const Int lambda = a.element_sum();
            std::vector<Int> mirrored;
            mirrored.reserve(static_cast<std::size_t>(rhs.size()));
            for (auto it = rhs.elements().rbegin(); it != rhs.elements().rend(); ++it)
                mirrored.push_back(lambda - *it);
            ok = lhs.elements() == mirrored;
        }
        c.line(ok, "10000 random sets: (k-h)-fold restricted sums are the lambda-mirror of the "
                   "h-fold ones (equal sizes)");
    }

    {
        std::uniform_int_distribution<Int> pick_k(2, 8), pick_c(-1000, 1000), pick_l(-9, 9);
        bool ok = true;
        for (int i = 0; i < 10'000 && ok; ++i) {
            const Int k = pick_k(rng);
            const IntSet a = random_subset(rng, k, 0, 1'000);
            const Int h = std::uniform_int_distribution<Int>(1, std::min<Int>(4, k))(rng);
            const Int plain = sumset_size(a, h);
            const Int restr = restricted_sumset_size(a, h);
            for (int j = 0; j < 100 && ok; ++j) {
                Int lambda = pick_l(rng);
                if (lambda == 0) lambda = 1;
                const Int shift = pick_c(rng);
                std::vector<Int> mapped;
                mapped.reserve(static_cast<std::size_t>(k));
                for (Int v : a) mapped.push_back(lambda * v + shift);
                const IntSet b(std::move(mapped));
                ok = b.size() == k && sumset_size(b, h) == plain &&
                     restricted_sumset_size(b, h) == restr;
            }
        }
        c.line(ok, "10000 random sets x 100 affine maps: plain and restricted sizes invariant");
    }

    {
        bool ok = true;
        for (Int mask = 1; mask < (1 << 10) && ok; ++mask) {
            std::vector<Int> v;
            for (Int i = 0; i < 10; ++i)
                if ((mask >> i) & 1) v.push_back(i);
            if (v.size() > 8) continue;
            const IntSet a(std::move(v));
            for (Int h = 1; h <= 4 && ok; ++h) {
                const IntSet want = naive_sumset(a, h);
                const IntSet want_r = naive_restricted_sumset(a, h);
                ok = sumset(a, h) == want && restricted_sumset(a, h) == want_r;
                DenseLimitGuard guard;
                set_dense_diameter_limit(0);  // force the sorted-merge kernels
                ok = ok && sumset(a, h) == want && restricted_sumset(a, h) == want_r;
            }
        }
        c.line(ok, "all subsets of [0,9] (size <= 8), h <= 4: dense and merge kernels match "
                   "direct enumeration");
    }

    {
        std::uniform_int_distribution<Int> pick_k(1, 8), pick_h(1, 4);
        bool ok = true;
        for (int i = 0; i < 1'000 && ok; ++i) {
            const IntSet a = random_subset(rng, pick_k(rng), -500, 500);
            const Int h = pick_h(rng);
            const IntSet want = naive_sumset(a, h);
            const IntSet want_r = naive_restricted_sumset(a, h);
            ok = sumset(a, h) == want && restricted_sumset(a, h) == want_r;
            DenseLimitGuard guard;
            set_dense_diameter_limit(0);
            ok = ok && sumset(a, h) == want && restricted_sumset(a, h) == want_r;
        }
        c.line(ok, "1000 random sets with negative elements: kernels match direct enumeration");
    }
    return c.ok;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "thm41",  "thm42",  "families",        "h3-table",    "missing",
        "rsharp33", "counterexamples", "coset-lemma", "properties",
    };
    return names;
}

bool run_suite(std::string_view name, std::ostream& os, std::uint64_t seed) {
    if (name == "thm41") return suite_thm41(os);
    if (name == "thm42") return suite_thm42(os);
    if (name == "families") return suite_families(os);
    if (name == "h3-table") return suite_h3_table(os);
    if (name == "missing") return suite_missing(os, seed);
    if (name == "rsharp33") return suite_rsharp33(os, seed);
    if (name == "counterexamples") return suite_counterexamples(os);
    if (name == "coset-lemma") return suite_coset_lemma(os);
    if (name == "properties") return suite_properties(os, seed);
    std::string all;
    for (const auto& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
    throw std::domain_error("unknown suite '" + std::string(name) + "'; valid suites: " + all);
}

}  // namespace sumrange::repro
