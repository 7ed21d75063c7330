#include <bit>
#include <random>
#include <set>

#include "doctest.h"
#include "sumrange/bounds.hpp"
#include "sumrange/explorer.hpp"
#include "sumrange/repro.hpp"

using namespace sumrange;

namespace {

IntSet random_set(std::mt19937_64& rng, Int k, Int lo, Int hi) {
    std::uniform_int_distribution<Int> pick(lo, hi);
    std::set<Int> s;
    while (static_cast<Int>(s.size()) < k) s.insert(pick(rng));
    return IntSet(std::vector<Int>(s.begin(), s.end()));
}

// direct h-multiset enumeration over group elements
GroupSet naive_group_sumset(const GroupSet& a, Int h) {
    std::vector<GroupElem> out;
    const auto& e = a.elements();
    std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
    for (;;) {
        GroupElem sum = g_zero(a.spec());
        for (auto i : idx) sum = g_add(a.spec(), sum, e[i]);
        out.push_back(sum);
        // next nondecreasing index tuple
        std::size_t p = idx.size();
        while (p > 0 && idx[p - 1] == e.size() - 1) --p;
        if (p == 0) break;
        const std::size_t v = idx[p - 1] + 1;
        for (std::size_t q = p - 1; q < idx.size(); ++q) idx[q] = v;
    }
    return GroupSet(a.spec(), std::move(out));
}

}  // namespace

TEST_CASE("restricted symmetry: (k-h)-fold sums mirror h-fold sums") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const Int k = std::uniform_int_distribution<Int>(2, 8)(rng);
        const IntSet a = random_set(rng, k, -200, 500);
        const Int h = std::uniform_int_distribution<Int>(1, k - 1)(rng);
        const IntSet lhs = restricted_sumset(a, k - h);
        const IntSet rhs = restricted_sumset(a, h);
        REQUIRE(lhs.size() == rhs.size());
        const Int lambda = a.element_sum();
        for (Int b : rhs) CHECK(lhs.contains(lambda - b));
    }
}

TEST_CASE("affine invariance of both size kinds") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Int k = std::uniform_int_distribution<Int>(2, 7)(rng);
        const IntSet a = random_set(rng, k, 0, 300);
        for (Int h = 1; h <= k; ++h) {
            const Int plain = sumset_size(a, h);
            const Int restr = restricted_sumset_size(a, h);
            for (int j = 0; j < 10; ++j) {
                Int lam = std::uniform_int_distribution<Int>(-6, 6)(rng);
                if (lam == 0) lam = 2;
                const Int c = std::uniform_int_distribution<Int>(-400, 400)(rng);
                std::vector<Int> mapped;
                for (Int v : a) mapped.push_back(lam * v + c);
                const IntSet b(std::move(mapped));
                CHECK(sumset_size(b, h) == plain);
                CHECK(restricted_sumset_size(b, h) == restr);
            }
            CHECK(sumset_size(normalize(a), h) == plain);
        }
    }
}

TEST_CASE("nesting: with min 0, hA is strictly inside (h+1)A unless A = {0}") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Int k = std::uniform_int_distribution<Int>(2, 6)(rng);
        IntSet a = random_set(rng, k - 1, 1, 60);
        std::vector<Int> with_zero = a.elements();
        with_zero.insert(with_zero.begin(), 0);
        a = IntSet::from_sorted(std::move(with_zero));
        IntSet prev = sumset(a, 1);
        for (Int h = 2; h <= 5; ++h) {
            const IntSet cur = sumset(a, h);
            for (Int v : prev) CHECK(cur.contains(v));
            CHECK(cur.size() > prev.size());
            prev = cur;
        }
    }
}

TEST_CASE("bounds sandwich on random sets") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        const Int k = std::uniform_int_distribution<Int>(1, 7)(rng);
        const IntSet a = random_set(rng, k, -1000, 1000);
        const Int h = std::uniform_int_distribution<Int>(1, 5)(rng);
        const auto b = bounds_report(h, k);
        const BigInt plain{sumset_size(a, h)};
        CHECK(plain >= b.min_sumset_ordered);
        CHECK(plain <= b.max_sumset);
        if (h <= k) {
            const BigInt restr{restricted_sumset_size(a, h)};
            CHECK(restr >= *b.min_restricted_ordered);
            CHECK(restr <= b.max_restricted);
        }
    }
}

TEST_CASE("AP characterization of the minimum size") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        const Int k = std::uniform_int_distribution<Int>(3, 7)(rng);
        const Int h = std::uniform_int_distribution<Int>(2, 5)(rng);
        const IntSet a = random_set(rng, k, 0, 500);
        const bool min_hit = sumset_size(a, h) == h * k - h + 1;
        CHECK(min_hit == is_arithmetic_progression(a));
    }
}

TEST_CASE("group kernels agree with direct enumeration") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const bool with_free = i % 2 == 0;
        const Int m = std::uniform_int_distribution<Int>(2, 9)(rng);
        const GroupSpec spec = with_free ? GroupSpec({m}, 1) : GroupSpec({m}, 0);
        Int k = std::uniform_int_distribution<Int>(1, 4)(rng);
        if (!with_free) k = std::min(k, m);  // the torsion part has only m elements
        std::set<GroupElem> elems;
        std::uniform_int_distribution<Int> tpick(0, m - 1), fpick(0, 6);
        while (static_cast<Int>(elems.size()) < k) {
            std::vector<Int> c{tpick(rng)};
            if (with_free) c.push_back(fpick(rng));
            elems.insert(GroupElem{std::move(c)});
        }
        const GroupSet a(spec, {elems.begin(), elems.end()});
        const Int h = std::uniform_int_distribution<Int>(1, 4)(rng);
        CHECK(sumset(a, h) == naive_group_sumset(a, h));
    }
}

TEST_CASE("group restricted sumsets agree with subset enumeration") {
    const GroupSpec spec({6}, 1);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        std::set<GroupElem> elems;
        std::uniform_int_distribution<Int> tpick(0, 5), fpick(0, 4), kpick(1, 5);
        const Int k = kpick(rng);
        while (static_cast<Int>(elems.size()) < k) {
            elems.insert(GroupElem{{tpick(rng), fpick(rng)}});
        }
        const GroupSet a(spec, {elems.begin(), elems.end()});
        for (Int h = 1; h <= k; ++h) {
            std::set<GroupElem> want;
            const auto& e = a.elements();
            // all h-subsets by bitmask
            for (unsigned mask = 0; mask < (1u << e.size()); ++mask) {
                if (std::popcount(mask) != static_cast<int>(h)) continue;
                GroupElem sum = g_zero(spec);
                for (std::size_t j = 0; j < e.size(); ++j)
                    if ((mask >> j) & 1) sum = g_add(spec, sum, e[j]);
                want.insert(sum);
            }
            CHECK(restricted_sumset(a, h) ==
                  GroupSet(spec, {want.begin(), want.end()}));
        }
    }
}

TEST_CASE("integer kernels agree with the naive oracle on random sets") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Int k = std::uniform_int_distribution<Int>(1, 8)(rng);
        const IntSet a = random_set(rng, k, -300, 300);
        const Int h = std::uniform_int_distribution<Int>(1, 4)(rng);
        CHECK(sumset(a, h) == repro::naive_sumset(a, h));
        CHECK(restricted_sumset(a, h) == repro::naive_restricted_sumset(a, h));
    }
}

TEST_CASE("coset lemma at small moduli") {
    for (Int m = 2; m <= 8; ++m) {
        const GroupSpec spec({m}, 0);
        for (Int mask = 1; mask < (Int{1} << m); ++mask) {
            std::vector<GroupElem> elems;
            for (Int i = 0; i < m; ++i)
                if ((mask >> i) & 1) elems.push_back(GroupElem{{i}});
            const GroupSet a(spec, std::move(elems));
            const bool coset = is_subgroup_coset(a);
            for (Int h = 2; h <= 4; ++h)
                CHECK((sumset(a, h).size() == a.size()) == coset);
        }
    }
}
