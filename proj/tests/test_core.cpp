#include <limits>

#include "doctest.h"
#include "sumrange/core.hpp"

using namespace sumrange;

namespace {
IntSet iset(std::initializer_list<Int> v) { return IntSet(std::vector<Int>(v)); }
}  // namespace

TEST_CASE("sumset basics") {
    CHECK(sumset(iset({0, 1, 2}), 3) == IntSet::interval(0, 6));
    CHECK(sumset(iset({0}), 5) == iset({0}));
    CHECK(sumset(iset({0, 1, 4}), 3) == iset({0, 1, 2, 3, 4, 5, 6, 8, 9, 12}));
    CHECK(sumset(iset({0, 1, 4}), 1) == iset({0, 1, 4}));
    CHECK(sumset_size(iset({0, 1, 4}), 3) == 10);

    CHECK_THROWS_AS(sumset(IntSet{}, 2), std::domain_error);
    CHECK_THROWS_AS(sumset(iset({0, 1}), 0), std::domain_error);
    CHECK_THROWS_AS(sumset(iset({0, 1}), -3), std::domain_error);
}

TEST_CASE("sumset handles negative elements and translation") {
    CHECK(sumset(iset({-2, -1}), 2) == iset({-4, -3, -2}));
    CHECK(sumset(iset({-5, 5}), 3) == iset({-15, -5, 5, 15}));
}

TEST_CASE("sumset refuses to overflow") {
    const Int big = std::numeric_limits<Int>::max() - 1;
    CHECK_THROWS_AS(sumset(iset({big - 1, big}), 2), std::overflow_error);
    CHECK_THROWS_AS(iset({big - 1, big}).element_sum(), std::overflow_error);
    CHECK(iset({1, 2, 3}).element_sum() == 6);
}

TEST_CASE("restricted sumset basics") {
    CHECK(restricted_sumset(iset({0, 1}), 2) == iset({1}));
    CHECK(restricted_sumset(iset({0, 1, 2, 4}), 2) == iset({1, 2, 3, 4, 5, 6}));
    CHECK(restricted_sumset(iset({0, 1, 2}), 4).empty());
    CHECK(restricted_sumset_size(iset({0, 1, 2}), 4) == 0);
    CHECK(restricted_sumset(iset({3, 5, 9}), 3) == iset({17}));
    CHECK_THROWS_AS(restricted_sumset(IntSet{}, 1), std::domain_error);
    CHECK_THROWS_AS(restricted_sumset(iset({1}), 0), std::domain_error);
}

TEST_CASE("merge fallback matches the dense kernel") {
    const Int saved = dense_diameter_limit();
    const IntSet a = iset({0, 3, 7, 19});
    const IntSet want = sumset(a, 3);
    const IntSet want_r = restricted_sumset(a, 2);
    set_dense_diameter_limit(0);
    CHECK(sumset(a, 3) == want);
    CHECK(restricted_sumset(a, 2) == want_r);
    set_dense_diameter_limit(saved);
}

TEST_CASE("normalize") {
    CHECK(normalize(iset({10, 12, 14})) == iset({0, 1, 2}));
    CHECK(normalize(iset({0, 2, 3})) == iset({0, 1, 3}));
    CHECK(normalize(iset({0, 1, 3})) == iset({0, 1, 3}));
    CHECK(normalize(iset({7})) == iset({0}));
    CHECK(normalize(iset({-6, -2})) == iset({0, 1}));
    // sizes agree across the affine orbit
    CHECK(sumset_size(iset({0, 2, 3}), 2) == sumset_size(normalize(iset({0, 2, 3})), 2));
}

TEST_CASE("arithmetic progression predicate") {
    CHECK(is_arithmetic_progression(iset({0, 3, 6, 9})));
    CHECK_FALSE(is_arithmetic_progression(iset({0, 1, 3})));
    CHECK(is_arithmetic_progression(iset({5})));
    CHECK(is_arithmetic_progression(iset({2, 9})));
}

TEST_CASE("IntSet construction") {
    CHECK(IntSet(std::vector<Int>{3, 1, 3, 2}) == iset({1, 2, 3}));
    CHECK_THROWS_AS(IntSet::from_sorted({1, 1, 2}), std::invalid_argument);
    CHECK(IntSet::interval(4, 2).empty());
    CHECK(iset({2, 9}).diameter() == 7);
    CHECK_THROWS_AS(IntSet{}.min(), std::domain_error);
}

TEST_CASE("group arithmetic") {
    const GroupSpec z4z({4}, 1);
    CHECK(g_reduce(z4z, {5, -2}) == GroupElem{{1, -2}});
    CHECK(g_add(z4z, GroupElem{{3, 1}}, GroupElem{{2, 2}}) == GroupElem{{1, 3}});
    CHECK(g_negate(z4z, GroupElem{{1, 2}}) == GroupElem{{3, -2}});
    CHECK(g_scale(z4z, 3, GroupElem{{2, 5}}) == GroupElem{{2, 15}});
    CHECK(g_order(z4z, GroupElem{{2, 0}}) == 2);
    CHECK(g_order(z4z, GroupElem{{1, 0}}) == 4);
    CHECK(g_order(z4z, GroupElem{{0, 1}}) == 0);
    CHECK(GroupSpec({4}, 1).unbounded_exponent());
    CHECK_FALSE(GroupSpec({4}, 0).unbounded_exponent());
    CHECK_THROWS_AS(GroupSpec({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec({4}, -1), std::invalid_argument);
    CHECK_THROWS_AS(g_reduce(z4z, {1}), std::invalid_argument);
}

TEST_CASE("group sumsets") {
    const GroupSpec z4({4}, 0);
    const GroupSet a(z4, {GroupElem{{0}}, GroupElem{{1}}});
    CHECK(sumset(a, 2) == GroupSet(z4, {GroupElem{{0}}, GroupElem{{1}}, GroupElem{{2}}}));
    CHECK(sumset(a, 7).size() == 4);  // saturates the whole group
    CHECK(restricted_sumset(a, 2) == GroupSet(z4, {GroupElem{{1}}}));
    CHECK(restricted_sumset(a, 3).empty());

    const GroupSpec z6z({6}, 1);
    std::vector<GroupElem> elems;
    for (Int i = 0; i < 3; ++i) elems.push_back(GroupElem{{i, 0}});
    const GroupSet b(z6z, std::move(elems));
    CHECK(sumset(b, 3).size() == 6);  // wraps all the way around the torsion part

    CHECK_THROWS_AS(sumset(GroupSet(z4), 2), std::domain_error);
    CHECK_THROWS_AS(sumset(a, 0), std::domain_error);
}

TEST_CASE("group sumsets with free rank 2 take the generic path") {
    const GroupSpec z2({}, 2);
    const GroupSet a(z2, {GroupElem{{0, 0}}, GroupElem{{1, 0}}, GroupElem{{0, 1}}});
    const GroupSet s = sumset(a, 2);
    CHECK(s.size() == 6);
    CHECK(s.contains(GroupElem{{1, 1}}));
    CHECK(restricted_sumset(a, 2).size() == 3);
}

TEST_CASE("subgroup coset test") {
    const GroupSpec z4({4}, 0);
    CHECK(is_subgroup_coset(GroupSet(z4, {GroupElem{{0}}, GroupElem{{2}}})));
    CHECK(is_subgroup_coset(GroupSet(z4, {GroupElem{{1}}, GroupElem{{3}}})));
    const GroupSpec z7({7}, 0);
    CHECK_FALSE(is_subgroup_coset(GroupSet(z7, {GroupElem{{0}}, GroupElem{{1}}, GroupElem{{3}}})));
    const GroupSpec z4z({4}, 1);
    CHECK(is_subgroup_coset(GroupSet(z4z, {GroupElem{{2, 5}}})));  // singletons always
    CHECK_THROWS_AS(
        is_subgroup_coset(GroupSet(z4z, {GroupElem{{0, 5}}, GroupElem{{2, 5}}})),
        std::domain_error);
    CHECK_THROWS_AS(is_subgroup_coset(GroupSet(z4)), std::domain_error);
}

TEST_CASE("embed_integers") {
    const GroupSpec z({}, 1);
    CHECK(embed_integers(IntSet({0, 1, 3}), z, GroupElem{{1}}, 1) ==
          GroupSet(z, {GroupElem{{0}}, GroupElem{{1}}, GroupElem{{3}}}));

    const GroupSpec z4z({4}, 1);
    CHECK(embed_integers(IntSet({0, 1}), z4z, GroupElem{{1, 1}}, 2) ==
          GroupSet(z4z, {GroupElem{{0, 0}}, GroupElem{{1, 1}}}));

    const GroupSpec z100({100}, 0);
    const GroupSet e = embed_integers(IntSet({0, 1, 2}), z100, GroupElem{{1}}, 2);
    CHECK(e.size() == 3);
    CHECK(sumset(e, 2).size() == 5);

    const GroupSpec z4({4}, 0);
    CHECK_THROWS_WITH_AS(embed_integers(IntSet({0, 1, 2}), z4, GroupElem{{1}}, 2),
                         doctest::Contains("order"), std::domain_error);
}
