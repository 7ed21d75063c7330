#include "doctest.h"
#include "sumrange/bounds.hpp"

using namespace sumrange;

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(50, 25).str() == "126410606437752");
    CHECK(binomial(200, 100).str().size() == 59);  // ~9.05e58, exact digits
}

TEST_CASE("bounds_report") {
    const auto r33 = bounds_report(3, 3);
    CHECK(r33.min_sumset_ordered == 7);
    CHECK(r33.max_sumset == 10);
    CHECK(r33.min_sumset_general == 3);
    CHECK(r33.max_restricted == 1);
    REQUIRE(r33.min_restricted_ordered.has_value());
    CHECK(*r33.min_restricted_ordered == 1);
    CHECK_FALSE(r33.min_restricted_general.has_value());  // defined for h <= k-1 only

    const auto r23 = bounds_report(2, 3);
    CHECK(r23.min_sumset_ordered == 5);
    CHECK(r23.max_sumset == 6);
    REQUIRE(r23.min_restricted_general.has_value());
    CHECK(*r23.min_restricted_general == 3);  // max(k-h+1, h+1) = max(2, 3)

    for (Int k : {1, 2, 5, 9}) {
        const auto r = bounds_report(1, k);
        CHECK(r.min_sumset_ordered == k);
        CHECK(r.max_sumset == k);
        CHECK(r.max_restricted == k);
    }

    const auto r43 = bounds_report(4, 3);
    CHECK(r43.max_restricted == 0);  // h > k
    CHECK_FALSE(r43.min_restricted_ordered.has_value());
    CHECK_FALSE(r43.min_restricted_general.has_value());

    const auto r1 = bounds_report(7, 1);
    CHECK(r1.min_sumset_ordered == 1);
    CHECK(r1.max_sumset == 1);

    CHECK_THROWS_AS(bounds_report(0, 3), std::domain_error);
}

TEST_CASE("min_restricted_general is symmetric in h and k-h") {
    const Int k = 10;
    for (Int h = 1; h <= k - 1; ++h) {
        const auto a = bounds_report(h, k);
        const auto b = bounds_report(k - h, k);
        CHECK(*a.min_restricted_general == *b.min_restricted_general);
    }
}

TEST_CASE("range_h3_closed_form") {
    CHECK(range_h3_closed_form(3) == std::vector<Int>{7, 9, 10});
    CHECK(range_h3_closed_form(2) == std::vector<Int>{5, 6});
    CHECK(range_h3_closed_form(1) == std::vector<Int>{3});
    CHECK(range_h3_closed_form(13) ==
          std::vector<Int>{27, 39, 50, 60, 69, 77, 84, 90, 95, 99, 102, 104, 105});
    for (Int h = 1; h <= 20; ++h) {
        const auto v = range_h3_closed_form(h);
        CHECK(static_cast<Int>(v.size()) == h);
        CHECK(v.front() == 2 * h + 1);
        CHECK(BigInt(v.back()) == binomial(h + 2, 2));
        if (h >= 3)
            CHECK(std::find(v.begin(), v.end(), 2 * h + 2) == v.end());  // the missing size
    }
    CHECK_THROWS_AS(range_h3_closed_form(0), std::domain_error);
}

TEST_CASE("interval_2fold") {
    CHECK(interval_2fold(4, false) == Interval{7, 10});
    CHECK(interval_2fold(4, true) == Interval{5, 6});
    CHECK(interval_2fold(1, false) == Interval{1, 1});
    CHECK(interval_2fold(2, true) == Interval{1, 1});
    CHECK_THROWS_AS(interval_2fold(1, true), std::domain_error);
    CHECK_THROWS_AS(interval_2fold(0, false), std::domain_error);
}
