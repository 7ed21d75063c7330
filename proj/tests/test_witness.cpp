#include "doctest.h"
#include "sumrange/bounds.hpp"
#include "sumrange/witness.hpp"

using namespace sumrange;

namespace {
IntSet iset(std::initializer_list<Int> v) { return IntSet(std::vector<Int>(v)); }
}  // namespace

TEST_CASE("two-fold witnesses") {
    CHECK(witness_sumset_2(3, 6).int_set() == iset({0, 1, 3}));
    CHECK(witness_sumset_2(4, 7).int_set() == iset({0, 1, 2, 3}));
    CHECK(witness_sumset_2(4, 10).int_set() == iset({0, 1, 3, 7}));
    CHECK(witness_sumset_2(1, 1).int_set() == iset({0}));
    CHECK(witness_sumset_2(4, 10).kind == WitnessKind::two_fold);
    CHECK(witness_sumset_2(4, 10).claimed_size == 10);

    CHECK_THROWS_AS(witness_sumset_2(4, 6), std::domain_error);   // below 2k-1
    CHECK_THROWS_AS(witness_sumset_2(4, 11), std::domain_error);  // above (k^2+k)/2
}

TEST_CASE("restricted two-fold witnesses") {
    CHECK(witness_restricted_2(4, 5).int_set() == iset({0, 1, 2, 3}));
    CHECK(witness_restricted_2(5, 7).int_set() == iset({0, 1, 2, 3, 4}));
    CHECK(witness_restricted_2(5, 10).int_set() == iset({0, 1, 2, 4, 8}));
    CHECK(witness_restricted_2(2, 1).int_set() == iset({0, 1}));
    CHECK(witness_restricted_2(5, 10).restricted);

    CHECK_THROWS_AS(witness_restricted_2(1, 1), std::domain_error);
    CHECK_THROWS_AS(witness_restricted_2(5, 6), std::domain_error);
}

TEST_CASE("deterministic choice where direct family and recursion overlap") {
    // t = 3k-3 resolves to the direct family [0,k-2] + {2k-3}
    CHECK(witness_sumset_2(5, 12).int_set() == iset({0, 1, 2, 3, 7}));
    // restricted t = 3k-6 likewise (b = 2k-4)
    CHECK(witness_restricted_2(6, 12).int_set() == iset({0, 1, 2, 3, 4, 8}));
}

TEST_CASE("three-element witnesses") {
    CHECK(witness_h3(3, 9).int_set() == iset({0, 1, 3}));
    CHECK(witness_h3(3, 7).int_set() == iset({0, 1, 2}));
    CHECK(witness_h3(4, 15).int_set() == iset({0, 1, 5}));
    CHECK_THROWS_AS(witness_h3(3, 8), std::domain_error);  // the missing size
}

TEST_CASE("extreme witnesses") {
    const Witness max33 = witness_extremes(3, 3, Extreme::maximum, false);
    CHECK(max33.int_set() == iset({1, 4, 16}));
    CHECK(max33.claimed_size == 10);

    const Witness min24 = witness_extremes(2, 4, Extreme::minimum, false);
    CHECK(min24.int_set() == iset({0, 1, 2, 3}));
    CHECK(min24.claimed_size == 7);

    const Witness max35 = witness_extremes(3, 5, Extreme::maximum, false);
    CHECK(max35.int_set() == iset({1, 4, 16, 64, 256}));
    CHECK(max35.claimed_size == 35);

    const Witness rmin35 = witness_extremes(3, 5, Extreme::minimum, true);
    CHECK(rmin35.claimed_size == 7);  // hk - h^2 + 1

    CHECK_THROWS_AS(witness_extremes(4, 3, Extreme::maximum, true), std::domain_error);
}

TEST_CASE("family members") {
    CHECK(family_member(Family::P1, 3) == iset({0, 1, 2, 3}));
    CHECK(sumset_size(family_member(Family::P1, 3), 3) == 10);
    CHECK(family_member(Family::Q4, 19) == iset({0, 1, 5, 7, 19}));
    CHECK(sumset_size(family_member(Family::Q4, 19), 3) == 31);
    CHECK(family_member(Family::Q5, 0) == iset({0, 1, 5, 8, 19}));
    CHECK(sumset_size(family_member(Family::Q5, 0), 3) == 32);
    CHECK_THROWS_AS(family_member(Family::P1, 8), std::domain_error);
    CHECK_THROWS_AS(family_member(Family::Q3, 10), std::domain_error);
    CHECK(family_from_string("q2") == Family::Q2);
    CHECK_FALSE(family_from_string("R9").has_value());
}

TEST_CASE("group counterexamples") {
    const Witness a = group_counterexample(2, 3, false);
    CHECK(a.claimed_size == 4);
    CHECK(a.group_set().spec() == GroupSpec({4}, 1));
    CHECK(a.group_set().size() == 3);

    CHECK(group_counterexample(3, 3, false).claimed_size == 6);
    CHECK(group_counterexample(2, 5, true).claimed_size == 6);  // hk - h^2
    CHECK(group_counterexample(2, 4, true).claimed_size == 4);

    // degenerate modulus
    CHECK_THROWS_AS(group_counterexample(2, 2, true), std::domain_error);
    // m = hk-h^2 >= 2 but below k: no k-element residue set exists
    CHECK_THROWS_AS(group_counterexample(3, 4, true), std::domain_error);
    CHECK_THROWS_AS(group_counterexample(4, 5, true), std::domain_error);
    CHECK_THROWS_AS(group_counterexample(1, 3, false), std::domain_error);
}

TEST_CASE("constructive coverage of the full two-fold intervals, k <= 12") {
    for (Int k = 1; k <= 12; ++k) {
        const Interval iv = interval_2fold(k, false);
        for (Int t = iv.lo; t <= iv.hi; ++t) {
            const Witness w = witness_sumset_2(k, t);  // self-verifies
            CHECK(w.int_set().max() <= (Int{1} << k) - 1);
        }
        if (k < 2) continue;
        const Interval rv = interval_2fold(k, true);
        for (Int t = rv.lo; t <= rv.hi; ++t) {
            const Witness w = witness_restricted_2(k, t);
            CHECK(w.int_set().max() <= Int{1} << (k - 2));
        }
    }
}
