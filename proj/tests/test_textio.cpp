#include "doctest.h"
#include "sumrange/textio.hpp"

using namespace sumrange;

TEST_CASE("integer set literals") {
    CHECK(parse_int_set("{0,1,4}") == IntSet({0, 1, 4}));
    CHECK(parse_int_set("{ -3 , 0 , 7 }") == IntSet({-3, 0, 7}));
    CHECK(parse_int_set("{}").empty());
    CHECK(to_string(IntSet({0, 1, 4})) == "{0,1,4}");
    CHECK(to_string(IntSet{}) == "{}");
    CHECK(parse_int_set(to_string(IntSet({-9, 2, 44}))) == IntSet({-9, 2, 44}));

    CHECK_THROWS_AS(parse_int_set("{0,1"), ParseError);
    CHECK_THROWS_AS(parse_int_set("0,1}"), ParseError);
    CHECK_THROWS_AS(parse_int_set("{0,,1}"), ParseError);
    CHECK_THROWS_AS(parse_int_set("{0,1} x"), ParseError);
    try {
        parse_int_set("{0,?}");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("group spec grammar") {
    CHECK(parse_group_spec("z") == GroupSpec({}, 1));
    CHECK(parse_group_spec("z/4") == GroupSpec({4}, 0));
    CHECK(parse_group_spec("z/4 + z") == GroupSpec({4}, 1));
    CHECK(parse_group_spec("z/4+z") == GroupSpec({4}, 1));
    CHECK(parse_group_spec("Z/6 + Z/10 + z") == GroupSpec({6, 10}, 1));
    CHECK(parse_group_spec("0") == GroupSpec{});

    CHECK(to_string(GroupSpec({4}, 1)) == "z/4 + z");
    CHECK(to_string(GroupSpec({}, 2)) == "z + z");
    CHECK(to_string(GroupSpec{}) == "0");
    CHECK(parse_group_spec(to_string(GroupSpec({6, 10}, 2))) == GroupSpec({6, 10}, 2));

    CHECK_THROWS_AS(parse_group_spec("z/1"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("q"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("z/"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("z +"), ParseError);
}

TEST_CASE("group elements and sets") {
    const GroupSpec spec({4}, 1);
    CHECK(parse_group_elem("(1,0)", spec) == GroupElem{{1, 0}});
    CHECK(parse_group_elem("(5,-2)", spec) == GroupElem{{1, -2}});
    CHECK(to_string(GroupElem{{1, -2}}) == "(1,-2)");

    const GroupSet a = parse_group_set("{(0,0),(1,1)}", spec);
    CHECK(a.size() == 2);
    CHECK(to_string(a) == "{(0,0),(1,1)}");
    CHECK(parse_group_set(to_string(a), spec) == a);

    CHECK_THROWS_AS(parse_group_elem("(1)", spec), std::invalid_argument);  // wrong arity
    CHECK_THROWS_AS(parse_group_set("{(0,0),(1,1)", spec), ParseError);
}

TEST_CASE("size-run rendering") {
    CHECK(render_size_runs(std::vector<Int>{10, 12, 13, 14, 15, 16, 17, 18, 19, 20}) ==
          "{10} ∪ [12,20]");
    CHECK(render_size_runs(std::vector<Int>{7, 9, 10}) == "{7} ∪ [9,10]");
    CHECK(render_size_runs(std::vector<Int>{5, 6}) == "[5,6]");
    CHECK(render_size_runs(std::vector<Int>{5}) == "{5}");
    CHECK(render_size_runs(std::vector<Int>{}) == "{}");
}
