#include "sumrange/textio.hpp"

#include <cctype>

namespace sumrange {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    Int integer() {
        skip_ws();
        const std::size_t start = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected an integer", start);
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const Int digit = s[pos] - '0';
            v = checked_add(checked_mul(v, 10), neg ? -digit : digit);
            ++pos;
        }
        return v;
    }

    void expect_end() {
        if (!done()) fail("unexpected trailing characters");
    }
};

std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<Int> parse_elem_coords(Cursor& c) {
    c.expect('(');
    std::vector<Int> coords;
    if (!c.eat(')')) {
        coords.push_back(c.integer());
        while (c.eat(',')) coords.push_back(c.integer());
        c.expect(')');
    }
    return coords;
}

}  // namespace

IntSet parse_int_set(std::string_view text) {
    Cursor c{text};
    c.expect('{');
    std::vector<Int> elems;
    if (!c.eat('}')) {
        elems.push_back(c.integer());
        while (c.eat(',')) elems.push_back(c.integer());
        c.expect('}');
    }
    c.expect_end();
    return IntSet(std::move(elems));
}

std::string to_string(const IntSet& a) { return "{" + join_ints(a.elements()) + "}"; }

GroupSpec parse_group_spec(std::string_view text) {
    Cursor c{text};
    if (c.peek() == '0') {
        c.expect('0');
        c.expect_end();
        return GroupSpec{};
    }
    std::vector<Int> moduli;
    Int free_rank = 0;
    do {
        c.skip_ws();
        const std::size_t at = c.pos;
        if (!c.eat('z') && !c.eat('Z')) c.fail("expected 'z' or 'z/M'");
        if (c.eat('/')) {
            const Int m = c.integer();
            if (m < 2) throw ParseError("torsion modulus must be >= 2", at);
            moduli.push_back(m);
        } else {
            ++free_rank;
        }
    } while (c.eat('+'));
    c.expect_end();
    return GroupSpec(std::move(moduli), free_rank);
}

std::string to_string(const GroupSpec& spec) {
    if (spec.coord_count() == 0) return "0";
    std::string out;
    for (Int m : spec.torsion_moduli()) {
        if (!out.empty()) out += " + ";
        out += "z/" + std::to_string(m);
    }
    for (Int i = 0; i < spec.free_rank(); ++i) {
        if (!out.empty()) out += " + ";
        out += "z";
    }
    return out;
}

GroupElem parse_group_elem(std::string_view text, const GroupSpec& spec) {
    Cursor c{text};
    auto coords = parse_elem_coords(c);
    c.expect_end();
    return g_reduce(spec, std::move(coords));
}

std::string to_string(const GroupElem& e) { return "(" + join_ints(e.coords) + ")"; }

GroupSet parse_group_set(std::string_view text, const GroupSpec& spec) {
    Cursor c{text};
    c.expect('{');
    std::vector<GroupElem> elems;
    if (!c.eat('}')) {
        elems.push_back(GroupElem{parse_elem_coords(c)});
        while (c.eat(',')) elems.push_back(GroupElem{parse_elem_coords(c)});
        c.expect('}');
    }
    c.expect_end();
    return GroupSet(spec, std::move(elems));
}

std::string to_string(const GroupSet& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.elements().size(); ++i) {
        if (i) out += ',';
        out += to_string(a.elements()[i]);
    }
    return out + "}";
}

std::string render_size_runs(std::span<const Int> sorted_sizes) {
    if (sorted_sizes.empty()) return "{}";
    std::string out;
    std::size_t i = 0;
    while (i < sorted_sizes.size()) {
        std::size_t j = i;
        while (j + 1 < sorted_sizes.size() && sorted_sizes[j + 1] == sorted_sizes[j] + 1) ++j;
        if (!out.empty()) out += " ∪ ";
        if (j > i)
            out += "[" + std::to_string(sorted_sizes[i]) + "," + std::to_string(sorted_sizes[j]) + "]";
        else
            out += "{" + std::to_string(sorted_sizes[i]) + "}";
        i = j + 1;
    }
    return out;
}

}  // namespace sumrange
