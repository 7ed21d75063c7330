#pragma once

// Text formats shared by the CLI and the result cache.
//   integer sets:   {0,1,4}
//   group specs:    z | z/4 | z/4 + z | 0 (trivial)
//   group elements: (1,0)   -- torsion coordinates first
//   group sets:     {(0,0),(1,1)}
// Anything printed here re-parses to an equal value.

#include <span>
#include <string>
#include <string_view>

#include "sumrange/core.hpp"

namespace sumrange {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

IntSet parse_int_set(std::string_view text);
std::string to_string(const IntSet& a);

GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

GroupElem parse_group_elem(std::string_view text, const GroupSpec& spec);
std::string to_string(const GroupElem& e);

GroupSet parse_group_set(std::string_view text, const GroupSpec& spec);
std::string to_string(const GroupSet& a);

/// Paper-display rendering of a sorted list of sizes: runs of consecutive
/// values as [a,b], isolated values braced, joined with a union sign.
std::string render_size_runs(std::span<const Int> sorted_sizes);

}  // namespace sumrange
