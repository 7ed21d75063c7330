#pragma once

// Named reproduction suites: each re-derives a block of known results
// (closed forms, witness families, exhaustive ranges, structural lemmas)
// and checks the implementation against them, line by line.

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "sumrange/core.hpp"

namespace sumrange::repro {

/// Brute-force references, independent of the production kernels:
/// direct enumeration of all h-multisets / h-subsets.
IntSet naive_sumset(const IntSet& a, Int h);
IntSet naive_restricted_sumset(const IntSet& a, Int h);

const std::vector<std::string>& suite_names();

/// Runs one suite, writing a line per check to `os`; true iff all passed.
/// Unknown names throw std::domain_error listing the valid suites.
/// `seed` feeds the randomized suites (missing, rsharp33, properties).
bool run_suite(std::string_view name, std::ostream& os, std::uint64_t seed = 0);

}  // namespace sumrange::repro
