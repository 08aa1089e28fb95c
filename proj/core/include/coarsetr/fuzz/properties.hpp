#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarsetr/fuzz/generators.hpp"

namespace coarsetr::fuzz {

/// Outcome of one generated case.
struct CaseResult {
  bool ok = true;
  std::string failure;  // first broken property, empty when ok
};

/// A named family of generated cases.
struct Suite {
  std::string name;
  std::string description;
  CaseResult (*run)(std::uint64_t case_seed);
};

/// Registered suites, in a fixed order.
std::vector<Suite> const& suites();
Suite const* find_suite(std::string const& name);

/// Seed of case `index` in a run started with `seed`: a splitmix64 step, so
/// cases are independent of how a run is split across threads.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct SuiteSummary {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  /// Index and message of each failing case.
  std::vector<std::pair<std::uint64_t, std::string>> failures;
};

/// Runs `cases` cases of a suite on up to `threads` threads. The summary
/// does not depend on the thread count.
SuiteSummary run_suite(Suite const& suite, std::uint64_t seed,
                       std::uint64_t cases, unsigned threads);

/// Chain-level checks on the square completing a random cospan, degrees
/// 0..max_degree: u^* w^* = (wu)^* and h_* u^* = v^* f_* (in the naming of
/// the composite X <-c- V -g-> Z <-u- U).
CaseResult check_square_identities(Cospan const& c, std::size_t max_degree);

}  // namespace coarsetr::fuzz
