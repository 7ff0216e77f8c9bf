#pragma once

// Named verification suites. Each records one entry per assertion; the
// randomized ones are deterministic for a given seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bck/tree_algebra.hpp"

namespace bck {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  void expect(std::string check, bool ok, std::string detail = "");
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite. GuardError propagates; any
/// other library error becomes a failed check.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 0);

nlohmann::json to_json(const SuiteResult& result);

/// "{0}" for the zero ideal, "A" for the whole algebra, else "I(a,b)".
std::string figure_label(const RootedTree& tree, const PathIdeal& ideal);

/// (lower, upper) label pairs of the cover relation of the tree's ideal lattice.
std::vector<std::pair<std::string, std::string>> ideal_hasse_edges(const RootedTree& tree);

}  // namespace bck
