#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperspec/bounds.hpp"
#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

struct SuiteRanges {
  int k_min = 2;
  int k_max = 4;
  int n_max = 12;
  int m_max = 40;
};

// Deterministic seeded mix of connected instances cycling through random,
// random-regular, hyperstar, and blow-up shapes within the given ranges.
std::vector<Hypergraph> suite_instances(int count, std::uint64_t seed,
                                        const SuiteRanges& ranges = {});

struct SuiteCaseResult {
  int index = 0;
  int k = 0;
  int n = 0;
  int m = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

struct SuiteSummary {
  int cases = 0;
  int passed = 0;
  // Smallest slack seen per bound entry name, over cases where it applied.
  std::map<std::string, double> worst_slack;
  std::vector<SuiteCaseResult> results;

  bool all_pass() const { return passed == cases; }
};

// Runs the full verification report on every instance and aggregates
// pass/fail plus the worst slack per bound. Case order matches input order.
SuiteSummary run_suite(const std::vector<Hypergraph>& instances,
                       const SolverOptions& opts = {});

}  // namespace hyperspec
