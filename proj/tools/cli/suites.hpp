#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadfrob/graded_pieces.hpp"

namespace quadfrob::cli {

struct CaseResult {
  std::string label;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  // Informational lines that never affect the outcome.
  std::vector<std::string> reports;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// Grid overrides. Unset fields fall back to the suite's default grid.
struct SuiteOptions {
  std::vector<unsigned> primes;
  std::optional<int> n_max;  // quadric dimension bound; ambient index N for diff suites
  std::optional<int> m_max;
  bool j_below_e = false;  // combination: restrict to e >= 1, j <= e - 1
  graded::ColumnBudget budget;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite. Throws PreconditionError for an unknown name or a bad grid.
// Cases run on `jobs` threads; results keep enumeration order.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace quadfrob::cli
