#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace visicube {

struct CriterionResult {
  int index = 0;       // 1-based position in the suite
  std::string name;    // stable identifier, usable as a test name
  bool passed = false;
  std::string detail;  // first failure, or a short summary when passed
  double seconds = 0.0;
};

struct ReproOptions {
  // 0 runs the full published ranges; a positive value clamps every
  // sweep to dimensions <= max_n (criteria that need more are skipped
  // and reported as passed with a note, so quick runs stay green).
  int max_n = 0;
  std::uint64_t base_seed = 20240901;
  int threads = 1;
  // When set, one line per criterion is streamed here as it finishes.
  std::ostream* progress = nullptr;
};

// Runs the full battery of reproduction checks, in order, catching
// per-criterion exceptions as failures.  Deterministic for fixed
// options (thread count included).
std::vector<CriterionResult> run_acceptance_suite(const ReproOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

// One "PASS/FAIL index name (seconds) detail" line per criterion.
std::string summary_table(const std::vector<CriterionResult>& results);

}  // namespace visicube
