#include <doctest.h>

#include <sstream>

#include "visicube/repro.hpp"

using namespace visicube;

TEST_CASE("clamped suite runs green and keeps its shape") {
  ReproOptions opt;
  opt.max_n = 5;
  opt.threads = 2;
  std::vector<CriterionResult> results = run_acceptance_suite(opt);
  REQUIRE(results.size() == 11);
  const char* names[] = {
      "layer-pair-unions",
      "layered-builds-with-witness-paths",
      "density-constant-arithmetic",
      "turan-ground-truth",
      "total-mv-size-window",
      "perfect-code-properties",
      "distance2-equivalence",
      "weight-class-partitions",
      "cube-partition-small-classes",
      "coloring-repair-and-feasibility",
      "solver-cross-checks",
  };
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].index == static_cast<int>(i) + 1);
    CHECK(results[i].name == names[i]);
    CHECK(results[i].passed);
  }
  CHECK(all_passed(results));

  // Criteria that need bigger cubes must say they were skipped.
  CHECK(results[1].detail.find("skipped") != std::string::npos);
  CHECK(results[9].detail.find("skipped") != std::string::npos);
}

TEST_CASE("summary table carries one line per criterion") {
  ReproOptions opt;
  opt.max_n = 3;
  std::vector<CriterionResult> results = run_acceptance_suite(opt);
  std::string table = summary_table(results);
  std::size_t lines = 0;
  for (char ch : table) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 11);
  CHECK(table.find("PASS  3  density-constant-arithmetic") != std::string::npos);
}

TEST_CASE("progress stream sees finished criteria") {
  ReproOptions opt;
  opt.max_n = 2;
  std::ostringstream progress;
  opt.progress = &progress;
  run_acceptance_suite(opt);
  CHECK(progress.str().find("density-constant-arithmetic") != std::string::npos);
}
