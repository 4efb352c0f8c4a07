#include <doctest.h>

#include <vector>

#include "visicube/daisy.hpp"
#include "visicube/errors.hpp"
#include "visicube/oracles.hpp"
#include "visicube/vertex.hpp"

using namespace visicube;

TEST_CASE("pattern validation and expansion") {
  DaisyPattern p{4, 2, 2, 1, /*stem=*/bit(1), /*crown=*/bit(1) | bit(2) | bit(3)};
  p.validate();
  // Members are {1} plus one of {2, 3}.
  CHECK(p.expansion() == std::vector<Vertex>{3, 5});

  DaisyPattern zero_t{4, 2, 2, 0, 0, 3};
  CHECK_THROWS_AS(zero_t.validate(), std::invalid_argument);

  DaisyPattern stem_outside{4, 2, 2, 1, bit(4), bit(1) | bit(2) | bit(3)};
  CHECK_THROWS_AS(stem_outside.validate(), std::invalid_argument);

  DaisyPattern wrong_sizes{4, 2, 2, 1, bit(1) | bit(2), bit(1) | bit(2) | bit(3)};
  CHECK_THROWS_AS(wrong_sizes.validate(), std::invalid_argument);
}

TEST_CASE("layer family invariants") {
  LayerFamily f = LayerFamily::full_layer(4, 2);
  CHECK(f.size() == 6);
  f.validate();

  LayerFamily wrong{4, 2, VertexSet(4, {1})};  // weight 1 in a weight-2 family
  CHECK_THROWS_AS(wrong.validate(), InvalidFamily);
}

TEST_CASE("daisy scan finds the least pattern") {
  LayerFamily full = LayerFamily::full_layer(4, 2);
  auto hit = find_daisy(full, 2, 1);
  REQUIRE(hit.has_value());
  CHECK(hit->stem == bit(1));
  CHECK(hit->crown == (bit(1) | bit(2) | bit(3)));

  // Removing {1,2} breaks every crown that needs it; the scan moves to
  // the first crown made of {1,3} and {1,4}.
  LayerFamily pruned = full;
  pruned.members.erase(3);  // {1,2}
  auto next = find_daisy(pruned, 2, 1);
  REQUIRE(next.has_value());
  CHECK(next->stem == bit(1));
  CHECK(next->crown == (bit(1) | bit(3) | bit(4)));
}

TEST_CASE("oversized patterns are vacuous") {
  LayerFamily full = LayerFamily::full_layer(3, 2);
  CHECK_FALSE(find_daisy(full, 4, 2).has_value());  // needs 4 coordinates
}

TEST_CASE("find_daisy_through probes a candidate") {
  // Family {{1,2}} plus candidate {1,3} completes the stem-{1} pattern.
  LayerFamily f{4, 2, VertexSet(4, {3})};
  auto hit = find_daisy_through(f, 5, 2, 1);
  REQUIRE(hit.has_value());
  CHECK(hit->stem == bit(1));
  CHECK(hit->crown == 7);
  // Candidate {3,4} shares no element pair with {1,2}, so nothing
  // completes.
  CHECK_FALSE(find_daisy_through(f, 12, 2, 1).has_value());
}

TEST_CASE("greedy families are daisy-free") {
  for (int n = 3; n <= 7; ++n) {
    LayerFamily f = greedy_daisy_free(n, 2, 2, 1);
    CHECK_FALSE(find_daisy(f, 2, 1).has_value());
  }
  LayerFamily f = greedy_daisy_free(7, 3, 6, 3);
  CHECK_FALSE(find_daisy(f, 6, 3).has_value());
  CHECK(f.size() >= 25);  // the optimum is 33; colex greedy lands close
}

TEST_CASE("greedy shuffle stays daisy-free and deterministic") {
  LayerFamily a = greedy_daisy_free(6, 2, 2, 1, 42);
  LayerFamily b = greedy_daisy_free(6, 2, 2, 1, 42);
  CHECK(a.members == b.members);
  CHECK_FALSE(find_daisy(a, 2, 1).has_value());
}

TEST_CASE("exact values for single-swap daisies match the closed form") {
  // For (r,s,t) = (2,2,1) the largest daisy-free family is a matching
  // of pair-sets, so the value is floor(n/2).
  for (int n = 3; n <= 7; ++n) {
    TuranRecord rec = turan_exact(n, 2, 2, 1);
    CHECK(rec.optimal);
    CHECK(rec.value == static_cast<std::uint64_t>(n / 2));
    CHECK_FALSE(find_daisy(rec.extremal_family, 2, 1).has_value());
    CHECK(rec.extremal_family.size() == rec.value);
  }
}

TEST_CASE("exact values agree with the hitting-set oracle") {
  CHECK(turan_exact(3, 2, 2, 1).value == oracle::turan_by_hitting_oracle(3, 2, 2, 1));
  CHECK(turan_exact(5, 2, 2, 1).value == oracle::turan_by_hitting_oracle(5, 2, 2, 1));
  CHECK(turan_exact(6, 3, 6, 3).value == 19);
  CHECK(oracle::turan_by_hitting_oracle(6, 3, 6, 3) == 19);
}

TEST_CASE("vacuous parameters give the full layer") {
  TuranRecord rec = turan_exact(3, 2, 4, 2);  // r+s-t = 4 > n
  CHECK(rec.optimal);
  CHECK(rec.value == 3);
  CHECK(rec.extremal_family.size() == 3);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  TuranRecord rec = turan_exact(8, 4, 2, 1, std::chrono::milliseconds(0));
  CHECK_FALSE(rec.optimal);
  // Still a valid daisy-free family of at least greedy size.
  CHECK_FALSE(find_daisy(rec.extremal_family, 2, 1).has_value());
  CHECK(rec.value >= greedy_daisy_free(8, 4, 2, 1).size());
}

TEST_CASE("densities fall along the published chains") {
  std::vector<TuranRecord> along_n;
  for (int n = 3; n <= 7; ++n) along_n.push_back(turan_exact(n, 2, 2, 1));
  CHECK(densities_monotone(along_n));

  std::vector<TuranRecord> diagonal;
  diagonal.push_back(turan_exact(5, 2, 2, 1));
  diagonal.push_back(turan_exact(6, 3, 2, 1));
  diagonal.push_back(turan_exact(7, 4, 2, 1));
  CHECK(densities_monotone(diagonal));
}

TEST_CASE("monotonicity checker flags corrupted records") {
  std::vector<TuranRecord> chain;
  for (int n = 3; n <= 5; ++n) chain.push_back(turan_exact(n, 2, 2, 1));
  chain[2].value = binomial(5, 2);  // density 1 out of nowhere
  auto bad = density_monotonicity_violation(chain);
  REQUIRE(bad.has_value());
  CHECK(bad->first == 1);
  CHECK(bad->second == 2);
}

TEST_CASE("monotonicity checker rejects malformed chains") {
  std::vector<TuranRecord> chain;
  chain.push_back(turan_exact(3, 2, 2, 1));
  chain.push_back(turan_exact(5, 2, 2, 1));  // n jumps by 2
  CHECK_THROWS_AS(density_monotonicity_violation(chain), std::invalid_argument);

  std::vector<TuranRecord> mixed;
  mixed.push_back(turan_exact(3, 2, 2, 1));
  mixed.push_back(turan_exact(4, 2, 2, 1));
  mixed.push_back(turan_exact(5, 3, 2, 1));  // switches chain shape midway
  CHECK_THROWS_AS(density_monotonicity_violation(mixed), std::invalid_argument);
}

TEST_CASE("density accessor is exact") {
  TuranRecord rec = turan_exact(3, 2, 2, 1);
  CHECK(rec.density() == Rational(1, 3));
}
