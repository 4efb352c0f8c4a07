#include <doctest.h>

#include "visicube/errors.hpp"
#include "visicube/mv_color.hpp"
#include "visicube/vertex.hpp"

using namespace visicube;

TEST_CASE("color ids encode residue and part") {
  CHECK(Coloring::encode(0, 1) == 0);
  CHECK(Coloring::encode(0, 2) == 1);
  CHECK(Coloring::encode(2, 1) == 4);
  Coloring c(6, 3);
  CHECK(c.color_count() == 6);
  c.assign(bit(1) | bit(2) | bit(3) | bit(4), 1, 2);
  CHECK(c.id_of(bit(1) | bit(2) | bit(3) | bit(4)) == 3);
  CHECK(c.residue_of(bit(1) | bit(2) | bit(3) | bit(4)) == 1);
  CHECK(c.part_of(bit(1) | bit(2) | bit(3) | bit(4)) == 2);
  CHECK_THROWS_AS(c.assign(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.assign_id(0, 6), std::invalid_argument);
}

TEST_CASE("the scale cap bounds the coloring table") {
  CHECK_THROWS_AS(Coloring(31, 3), ScaleCapExceeded);
}

TEST_CASE("layer structure is enforced where promised") {
  Coloring c(6, 3);
  for (Vertex v = 0; v < 64; ++v) c.assign(v, weight(v) % 3, 1);
  c.require_layer_structure();

  Coloring wrong_residue = c;
  wrong_residue.assign(bit(1), 0, 1);  // weight 1 must use residue 1
  CHECK_THROWS_AS(wrong_residue.require_layer_structure(), std::invalid_argument);

  Coloring part2_boundary = c;
  part2_boundary.assign(bit(1), 1, 2);  // layer 1 is boundary, part 1 only
  CHECK_THROWS_AS(part2_boundary.require_layer_structure(), std::invalid_argument);
}

TEST_CASE("random colorings are layered and seed-deterministic") {
  Coloring a = layered_coloring(8, 3, 11);
  Coloring b = layered_coloring(8, 3, 11);
  Coloring c = layered_coloring(8, 3, 12);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  a.require_layer_structure();
  for (Vertex v = 0; v < 256; ++v) {
    int w = weight(v);
    if (w <= 2 || w >= 6) CHECK(a.part_of(v) == 1);
  }
  CHECK_THROWS_AS(layered_coloring(5, 3, 1), std::invalid_argument);
}

TEST_CASE("monochromatic pattern scan on a forced instance") {
  // All of the single middle layer in one part: the full-crown pattern
  // is monochromatic.
  Coloring c(6, 3);
  for (Vertex v = 0; v < 64; ++v) c.assign(v, weight(v) % 3, 1);
  auto mono = first_monochromatic_daisy(c);
  REQUIRE(mono.has_value());
  CHECK(mono->layer == 3);
  CHECK(mono->color_id == 0);
  CHECK(mono->stem == 0);
  CHECK(mono->crown == 63);
}

TEST_CASE("repair fixes the forced instance deterministically") {
  Coloring c(6, 3);
  for (Vertex v = 0; v < 64; ++v) c.assign(v, weight(v) % 3, 1);
  RepairOutcome out = moser_tardos_repair(c, 10'000, 5);
  CHECK(out.converged);
  CHECK(out.rounds >= 1);
  CHECK_FALSE(first_monochromatic_daisy(out.coloring).has_value());
  CHECK(verify_coloring(out.coloring));

  RepairOutcome again = moser_tardos_repair(c, 10'000, 5);
  CHECK(again.coloring == out.coloring);
  CHECK(again.rounds == out.rounds);

  // A clean input needs no rounds.
  RepairOutcome idle = moser_tardos_repair(out.coloring, 10'000, 5);
  CHECK(idle.rounds == 0);
  CHECK(idle.coloring == out.coloring);
}

TEST_CASE("repair refuses unlayered input") {
  Coloring c(6, 3);  // everything id 0, boundary included
  CHECK_THROWS_AS(moser_tardos_repair(c, 10, 1), std::invalid_argument);
}

TEST_CASE("exhausted repair budget is flagged") {
  Coloring c(6, 3);
  for (Vertex v = 0; v < 64; ++v) c.assign(v, weight(v) % 3, 1);
  RepairOutcome out = moser_tardos_repair(c, 0, 5);
  CHECK_FALSE(out.converged);
  CHECK(out.rounds == 0);
}

TEST_CASE("class verification finds engineered blockages") {
  // Layers 0, 3, 6 all in class 0: the bottom and top of the cube can
  // no longer see each other inside that class.
  Coloring c(6, 3);
  for (Vertex v = 0; v < 64; ++v) c.assign(v, weight(v) % 3, 1);
  auto bad = coloring_violation(c);
  REQUIRE(bad.has_value());
  CHECK(bad->color_id == 0);
  CHECK(bad->pair == PairWitness{0, 63});
  CHECK_FALSE(verify_coloring(c));
  CHECK_THROWS_AS(coloring_violation(Coloring(10, 3)), ScaleCapExceeded);
}

TEST_CASE("repaired random colorings verify end to end") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RepairOutcome out = moser_tardos_repair(layered_coloring(8, 3, seed),
                                            100'000, seed);
    CHECK(out.converged);
    CHECK(verify_coloring(out.coloring, 4));
  }
}

TEST_CASE("feasibility arithmetic at the published point") {
  LLLReport rep = lll_feasibility(8, 3, 4);
  CHECK(rep.p == Rational(1, 524288));  // 2^(1-20)
  CHECK(rep.g_bound == 320);
  CHECK(rep.satisfied);
  CHECK(rep.criterion > Rational(16, 10000));
  CHECK(rep.criterion < Rational(17, 10000));
}

TEST_CASE("feasibility shortcut for astronomically small p") {
  // C(24,12) coin flips per pattern: p underflows every fixed scale,
  // so the report short-circuits instead of materializing 2^-2704155.
  LLLReport rep = lll_feasibility(30, 12, 15);
  CHECK(rep.satisfied);
  CHECK(rep.p == 0);
}

TEST_CASE("feasibility fails where the bad events are too likely") {
  LLLReport rep = lll_feasibility(30, 1, 15);
  CHECK_FALSE(rep.satisfied);
  CHECK(rep.criterion >= Rational(1));
}

TEST_CASE("blocking triples certify obstruction") {
  // Everything one class: the three lowest layers already block.
  Coloring c(4, 3);
  auto triple = blocking_triple_witness(c, 0, 15);
  REQUIRE(triple.has_value());
  CHECK(triple->a == 0);
  CHECK(triple->b == 3);
  CHECK(triple->middle_layer == 1);
  CHECK(triple->color_id == 0);

  // Inside a subcube, the fixed part shifts the endpoints.
  auto shifted = blocking_triple_witness(c, bit(4), bit(1) | bit(2) | bit(3));
  REQUIRE(shifted.has_value());
  CHECK(shifted->a == bit(4));
  CHECK(shifted->b == (bit(4) | bit(1) | bit(2)));

  CHECK_THROWS_AS(blocking_triple_witness(c, 1, 3), std::invalid_argument);
}

TEST_CASE("no blocking triple in a two-layer subcube") {
  Coloring c(4, 3);
  // Subcube over one free coordinate has layers 0 and 1 only.
  CHECK_FALSE(blocking_triple_witness(c, 0, bit(1)).has_value());
}
