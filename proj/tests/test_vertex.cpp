#include <doctest.h>

#include <vector>

#include "visicube/errors.hpp"
#include "visicube/vertex.hpp"

using namespace visicube;

TEST_CASE("weights and distances") {
  CHECK(weight(0) == 0);
  CHECK(weight(0b1011) == 3);
  CHECK(dist(0, 0) == 0);
  CHECK(dist(0b101, 0b011) == 2);
  CHECK(dist(0, (Vertex{1} << 62) - 1) == 62);
}

TEST_CASE("coordinate bits are 1-based") {
  CHECK(bit(1) == 1);
  CHECK(bit(3) == 4);
  CHECK((bit(1) | bit(2)) == 3);
}

TEST_CASE("elements_of lists 1-based coordinates ascending") {
  CHECK(elements_of(0) == std::vector<int>{});
  CHECK(elements_of(0b101) == std::vector<int>{1, 3});
  CHECK(elements_of(bit(62)) == std::vector<int>{62});
}

TEST_CASE("binomial is exact and guarded") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(63, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("layer enumeration is ascending numeric order") {
  CHECK(layer_members(4, 2) == std::vector<Vertex>{3, 5, 6, 9, 10, 12});
  CHECK(layer_members(3, 0) == std::vector<Vertex>{0});
  CHECK(layer_members(3, 3) == std::vector<Vertex>{7});
  CHECK(layer_members(10, 4).size() == binomial(10, 4));
}

TEST_CASE("next_same_weight walks the layer") {
  CHECK(next_same_weight(0b011) == 0b101);
  CHECK(next_same_weight(0b101) == 0b110);
  Vertex v = 0b111;
  CHECK(next_same_weight(v) == 0b1011);
}

TEST_CASE("expand_bits scatters into the mask") {
  // mask {1,3,5}: compact bit 0 -> coordinate 1, bit 1 -> 3, bit 2 -> 5
  const Vertex mask = 0b10101;
  CHECK(expand_bits(0b000, mask) == 0);
  CHECK(expand_bits(0b001, mask) == 0b00001);
  CHECK(expand_bits(0b010, mask) == 0b00100);
  CHECK(expand_bits(0b111, mask) == mask);
}

TEST_CASE("submasks_of_size comes out ascending") {
  std::vector<Vertex> subs = submasks_of_size(0b111, 2);
  CHECK(subs == std::vector<Vertex>{0b011, 0b101, 0b110});
  CHECK(submasks_of_size(0b110100, 2) ==
        std::vector<Vertex>{0b010100, 0b100100, 0b110000});
  CHECK(submasks_of_size(0b101, 0) == std::vector<Vertex>{0});
  CHECK(submasks_of_size(0b101, 3) == std::vector<Vertex>{});
}

TEST_CASE("bitstring rendering puts coordinate 1 leftmost") {
  CHECK(to_bitstring(0, 3) == "000");
  CHECK(to_bitstring(0b101, 4) == "1010");
  CHECK(to_bitstring(bit(4), 4) == "0001");
}

TEST_CASE("hypercube validity") {
  Hypercube q(5);
  CHECK(q.dimension() == 5);
  CHECK(q.vertex_count() == 32);
  CHECK(q.all_ones() == 0b11111);
  CHECK(q.valid(31));
  CHECK_FALSE(q.valid(32));
  CHECK_THROWS_AS(q.require_valid(32), DimensionMismatch);
  CHECK_THROWS_AS(Hypercube(0), std::invalid_argument);
  CHECK_THROWS_AS(Hypercube(63), std::invalid_argument);
}
