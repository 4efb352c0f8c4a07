#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "visicube/errors.hpp"
#include "visicube/io.hpp"
#include "visicube/vertex.hpp"

using namespace visicube;

namespace {

VertexSet parse_text(const std::string& text, std::optional<int> n = {}) {
  std::istringstream in(text);
  return parse_vertex_set(in, n);
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const char* name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::remove(path.string().c_str()); }
};

}  // namespace

TEST_CASE("basic parse") {
  VertexSet s = parse_text("000\n111\n");
  CHECK(s.dimension() == 3);
  CHECK(s.members() == std::vector<Vertex>{0, 7});
}

TEST_CASE("comments, blanks, and padding are tolerated") {
  VertexSet s = parse_text("# heading\n\n  010  # inline note\n100\n\n");
  CHECK(s.dimension() == 3);
  CHECK(s.members() == std::vector<Vertex>{1, 2});
}

TEST_CASE("bad characters are located precisely") {
  try {
    parse_text("0101\n01x1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("leading spaces do not shift the reported column") {
  try {
    parse_text("  01x1\n", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("inconsistent lengths are rejected") {
  try {
    parse_text("010\n0100\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 0);
  }
}

TEST_CASE("duplicates name the earlier line") {
  try {
    parse_text("010\n# gap\n010\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("the expected dimension is enforced") {
  CHECK(parse_text("0101\n", 4).dimension() == 4);
  CHECK_THROWS_AS(parse_text("0101\n", 3), ParseError);
}

TEST_CASE("empty input needs an explicit dimension") {
  CHECK_THROWS_AS(parse_text(""), ParseError);
  CHECK_THROWS_AS(parse_text("# only a comment\n"), ParseError);
  VertexSet s = parse_text("", 5);
  CHECK(s.dimension() == 5);
  CHECK(s.empty());
}

TEST_CASE("render and parse round trip") {
  VertexSet s(4, {0, 5, 9, 15});
  CHECK(parse_text(render_vertex_set(s)) == s);

  VertexSet empty(6);
  CHECK(parse_text(render_vertex_set(empty), 6) == empty);
}

TEST_CASE("file round trip with comment header") {
  TempFile tmp("visicube_io_test.txt");
  VertexSet s(5, {1, 3, 31});
  write_vertex_file(tmp.path, s, "test corpus");
  VertexSet back = read_vertex_file(tmp.path);
  CHECK(back == s);

  std::ifstream in(tmp.path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "# test corpus");
}

TEST_CASE("missing files raise the library error") {
  CHECK_THROWS_AS(read_vertex_file("/nonexistent/visicube.txt"), Error);
}
