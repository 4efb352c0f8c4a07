#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "visicube/vertex_set.hpp"

namespace visicube {

// Vertex set text format: one bitstring per line, leftmost character =
// coordinate 1; '#' starts a comment, blank lines are skipped.  All
// bitstrings must share one length (the dimension); duplicates are an
// error.  Positions in ParseError are 1-based; column 0 blames the
// whole line.
VertexSet parse_vertex_set(std::istream& in, std::optional<int> expected_n = {});

// Same, from a file.  An empty file is only meaningful with an
// explicit dimension.
VertexSet read_vertex_file(const std::filesystem::path& file,
                           std::optional<int> expected_n = {});

std::string render_vertex_set(const VertexSet& s);

// Writes the render; a nonempty comment becomes a leading '#' line.
void write_vertex_file(const std::filesystem::path& file, const VertexSet& s,
                       const std::string& comment = "");

}  // namespace visicube
