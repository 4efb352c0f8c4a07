#include "visicube/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "visicube/errors.hpp"
#include "visicube/vertex.hpp"

namespace visicube {

VertexSet parse_vertex_set(std::istream& in, std::optional<int> expected_n) {
  std::optional<int> n = expected_n;
  if (n && (*n < 1 || *n > kMaxDimension)) {
    throw DimensionMismatch("expected dimension " + std::to_string(*n) +
                            " is out of range");
  }

  std::vector<Vertex> members;
  std::map<Vertex, int> first_seen;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }

    // Trim, but remember where the token started so column numbers
    // point into the original line.
    std::size_t begin = 0;
    while (begin < line.size() &&
           std::isspace(static_cast<unsigned char>(line[begin]))) {
      ++begin;
    }
    std::size_t end = line.size();
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(line[end - 1]))) {
      --end;
    }
    if (begin == end) continue;
    const std::string token = line.substr(begin, end - begin);

    if (!n) {
      if (token.size() > static_cast<std::size_t>(kMaxDimension)) {
        throw ParseError(line_no, 0,
                         "bitstring longer than " +
                             std::to_string(kMaxDimension) + " coordinates");
      }
      n = static_cast<int>(token.size());
    } else if (token.size() != static_cast<std::size_t>(*n)) {
      throw ParseError(line_no, 0,
                       "expected a " + std::to_string(*n) +
                           "-character bitstring, got " +
                           std::to_string(token.size()) + " characters");
    }

    Vertex v = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
      if (token[i] == '1') {
        v |= bit(static_cast<int>(i) + 1);
      } else if (token[i] != '0') {
        throw ParseError(line_no, static_cast<int>(begin + i) + 1,
                         std::string("invalid character '") + token[i] +
                             "' in bitstring");
      }
    }

    if (auto it = first_seen.find(v); it != first_seen.end()) {
      throw ParseError(line_no, 0,
                       "duplicate vertex, first seen on line " +
                           std::to_string(it->second));
    }
    first_seen.emplace(v, line_no);
    members.push_back(v);
  }

  if (!n) {
    throw ParseError(line_no == 0 ? 1 : line_no, 0,
                     "no vertices and no expected dimension given");
  }
  return VertexSet(*n, std::move(members));
}

VertexSet read_vertex_file(const std::filesystem::path& file,
                           std::optional<int> expected_n) {
  std::ifstream in(file);
  if (!in) {
    throw Error("cannot open vertex file " + file.string());
  }
  return parse_vertex_set(in, expected_n);
}

std::string render_vertex_set(const VertexSet& s) {
  std::string out;
  for (Vertex v : s.members()) {
    out += to_bitstring(v, s.dimension());
    out += '\n';
  }
  return out;
}

void write_vertex_file(const std::filesystem::path& file, const VertexSet& s,
                       const std::string& comment) {
  std::ofstream out(file);
  if (!out) {
    throw Error("cannot open vertex file " + file.string() + " for writing");
  }
  if (!comment.empty()) {
    out << "# " << comment << '\n';
  }
  out << render_vertex_set(s);
  if (!out) {
    throw Error("failed while writing vertex file " + file.string());
  }
}

}  // namespace visicube
