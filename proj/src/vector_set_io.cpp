#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "flagbound/arrangement.hpp"

namespace flagbound {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

VectorSet read_vector_set(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::invalid_argument("vector-set file: missing 'T d' header");
  std::istringstream header(line);
  long long t_count = 0;
  long long d = 0;
  std::string extra;
  if (!(header >> t_count >> d) || (header >> extra) || t_count < 1 || d < 1) {
    throw std::invalid_argument("vector-set file: malformed header '" + line + "'");
  }

  std::vector<IntegerVector> vectors;
  vectors.reserve(static_cast<std::size_t>(t_count));
  for (long long i = 0; i < t_count; ++i) {
    if (!next_content_line(in, line)) {
      throw std::invalid_argument("vector-set file: expected " + std::to_string(t_count) + " vectors, got " +
                                  std::to_string(i));
    }
    std::istringstream row(line);
    std::vector<Integer> coords;
    std::string token;
    while (row >> token) {
      Integer x;
      if (x.set_str(token, 10) != 0) throw std::invalid_argument("vector-set file: bad integer '" + token + "'");
      coords.push_back(std::move(x));
    }
    if (coords.size() != static_cast<std::size_t>(d)) {
      throw std::invalid_argument("vector-set file: line for vector " + std::to_string(i + 1) + " has " +
                                  std::to_string(coords.size()) + " entries, expected " + std::to_string(d));
    }
    vectors.emplace_back(std::move(coords));
  }
  if (next_content_line(in, line)) throw std::invalid_argument("vector-set file: trailing content after vectors");
  return VectorSet(std::move(vectors));
}

void write_vector_set(std::ostream& out, const VectorSet& h) {
  out << h.size() << ' ' << h.ambient_dim() << '\n';
  for (const auto& v : h.vectors()) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c) out << ' ';
      out << v[c];
    }
    out << '\n';
  }
}

}  // namespace flagbound
