#include <charconv>
#include <set>
#include <sstream>

#include "lpack/error.hpp"
#include "lpack/graph.hpp"

namespace lpack {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, long long &out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    auto fields = split_ws(line);
    if (fields.empty() || fields.front().front() == '#')
      continue;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected two integers");

    long long a = 0, b = 0;
    if (!to_int(fields[0], a) || !to_int(fields[1], b))
      throw ParseError(line_no, "expected two integers");

    if (!have_header) {
      if (a < 0 || b < 0)
        throw ParseError(line_no, "bad header: negative count");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) >= m)
      throw ParseError(line_no, "more edges than declared in header");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(line_no, "vertex out of range");
    if (a == b)
      throw ParseError(line_no, "loop");
    Edge e{static_cast<Vertex>(std::min(a, b)),
           static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second)
      throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header)
    throw ParseError(line_no, "bad header: missing \"n m\" line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string serialize_graph(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

} // namespace lpack
