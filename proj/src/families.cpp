#include <algorithm>
#include <random>
#include <set>

#include "lpack/error.hpp"
#include "lpack/graph.hpp"

namespace lpack {
namespace {

void add_triangles(std::vector<Edge> &es, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    auto b = static_cast<Vertex>(3 * i);
    es.insert(es.end(), {{b, b + 1}, {b, b + 2}, {b + 1, b + 2}});
  }
}

void require(bool ok, const char *what) {
  if (!ok)
    throw Error(ErrorKind::BadParams, what);
}

} // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "kc3-2k1" || name == "kc3_2k1") return Family::Kc3TwoK1;
  if (name == "cm-2k1" || name == "cm_2k1") return Family::CmTwoK1;
  if (name == "tight") return Family::Tight;
  if (name == "random") return Family::Random;
  return std::nullopt;
}

const char *to_string(Family family) {
  switch (family) {
  case Family::Path: return "path";
  case Family::Cycle: return "cycle";
  case Family::Kc3TwoK1: return "kc3-2k1";
  case Family::CmTwoK1: return "cm-2k1";
  case Family::Tight: return "tight";
  case Family::Random: return "random";
  }
  return "?";
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i)
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, es);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i)
    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  es.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, es);
}

Graph kc3_2k1(std::size_t k) {
  require(k >= 1, "kc3-2k1 needs k >= 1");
  std::vector<Edge> es;
  add_triangles(es, k);
  return Graph(3 * k + 2, es);
}

Graph cm_2k1(std::size_t m) {
  require(m >= 3, "cm-2k1 needs m >= 3");
  auto c = cycle_graph(m);
  return Graph(m + 2, c.edges());
}

Graph tight_graph(std::size_t k) {
  require(k >= 1, "tight needs k >= 1");
  std::vector<Edge> es;
  add_triangles(es, k);
  auto b = static_cast<Vertex>(3 * k);
  es.emplace_back(b, b + 1);
  return Graph(3 * k + 3, es);
}

Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 1, "random needs n >= 1");
  require(m <= n * (n - 1) / 2, "random: m exceeds n(n-1)/2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::set<Edge> chosen;
  while (chosen.size() < m) {
    auto u = static_cast<Vertex>(pick(rng));
    auto v = static_cast<Vertex>(pick(rng));
    if (u == v)
      continue;
    chosen.emplace(std::min(u, v), std::max(u, v));
  }
  return Graph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

Graph family_graph(Family family, const FamilyParams &p) {
  switch (family) {
  case Family::Path: return path_graph(p.n);
  case Family::Cycle: return cycle_graph(p.n);
  case Family::Kc3TwoK1: return kc3_2k1(p.k);
  case Family::CmTwoK1: return cm_2k1(p.m);
  case Family::Tight: return tight_graph(p.k);
  case Family::Random: return random_graph(p.n, p.m, p.seed);
  }
  throw Error(ErrorKind::BadParams, "unknown family");
}

// --- enumeration ----------------------------------------------------------

GraphEnumerator::GraphEnumerator(std::size_t n, std::size_t m) : n_(n) {
  if (n > kEnumerationLimit)
    throw Error(ErrorKind::SizeLimit, "enumeration limited to n <= " +
                                          std::to_string(kEnumerationLimit));
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      pairs_.emplace_back(u, v);
  if (m > pairs_.size()) {
    done_ = true;
    return;
  }
  choice_.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    choice_[i] = i;
}

std::optional<Graph> GraphEnumerator::next() {
  if (done_)
    return std::nullopt;
  std::vector<Edge> es;
  es.reserve(choice_.size());
  for (auto i : choice_)
    es.push_back(pairs_[i]);
  Graph g(n_, es);

  // advance to the next combination in lexicographic order
  const std::size_t m = choice_.size(), total = pairs_.size();
  std::size_t i = m;
  while (i > 0 && choice_[i - 1] == total - m + (i - 1))
    --i;
  if (i == 0) {
    done_ = true;
  } else {
    ++choice_[i - 1];
    for (std::size_t j = i; j < m; ++j)
      choice_[j] = choice_[j - 1] + 1;
  }
  return g;
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t m) {
  std::vector<Graph> out;
  GraphEnumerator e(n, m);
  while (auto g = e.next())
    out.push_back(std::move(*g));
  return out;
}

} // namespace lpack
