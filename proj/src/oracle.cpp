#include "lpack/oracle.hpp"

#include <cstdlib>
#include <string>

#include "lpack/error.hpp"

namespace lpack {
namespace {

void check_limit(const Graph &g, std::size_t limit, const char *what) {
  if (g.order() > limit)
    throw Error(ErrorKind::SizeLimit, std::string(what) + " limited to n <= " +
                                          std::to_string(limit));
}

std::vector<std::uint8_t> adjacency_matrix(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> a(n * n, 0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1;
    a[static_cast<std::size_t>(v) * n + u] = 1;
  }
  return a;
}

// Lexicographic permutation scan. Images are assigned to vertices 0, 1, ...
// in order; a prefix is abandoned as soon as an edge between two assigned
// vertices lands on an edge. Partial maps are tracked as chains so that the
// number of closed cycles is known at every node.
class PermutationScan {
public:
  PermutationScan(const Graph &g, bool first_only)
      : g_(g), n_(g.order()), adj_(adjacency_matrix(g)), first_only_(first_only),
        img_(n_, -1), used_(n_, false), start_of_(n_), end_of_(n_) {
    for (std::size_t v = 0; v < n_; ++v)
      start_of_[v] = end_of_[v] = static_cast<Vertex>(v);
  }

  OracleResult run() {
    dfs(0, 0);
    OracleResult r;
    r.explored = explored_;
    if (found_) {
      r.value = best_;
      r.witness = Permutation(best_img_);
    }
    return r;
  }

private:
  bool edge(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  void dfs(std::size_t v, std::size_t closed) {
    if (first_only_ && found_)
      return;
    if (v == n_) {
      ++explored_;
      if (!found_ || closed > best_) {
        found_ = true;
        best_ = closed;
        best_img_ = img_;
      }
      return;
    }
    // every unfinished cycle still contains an unassigned vertex
    if (found_ && closed + (n_ - v) <= best_)
      return;
    const auto vv = static_cast<Vertex>(v);
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w])
        continue;
      const auto ww = static_cast<Vertex>(w);
      bool ok = true;
      for (Vertex u : g_.neighbors(vv)) {
        if (u > vv)
          break;
        if (edge(img_[u], ww)) {
          ok = false;
          break;
        }
      }
      if (!ok)
        continue;
      img_[v] = ww;
      used_[w] = true;
      // v is the end of its chain, w the start of its chain
      const Vertex s = start_of_[v], e = end_of_[w];
      if (s == ww) {
        dfs(v + 1, closed + 1);
      } else {
        start_of_[e] = s;
        end_of_[s] = e;
        dfs(v + 1, closed);
        start_of_[e] = ww;
        end_of_[s] = vv;
      }
      used_[w] = false;
      img_[v] = -1;
      if (first_only_ && found_)
        return;
    }
  }

  const Graph &g_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  bool first_only_;
  std::vector<Vertex> img_;
  std::vector<bool> used_;
  std::vector<Vertex> start_of_, end_of_;
  std::vector<Vertex> best_img_;
  std::size_t best_ = 0;
  bool found_ = false;
  std::uint64_t explored_ = 0;
};

} // namespace

std::size_t oracle_limit_from_env() {
  if (const char *s = std::getenv("LABELED_PACK_ORACLE_LIMIT")) {
    char *end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultOracleLimit;
}

OracleResult exact_lambda2(const Graph &g, std::size_t limit) {
  check_limit(g, limit, "exact oracle");
  return PermutationScan(g, false).run();
}

bool exists_embedding(const Graph &g, std::size_t limit) {
  check_limit(g, limit, "embedding existence check");
  return PermutationScan(g, true).run().value.has_value();
}

std::optional<Permutation> find_good_permutation(const Graph &g,
                                                 std::size_t limit) {
  check_limit(g, limit, "involution search");
  InvolutionSearch search(g, std::vector<Vertex>(g.order(), -1));
  return search.run(2 * g.order() / 3);
}

// --- involution search ----------------------------------------------------

InvolutionSearch::InvolutionSearch(const Graph &g, std::vector<Vertex> pinned)
    : g_(g), n_(g.order()), adj_(adjacency_matrix(g)), img_(std::move(pinned)) {
  for (std::size_t v = 0; v < n_; ++v)
    if (img_[v] < 0)
      free_.push_back(static_cast<Vertex>(v));
}

bool InvolutionSearch::consistent(Vertex v) const {
  const Vertex a = img_[v];
  for (Vertex u : g_.neighbors(v)) {
    const Vertex b = img_[u];
    if (b >= 0 && adj_[static_cast<std::size_t>(a) * n_ + b])
      return false;
  }
  return true;
}

std::optional<Permutation> InvolutionSearch::run(std::size_t min_cycles) {
  min_ = min_cycles;
  found_ = false;
  best_ = 0;
  explored_ = 0;
  dfs(0, 0, free_.size());
  if (!found_)
    return std::nullopt;
  return Permutation(best_img_);
}

void InvolutionSearch::dfs(std::size_t pos, std::size_t cycles,
                           std::size_t remaining) {
  while (pos < free_.size() && img_[free_[pos]] >= 0)
    ++pos;
  if (pos == free_.size()) {
    ++explored_;
    if (found_ ? cycles > best_ : cycles >= min_) {
      found_ = true;
      best_ = cycles;
      best_img_ = img_;
    }
    return;
  }
  // each remaining free vertex adds at most one cycle
  if (found_ ? cycles + remaining <= best_ : cycles + remaining < min_)
    return;

  const Vertex v = free_[pos];
  img_[v] = v;
  if (consistent(v))
    dfs(pos + 1, cycles + 1, remaining - 1);
  for (std::size_t j = pos + 1; j < free_.size(); ++j) {
    const Vertex w = free_[j];
    if (img_[w] >= 0)
      continue;
    img_[v] = w;
    img_[w] = v;
    if (consistent(v) && consistent(w))
      dfs(pos + 1, cycles + 1, remaining - 2);
    img_[w] = -1;
  }
  img_[v] = -1;
}

} // namespace lpack
