#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. They share nothing with the code under test beyond Graph's
// adjacency queries.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "lpack/graph.hpp"

namespace brute {

using lpack::Graph;
using lpack::Vertex;

inline std::size_t cycles_of(const std::vector<Vertex> &img) {
  std::vector<bool> seen(img.size(), false);
  std::size_t c = 0;
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s])
      continue;
    ++c;
    for (std::size_t v = s; !seen[v]; v = img[v])
      seen[v] = true;
  }
  return c;
}

inline bool involution(const std::vector<Vertex> &img) {
  for (std::size_t v = 0; v < img.size(); ++v)
    if (static_cast<std::size_t>(img[img[v]]) != v)
      return false;
  return true;
}

inline bool embeds(const Graph &g, const std::vector<Vertex> &img) {
  for (auto [u, v] : g.edges())
    if (g.has_edge(img[u], img[v]))
      return false;
  return true;
}

/// Maximum cycle count over all embeddings, by scanning all n! permutations.
inline std::optional<std::size_t> lambda2(const Graph &g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::optional<std::size_t> best;
  do {
    if (embeds(g, p)) {
      const std::size_t c = cycles_of(p);
      if (!best || c > *best)
        best = c;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Independence number by subset enumeration (n <= 20).
inline std::size_t alpha(const Graph &g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best)
      continue;
    bool ok = true;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) {
        ok = false;
        break;
      }
    if (ok)
      best = size;
  }
  return best;
}

inline std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64 &rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace brute
