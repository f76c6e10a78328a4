#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpack/graph.hpp"
#include "lpack/permutation.hpp"

namespace lpack {

inline constexpr std::size_t kDefaultOracleLimit = 9;
inline constexpr std::size_t kDefaultInvolutionLimit = 16;

/// Oracle cap from LABELED_PACK_ORACLE_LIMIT, else the default.
std::size_t oracle_limit_from_env();

struct OracleResult {
  /// Maximum cycle count over all embeddings; empty when none exists.
  std::optional<std::size_t> value;
  /// Lexicographically smallest image table attaining `value`.
  std::optional<Permutation> witness;
  /// Complete embeddings visited by the scan.
  std::uint64_t explored = 0;
};

/// Exact labeled packing number of two copies by scanning permutations with
/// prefix pruning.
OracleResult exact_lambda2(const Graph &g,
                           std::size_t limit = kDefaultOracleLimit);

bool exists_embedding(const Graph &g, std::size_t limit = kDefaultOracleLimit);

/// Involution embedding with the most cycles (lexicographically smallest
/// among ties), provided that maximum reaches floor(2n/3).
std::optional<Permutation>
find_good_permutation(const Graph &g,
                      std::size_t limit = kDefaultInvolutionLimit);

/// Involution search over a subset of vertices with the rest of the image
/// pinned. Used for whole-graph searches and for local repair of partial
/// constructions.
class InvolutionSearch {
public:
  /// `pinned[v]` is the image of v, or -1 when v is free. Pinned entries must
  /// form an involution among themselves.
  InvolutionSearch(const Graph &g, std::vector<Vertex> pinned);

  /// Maximizes the number of cycles formed by free vertices, subject to the
  /// whole map being an embedding. Returns the full image table of the
  /// lexicographically first maximizer whose free cycle count reaches
  /// `min_cycles`, or nullopt.
  std::optional<Permutation> run(std::size_t min_cycles);

  std::uint64_t explored() const noexcept { return explored_; }
  std::size_t best_cycles() const noexcept { return best_; }

private:
  bool consistent(Vertex v) const;
  void dfs(std::size_t pos, std::size_t cycles, std::size_t remaining);

  const Graph &g_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<Vertex> img_;
  std::vector<Vertex> free_;
  std::vector<Vertex> best_img_;
  std::size_t best_ = 0;
  std::size_t min_ = 0;
  bool found_ = false;
  std::uint64_t explored_ = 0;
};

} // namespace lpack
