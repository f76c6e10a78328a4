#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpack {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction; the constructor rejects loops, duplicate
/// edges and out-of-range endpoints.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, const std::vector<Edge> &edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep` (in the given order); vertex i of the result
  /// is keep[i].
  Graph induced(const std::vector<Vertex> &keep) const;

  /// Graph minus a vertex set, plus the map from new to old indices.
  std::pair<Graph, std::vector<Vertex>>
  remove_vertices(const std::vector<Vertex> &removed) const;

  Graph with_edges(const std::vector<Edge> &extra) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.adj_ == b.adj_;
  }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

enum class ComponentKind { Isolated, Tree, Cycle, Other };

const char *to_string(ComponentKind kind);

struct ComponentInfo {
  std::vector<Vertex> vertices; // sorted
  std::size_t edge_count = 0;
  ComponentKind kind = ComponentKind::Isolated;

  std::size_t order() const noexcept { return vertices.size(); }
  bool acyclic() const noexcept {
    return kind == ComponentKind::Isolated || kind == ComponentKind::Tree;
  }
  Vertex min_vertex() const { return vertices.front(); }
};

/// Classification of a connected vertex set from its induced edges.
ComponentKind classify_component(const Graph &g,
                                 const std::vector<Vertex> &vertices);

/// Connected components ordered by (order desc, min vertex asc).
std::vector<ComponentInfo> components(const Graph &g);

/// The two largest acyclic components, |first| >= |second|.
/// Throws NoTwoTrees when fewer than two exist.
std::pair<ComponentInfo, ComponentInfo> largest_two_trees(const Graph &g);

struct TreeAnatomy {
  Vertex root = -1;
  std::vector<Vertex> parent; // indexed by vertex; -1 for root / outside
  std::vector<int> depth;     // -1 outside the tree
  std::vector<std::vector<Vertex>> children;
  Vertex deep_leaf_parent = -1;
};

/// Roots a tree component of order >= 3 at its minimum-index degree-1
/// vertex and locates the parent of a deepest end vertex.
TreeAnatomy tree_anatomy(const Graph &g, const ComponentInfo &comp);

/// Adds non-edges in lexicographic order until the graph has n-2 edges.
Graph augment_to_deficiency_two(const Graph &g);

inline constexpr std::size_t kDefaultMisLimit = 64;

/// Lexicographically smallest maximum independent set (sorted).
std::vector<Vertex> max_independent_set(const Graph &g,
                                        std::size_t limit = kDefaultMisLimit);

/// Independence number only.
std::size_t independence_number(const Graph &g,
                                std::size_t limit = kDefaultMisLimit);

// --- families -------------------------------------------------------------

enum class Family { Path, Cycle, Kc3TwoK1, CmTwoK1, Tight, Random };

std::optional<Family> parse_family(std::string_view name);
const char *to_string(Family family);

struct FamilyParams {
  std::size_t n = 0;     // path, cycle, random
  std::size_t k = 0;     // kc3_2k1, tight
  std::size_t m = 0;     // cm_2k1 cycle length, random edge count
  std::uint64_t seed = 0;
};

Graph family_graph(Family family, const FamilyParams &params);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// k disjoint triangles followed by two isolated vertices.
Graph kc3_2k1(std::size_t k);
/// C_m followed by two isolated vertices.
Graph cm_2k1(std::size_t m);
/// k disjoint triangles, then K2, then K1.
Graph tight_graph(std::size_t k);
/// Uniform simple graph with exactly m edges, reproducible per seed.
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

// --- enumeration ----------------------------------------------------------

inline constexpr std::size_t kEnumerationLimit = 8;

/// Streams every labeled graph on n vertices with m edges, in lexicographic
/// order of the sorted edge list. Single consumer.
class GraphEnumerator {
public:
  GraphEnumerator(std::size_t n, std::size_t m);

  /// Next graph, or nullopt once exhausted.
  std::optional<Graph> next();

private:
  std::size_t n_;
  std::vector<Edge> pairs_;
  std::vector<std::size_t> choice_;
  bool done_ = false;
};

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t m);

// --- edge-list I/O --------------------------------------------------------

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph &g);

} // namespace lpack
