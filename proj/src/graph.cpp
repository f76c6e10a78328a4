#include "lpack/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lpack/error.hpp"

namespace lpack {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::BadParams: return "BadParams";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::TooSmall: return "TooSmall";
  case ErrorKind::TooManyEdges: return "TooManyEdges";
  case ErrorKind::SizeLimit: return "SizeLimit";
  case ErrorKind::NoTwoTrees: return "NoTwoTrees";
  case ErrorKind::NotATree: return "NotATree";
  case ErrorKind::NotBijective: return "NotBijective";
  case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
  case ErrorKind::Unknown: return "Unknown";
  case ErrorKind::ExtensionInvalid: return "ExtensionInvalid";
  case ErrorKind::DispatchFailure: return "DispatchFailure";
  case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "?";
}

Graph::Graph(std::size_t n, const std::vector<Edge> &edges) : adj_(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw Error(ErrorKind::BadParams, "vertex out of range");
    if (u == v)
      throw Error(ErrorKind::BadParams, "loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto &list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw Error(ErrorKind::BadParams, "duplicate edge");
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto &a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<Vertex>(u) < v)
        out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex> &keep) const {
  std::vector<Vertex> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (index[u] >= 0 && index[v] >= 0)
      es.emplace_back(std::min(index[u], index[v]),
                      std::max(index[u], index[v]));
  return Graph(keep.size(), es);
}

std::pair<Graph, std::vector<Vertex>>
Graph::remove_vertices(const std::vector<Vertex> &removed) const {
  std::vector<bool> gone(order(), false);
  for (Vertex v : removed)
    gone[v] = true;
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < order(); ++v)
    if (!gone[v])
      keep.push_back(static_cast<Vertex>(v));
  return {induced(keep), keep};
}

Graph Graph::with_edges(const std::vector<Edge> &extra) const {
  auto es = edges();
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(order(), es);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto es = edges();
  Edge target{std::min(u, v), std::max(u, v)};
  es.erase(std::remove(es.begin(), es.end(), target), es.end());
  return Graph(order(), es);
}

// --- structure ------------------------------------------------------------

const char *to_string(ComponentKind kind) {
  switch (kind) {
  case ComponentKind::Isolated: return "isolated";
  case ComponentKind::Tree: return "tree";
  case ComponentKind::Cycle: return "cycle";
  case ComponentKind::Other: return "other";
  }
  return "?";
}

ComponentKind classify_component(const Graph &g,
                                 const std::vector<Vertex> &vertices) {
  const std::size_t k = vertices.size();
  if (k == 1)
    return ComponentKind::Isolated;
  std::size_t degree_sum = 0;
  bool all_two = true;
  for (Vertex v : vertices) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v))
      if (std::binary_search(vertices.begin(), vertices.end(), w))
        ++d;
    degree_sum += d;
    all_two = all_two && d == 2;
  }
  const std::size_t e = degree_sum / 2;
  if (e + 1 == k)
    return ComponentKind::Tree;
  if (e == k && all_two)
    return ComponentKind::Cycle;
  return ComponentKind::Other;
}

std::vector<ComponentInfo> components(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ComponentInfo> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ComponentInfo c;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen[s] = true;
    std::size_t degree_sum = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edge_count = degree_sum / 2;
    c.kind = classify_component(g, c.vertices);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ComponentInfo &a, const ComponentInfo &b) {
                     if (a.order() != b.order())
                       return a.order() > b.order();
                     return a.min_vertex() < b.min_vertex();
                   });
  return out;
}

std::pair<ComponentInfo, ComponentInfo> largest_two_trees(const Graph &g) {
  std::vector<ComponentInfo> trees;
  for (auto &c : components(g))
    if (c.acyclic())
      trees.push_back(std::move(c));
  if (trees.size() < 2)
    throw Error(ErrorKind::NoTwoTrees,
                "fewer than two acyclic components (more than n-2 edges?)");
  return {std::move(trees[0]), std::move(trees[1])};
}

TreeAnatomy tree_anatomy(const Graph &g, const ComponentInfo &comp) {
  if (comp.kind != ComponentKind::Tree || comp.order() < 3)
    throw Error(ErrorKind::NotATree, "tree_anatomy needs a tree of order >= 3");
  const std::size_t n = g.order();
  TreeAnatomy t;
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  t.children.assign(n, {});
  for (Vertex v : comp.vertices)
    if (g.degree(v) == 1) {
      t.root = v;
      break;
    }
  std::queue<Vertex> q;
  q.push(t.root);
  t.depth[t.root] = 0;
  Vertex deepest = t.root;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (t.depth[v] > t.depth[deepest] ||
        (t.depth[v] == t.depth[deepest] && v < deepest))
      deepest = v;
    for (Vertex w : g.neighbors(v))
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[v] + 1;
        t.parent[w] = v;
        t.children[v].push_back(w);
        q.push(w);
      }
  }
  t.deep_leaf_parent = t.parent[deepest];
  return t;
}

Graph augment_to_deficiency_two(const Graph &g) {
  const std::size_t n = g.order();
  if (n < 3)
    throw Error(ErrorKind::TooSmall, "need at least 3 vertices");
  if (g.size() > n - 2)
    throw Error(ErrorKind::TooManyEdges,
                "too many edges: " + std::to_string(g.size()) + " > n-2 = " +
                    std::to_string(n - 2));
  std::size_t missing = n - 2 - g.size();
  if (missing == 0)
    return g;
  std::vector<Edge> extra;
  for (Vertex u = 0; u < static_cast<Vertex>(n) && missing > 0; ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n) && missing > 0; ++v)
      if (!g.has_edge(u, v)) {
        extra.emplace_back(u, v);
        --missing;
      }
  return g.with_edges(extra);
}

} // namespace lpack
