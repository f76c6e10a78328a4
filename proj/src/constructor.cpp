// Inductive construction of good permutations for graphs with at most n-2
// edges. Each level picks a case from the component structure, deletes 3 or
// 6 vertices, solves the rest recursively and extends the sub-permutation by
// a fixed table. Every extension is verified; a failing one is replaced by a
// local involution search around the deleted vertices.

#include "lpack/constructor.hpp"

#include <algorithm>
#include <numeric>

#include "lpack/bounds.hpp"
#include "lpack/error.hpp"

namespace lpack {
namespace {

constexpr const char *kCaseNames[] = {
    "BASE", "C1_1", "C1_2",  "C2_1",  "C2_2",        "C2_2_ALT",
    "C3",   "C4_1", "C4_2a", "C4_2b", "C4_2c_SMALL", "C4_2c_BIG"};

constexpr const char *kRoleNames[] = {"x",  "y",  "z",  "t",  "l",  "x0", "x1",
                                      "x2", "x3", "x4", "x5", "x6", "x7", "x8",
                                      "y0", "y1", "l1", "l2", "l3"};

[[noreturn]] void dispatch_failure(const std::string &what) {
  throw Error(ErrorKind::DispatchFailure, "dispatch: " + what);
}

Vertex min_leaf(const Graph &g, const ComponentInfo &c) {
  for (Vertex v : c.vertices)
    if (g.degree(v) == 1)
      return v;
  dispatch_failure("tree component without a leaf");
}

Vertex other_neighbor(const Graph &g, Vertex v, Vertex not_this) {
  for (Vertex w : g.neighbors(v))
    if (w != not_this)
      return w;
  dispatch_failure("missing neighbour");
}

std::size_t involution_cycles(const std::vector<Vertex> &s) {
  std::size_t fixed = 0, moved = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s[v] < 0)
      continue;
    if (s[v] == static_cast<Vertex>(v))
      ++fixed;
    else
      ++moved;
  }
  return fixed + moved / 2;
}

std::vector<Vertex> walk_cycle(const Graph &g, const ComponentInfo &c) {
  std::vector<Vertex> order{c.min_vertex()};
  Vertex prev = -1, cur = c.min_vertex();
  Vertex next = g.neighbors(cur).front();
  while (next != c.min_vertex()) {
    order.push_back(next);
    prev = cur;
    cur = next;
    next = other_neighbor(g, cur, prev);
  }
  return order;
}

void dispatch_case_four(const Graph &g, const std::vector<ComponentInfo> &comps,
                        CaseDispatch &d) {
  std::vector<Vertex> isolated;
  std::vector<const ComponentInfo *> cycles;
  for (const auto &c : comps) {
    if (c.kind == ComponentKind::Isolated)
      isolated.push_back(c.min_vertex());
    else if (c.kind == ComponentKind::Cycle)
      cycles.push_back(&c);
  }
  std::sort(isolated.begin(), isolated.end());
  if (isolated.size() < 2)
    dispatch_failure("case 4 needs two isolated vertices");

  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) >= 3) {
      d.id = CaseId::C4_1;
      d.roles = {{Role::x, static_cast<Vertex>(v)},
                 {Role::y, isolated[0]},
                 {Role::z, isolated[1]}};
      d.removed = {static_cast<Vertex>(v), isolated[0], isolated[1]};
      return;
    }

  // maximum degree <= 2 and no tree of order >= 2: cycles plus 2K1
  if (isolated.size() != 2 || cycles.size() + 2 != comps.size())
    dispatch_failure("case 4.2 expects cycles plus exactly two isolated vertices");
  const Vertex z = isolated[0], t = isolated[1];

  const bool all_triangles = std::all_of(
      cycles.begin(), cycles.end(), [](auto *c) { return c->order() == 3; });
  if (all_triangles) {
    d.id = CaseId::C4_2a;
    d.roles = {{Role::z, z}, {Role::t, t}};
    return;
  }

  if (cycles.size() >= 2) {
    // components are ordered by size, so the first cycle is a longest one
    const ComponentInfo &h = *cycles[0], &q = *cycles[1];
    const Vertex x2 = h.min_vertex();
    const Vertex x1 = g.neighbors(x2)[0], x3 = g.neighbors(x2)[1];
    d.id = CaseId::C4_2b;
    d.roles = {{Role::x1, x1},
               {Role::x2, x2},
               {Role::x3, x3},
               {Role::x4, q.min_vertex()},
               {Role::x, other_neighbor(g, x1, x2)},
               {Role::y, other_neighbor(g, x3, x2)},
               {Role::z, z},
               {Role::t, t}};
    d.removed = {x1, x2, x3, q.min_vertex(), z, t};
    return;
  }

  const ComponentInfo &c = *cycles[0];
  d.roles = {{Role::z, z}, {Role::t, t}};
  if (c.order() < 8) {
    d.id = CaseId::C4_2c_SMALL;
    return;
  }
  d.id = CaseId::C4_2c_BIG;
  const auto walk = walk_cycle(g, c);
  const Role path[] = {Role::x1, Role::x2, Role::x3, Role::x4,
                       Role::x5, Role::x6, Role::x7, Role::x8};
  for (std::size_t i = 0; i < 8; ++i)
    d.roles[path[i]] = walk[i];
  d.removed = {walk[1], walk[2], walk[5], walk[6], z, t};
}

PartialMap pairs(std::initializer_list<std::pair<Vertex, Vertex>> swaps) {
  PartialMap m;
  for (auto [a, b] : swaps) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

bool embeds_with(const Graph &g, std::vector<Vertex> img, const PartialMap &m) {
  for (auto [v, to] : m)
    img[v] = to;
  for (auto [u, v] : g.edges())
    if (g.has_edge(img[u], img[v]))
      return false;
  return true;
}

// Layout maps from the canonical fixtures to the actual vertices.
std::vector<Vertex> triangles_layout(const Graph &g) {
  std::vector<Vertex> to;
  for (const auto &c : components(g))
    to.insert(to.end(), c.vertices.begin(), c.vertices.end());
  return to;
}

std::vector<Vertex> cycle_layout(const Graph &g, const CaseDispatch &d) {
  std::vector<Vertex> to;
  for (const auto &c : components(g))
    if (c.kind == ComponentKind::Cycle)
      to = walk_cycle(g, c);
  to.push_back(d[Role::z]);
  to.push_back(d[Role::t]);
  return to;
}

class Builder {
public:
  Builder(ConstructionTrace &trace, const ConstructOptions &opts)
      : trace_(trace), opts_(opts) {}

  Permutation solve(const Graph &input, const std::vector<Vertex> &to_orig);

private:
  Permutation solve_direct(const Graph &g, const CaseDispatch &d,
                           TraceStep &step);
  Permutation repair(const Graph &g, const std::vector<Vertex> &s,
                     const std::vector<Vertex> &removed);
  std::optional<Permutation> local_repair(const Graph &g,
                                          const std::vector<Vertex> &s,
                                          const std::vector<Vertex> &removed);

  ConstructionTrace &trace_;
  const ConstructOptions &opts_;
};

Permutation Builder::solve(const Graph &input,
                           const std::vector<Vertex> &to_orig) {
  const Graph g = augment_to_deficiency_two(input);
  const std::size_t n = g.order();
  const std::size_t slot = trace_.steps.size();
  trace_.steps.emplace_back();
  TraceStep step;
  step.order = n;

  auto record = [&](const Permutation &p, const std::vector<Vertex> &s) {
    for (std::size_t v = 0; v < n; ++v) {
      const Vertex img = p(static_cast<Vertex>(v));
      if (s[v] != img)
        step.extension.emplace_back(to_orig[v], to_orig[img]);
    }
    step.cycles_added = static_cast<std::int64_t>(cycle_count(p)) -
                        static_cast<std::int64_t>(involution_cycles(s));
    trace_.steps[slot] = step;
  };
  const std::vector<Vertex> nothing(n, -1);

  if (n <= 5) {
    step.id = CaseId::BASE;
    step.removed = to_orig;
    auto p = find_good_permutation(g);
    if (!p)
      throw Error(ErrorKind::VerificationFailure,
                  "no good permutation for a base graph");
    record(*p, nothing);
    return *p;
  }

  const CaseDispatch d = dispatch_case(g);
  step.id = d.id;

  if (d.removed.empty()) {
    step.removed = to_orig;
    Permutation p = solve_direct(g, d, step);
    record(p, nothing);
    return p;
  }

  for (Vertex v : d.removed)
    step.removed.push_back(to_orig[v]);
  auto [sub, keep] = g.remove_vertices(d.removed);
  if (sub.order() + d.removed.size() != n || sub.order() < 3 ||
      sub.size() + 2 > sub.order())
    dispatch_failure("recursion would leave n >= 3, m <= n-2");
  std::vector<Vertex> sub_orig(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    sub_orig[i] = to_orig[keep[i]];

  const Permutation sub_perm = solve(sub, sub_orig);

  std::vector<Vertex> s(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i)
    s[keep[i]] = keep[sub_perm(static_cast<Vertex>(i))];

  Permutation p;
  try {
    p = apply_extension(g, d, s);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::ExtensionInvalid)
      throw;
    step.fallback = true;
    p = repair(g, s, d.removed);
  }
  record(p, s);
  return p;
}

Permutation Builder::solve_direct(const Graph &g, const CaseDispatch &d,
                                  TraceStep &step) {
  Permutation p;
  if (d.id == CaseId::C4_2a) {
    const std::size_t k = (g.order() - 2) / 3;
    p = relabel(lemma_kc3_permutation(k), triangles_layout(g));
  } else {
    const std::size_t m = g.order() - 2;
    p = relabel(cycle_fixture(m), cycle_layout(g, d));
  }
  if (is_good(g, p))
    return p;
  step.fallback = true;
  return repair(g, std::vector<Vertex>(g.order(), -1), {});
}

Permutation Builder::repair(const Graph &g, const std::vector<Vertex> &s,
                            const std::vector<Vertex> &removed) {
  if (!removed.empty())
    if (auto p = local_repair(g, s, removed))
      return *p;
  if (g.order() <= opts_.fallback_limit)
    if (auto p = fallback_search(g, opts_.fallback_limit))
      return *p;
  throw Error(ErrorKind::VerificationFailure,
              "extension failed and no repair was found at order " +
                  std::to_string(g.order()));
}

// Re-solves a growing window around the deleted vertices with everything
// outside the window pinned to the sub-permutation. Windows are closed under
// the sub-permutation so the pinned part stays an involution.
std::optional<Permutation>
Builder::local_repair(const Graph &g, const std::vector<Vertex> &s,
                      const std::vector<Vertex> &removed) {
  const std::size_t n = g.order();
  const std::size_t target = 2 * n / 3;
  std::vector<bool> in(n, false);
  std::vector<Vertex> window;
  auto add = [&](Vertex v) {
    if (in[v])
      return;
    in[v] = true;
    window.push_back(v);
    if (s[v] >= 0 && !in[s[v]]) {
      in[s[v]] = true;
      window.push_back(s[v]);
    }
  };
  for (Vertex v : removed)
    add(v);

  auto attempt = [&]() -> std::optional<Permutation> {
    std::vector<Vertex> pinned = s;
    for (Vertex v : window)
      pinned[v] = -1;
    const std::size_t outside = involution_cycles(pinned);
    InvolutionSearch search(g, pinned);
    return search.run(target > outside ? target - outside : 0);
  };

  std::size_t done = 0;
  while (window.size() <= opts_.repair_window) {
    if (auto p = attempt())
      return p;
    // breadth-first growth, one layer at a time
    const std::size_t layer_end = window.size();
    const std::size_t before = window.size();
    for (std::size_t i = done; i < layer_end; ++i)
      for (Vertex u : g.neighbors(window[i])) {
        if (in[u])
          continue;
        const std::size_t extra = (s[u] >= 0 && s[u] != u && !in[s[u]]) ? 2 : 1;
        if (window.size() + extra > opts_.repair_window)
          continue;
        add(u);
      }
    done = layer_end;
    if (window.size() == before)
      break;
  }
  return std::nullopt;
}

} // namespace

const char *to_string(CaseId id) { return kCaseNames[static_cast<int>(id)]; }

std::optional<CaseId> parse_case_id(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kCaseNames)); ++i)
    if (name == kCaseNames[i])
      return static_cast<CaseId>(i);
  return std::nullopt;
}

const char *to_string(Role role) { return kRoleNames[static_cast<int>(role)]; }

std::size_t ConstructionTrace::fallback_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(),
                    [](const TraceStep &s) { return s.fallback; }));
}

CaseDispatch dispatch_case(const Graph &g) {
  const std::size_t n = g.order();
  if (n < 6 || g.size() + 2 != n)
    dispatch_failure("needs n >= 6 and exactly n-2 edges");

  const auto comps = components(g);
  const auto [tree, second] = largest_two_trees(g);
  CaseDispatch d;

  if (tree.order() >= 3 && second.order() >= 2) {
    const TreeAnatomy a = tree_anatomy(g, tree);
    const Vertex p = a.deep_leaf_parent;
    const Vertex y1 = min_leaf(g, second);
    const Vertex y0 = g.neighbors(y1).front();
    const auto &kids = a.children[p];
    if (g.degree(p) == 2) {
      d.id = CaseId::C1_1;
      d.roles = {{Role::x0, a.parent[p]}, {Role::x1, p}, {Role::x2, kids[0]},
                 {Role::y0, y0},          {Role::y1, y1}};
      d.removed = {p, kids[0], y1};
    } else {
      d.id = CaseId::C1_2;
      d.roles = {{Role::x0, p},  {Role::x1, kids[0]}, {Role::x2, kids[1]},
                 {Role::y0, y0}, {Role::y1, y1}};
      d.removed = {kids[0], kids[1], y1};
    }
    return d;
  }

  if (tree.order() >= 3) {
    const Vertex y = second.min_vertex();
    for (Vertex x : tree.vertices) {
      if (g.degree(x) < 3)
        continue;
      for (Vertex l : g.neighbors(x))
        if (g.degree(l) == 1) {
          d.id = CaseId::C2_1;
          d.roles = {{Role::x, x}, {Role::l, l}, {Role::y, y}};
          d.removed = {x, l, y};
          return d;
        }
    }
    const Vertex l1 = min_leaf(g, tree);
    const Vertex x0 = g.neighbors(l1).front();
    if (g.degree(x0) != 2)
      dispatch_failure("case 2.2 leaf neighbour without degree 2");
    const Vertex x1 = other_neighbor(g, x0, l1);
    for (Vertex l2 : tree.vertices) {
      if (l2 == l1 || g.degree(l2) != 1)
        continue;
      const Vertex x2 = g.neighbors(l2).front();
      if (l2 != x1 && x2 != x1) {
        d.id = CaseId::C2_2;
        d.roles = {{Role::x0, x0}, {Role::l1, l1}, {Role::x1, x1},
                   {Role::l2, l2}, {Role::x2, x2}, {Role::y, y}};
        d.removed = {x0, l1, l2};
        return d;
      }
    }
    // T is P3 or P4: borrow a vertex of minimum degree from a cyclic component
    Vertex l3 = -1;
    for (const auto &c : comps) {
      if (c.acyclic())
        continue;
      for (Vertex v : c.vertices)
        if (l3 < 0 || g.degree(v) < g.degree(l3) ||
            (g.degree(v) == g.degree(l3) && v < l3))
          l3 = v;
    }
    if (l3 < 0)
      dispatch_failure("case 2.2 without a cyclic component");
    d.id = CaseId::C2_2_ALT;
    d.roles = {{Role::x0, x0}, {Role::l1, l1}, {Role::x1, x1},
               {Role::l3, l3}, {Role::y, y}};
    d.removed = {x0, l1, l3};
    return d;
  }

  if (tree.order() == 2) {
    // any vertex of degree >= 2 works; prefer degree exactly 2
    Vertex y = -1;
    auto rank = [&](Vertex v) {
      const std::size_t deg = g.degree(v);
      return std::pair{deg == 2 ? 0 : 1, deg};
    };
    for (std::size_t v = 0; v < n; ++v) {
      const auto vv = static_cast<Vertex>(v);
      if (g.degree(vv) < 2)
        continue;
      if (y < 0 || rank(vv) < rank(y))
        y = vv;
    }
    if (y < 0)
      dispatch_failure("case 3 without a vertex of degree >= 2");
    d.id = CaseId::C3;
    d.roles = {{Role::x0, tree.vertices[0]},
               {Role::x1, tree.vertices[1]},
               {Role::y, y}};
    d.removed = {tree.vertices[0], tree.vertices[1], y};
    return d;
  }

  dispatch_case_four(g, comps, d);
  return d;
}

PartialMap extension_for_case(const Graph &g, const CaseDispatch &d,
                              const std::vector<Vertex> &s) {
  auto fixed = [](Vertex v) { return std::pair{v, v}; };
  switch (d.id) {
  case CaseId::C1_1: {
    const Vertex x0 = d[Role::x0], x1 = d[Role::x1], x2 = d[Role::x2],
                 y1 = d[Role::y1];
    if (s[x0] == x0)
      return pairs({{x1, y1}, fixed(x2)});
    return pairs({fixed(x1), {x2, y1}});
  }
  case CaseId::C1_2: {
    const Vertex x0 = d[Role::x0], x1 = d[Role::x1], x2 = d[Role::x2],
                 y0 = d[Role::y0], y1 = d[Role::y1];
    if (s[x0] == x0) {
      // With x0 fixed both leaves must move, and only y1 is new. Swapping x0
      // with y1 works unless s pairs y0 with a neighbour w of x0 (then y0y1
      // lands on the edge x0w). For that situation try, in order: splitting
      // a transposition of s that avoids N[x0] between the two leaves
      // (always valid), then two swaps that also fix w, kept only if they
      // embed.
      const Vertex w = s[y0];
      if (w == y0 || !g.has_edge(x0, w))
        return pairs({{x0, y1}, fixed(x1), fixed(x2)});
      for (std::size_t a = 0; a < s.size(); ++a) {
        const Vertex va = static_cast<Vertex>(a), b = s[a];
        if (b > va && va != x0 && b != x0 && !g.has_edge(x0, va) &&
            !g.has_edge(x0, b))
          return pairs({{x1, va}, {x2, b}, fixed(y1)});
      }
      for (PartialMap m :
           {pairs({{x0, y0}, fixed(w), fixed(x1), fixed(x2), fixed(y1)}),
            pairs({{x0, y1}, fixed(w), fixed(x1), fixed(x2), fixed(y0)})})
        if (embeds_with(g, s, m))
          return m;
      return pairs({{x0, y1}, fixed(x1), fixed(x2)});
    }
    if (s[x0] != y0)
      return pairs({{x1, y1}, fixed(x2)});
    return pairs({fixed(x1), fixed(y1), fixed(x2)});
  }
  case CaseId::C2_1:
    return pairs({{d[Role::x], d[Role::y]}, fixed(d[Role::l])});
  case CaseId::C2_2:
  case CaseId::C2_2_ALT: {
    const Vertex x0 = d[Role::x0], x1 = d[Role::x1], l1 = d[Role::l1];
    const Vertex l2 = d.id == CaseId::C2_2 ? d[Role::l2] : d[Role::l3];
    if (s[x1] == x1)
      return pairs({{x0, l2}, fixed(l1)});
    return pairs({fixed(x0), {l1, l2}});
  }
  case CaseId::C3:
    return pairs({{d[Role::x0], d[Role::y]}, fixed(d[Role::x1])});
  case CaseId::C4_1:
    return pairs({{d[Role::x], d[Role::y]}, fixed(d[Role::z])});
  case CaseId::C4_2b: {
    const Vertex x1 = d[Role::x1], x2 = d[Role::x2], x3 = d[Role::x3],
                 x4 = d[Role::x4], x = d[Role::x], y = d[Role::y],
                 z = d[Role::z], t = d[Role::t];
    if (s[x] != x && s[y] != y)
      return pairs({fixed(x1), {x2, x4}, fixed(x3), fixed(z), fixed(t)});
    if (s[x] == x)
      return pairs({{x1, x4}, fixed(x2), {x3, z}, fixed(t)});
    return pairs({{x1, z}, fixed(x2), {x3, x4}, fixed(t)});
  }
  case CaseId::C4_2c_BIG: {
    Vertex p[9];
    const Role path[] = {Role::x1, Role::x2, Role::x3, Role::x4,
                         Role::x5, Role::x6, Role::x7, Role::x8};
    for (int i = 0; i < 8; ++i)
      p[i + 1] = d[path[i]];
    // x4x5 is an edge of G', so at least one endpoint moves; read the path
    // backwards if x4 is the fixed one
    if (s[p[4]] == p[4])
      std::reverse(p + 1, p + 9);
    const Vertex z = d[Role::z], t = d[Role::t];
    if (s[p[5]] != p[1])
      return pairs({fixed(p[3]), fixed(t), {p[2], p[6]}, {p[7], z}});
    return pairs({fixed(p[3]), fixed(t), {p[2], p[7]}, {p[6], z}});
  }
  default:
    break;
  }
  throw Error(ErrorKind::BadParams,
              std::string("no extension table for case ") + to_string(d.id));
}

Permutation apply_extension(const Graph &g, const CaseDispatch &d,
                            const std::vector<Vertex> &s) {
  const std::size_t n = g.order();
  PartialMap rest;
  for (std::size_t v = 0; v < n; ++v)
    if (s[v] >= 0)
      rest[static_cast<Vertex>(v)] = s[v];
  const PartialMap ext = extension_for_case(g, d, s);
  Permutation p;
  try {
    p = extend(n, ext, rest);
  } catch (const Error &e) {
    throw Error(ErrorKind::ExtensionInvalid,
                std::string(to_string(d.id)) + ": " + e.what());
  }
  const GoodnessCheck c = check_good(g, p);
  const std::size_t gain = d.removed.size() == 6 ? 4 : 2;
  if (!c.embedding)
    throw Error(ErrorKind::ExtensionInvalid,
                std::string(to_string(d.id)) + ": not an embedding");
  if (!c.short_cycles)
    throw Error(ErrorKind::ExtensionInvalid,
                std::string(to_string(d.id)) + ": cycle longer than 2");
  if (!c.enough_cycles || c.cycles < involution_cycles(s) + gain)
    throw Error(ErrorKind::ExtensionInvalid,
                std::string(to_string(d.id)) + ": too few cycles");
  return p;
}

std::optional<Permutation> fallback_search(const Graph &g, std::size_t limit) {
  return find_good_permutation(g, limit);
}

Construction construct_good(const Graph &g, const ConstructOptions &opts) {
  if (g.order() < 3)
    throw Error(ErrorKind::TooSmall, "construction needs n >= 3");
  if (g.size() + 2 > g.order())
    throw Error(ErrorKind::TooManyEdges,
                "too many edges: " + std::to_string(g.size()) + " > n-2 = " +
                    std::to_string(g.order() - 2));
  Construction c;
  std::vector<Vertex> ids(g.order());
  std::iota(ids.begin(), ids.end(), 0);
  c.perm = Builder(c.trace, opts).solve(g, ids);
  c.trace.final_cycles = cycle_count(c.perm);
  if (!is_good(g, c.perm))
    throw Error(ErrorKind::VerificationFailure,
                "constructed permutation is not good");
  return c;
}

} // namespace lpack
