#include "lpack/bounds.hpp"

#include <set>

#include "lpack/error.hpp"
#include "lpack/oracle.hpp"

namespace lpack {

bool is_embedding(const Graph &g, const Permutation &s) {
  if (s.size() != g.order())
    return false;
  for (auto [u, v] : g.edges())
    if (g.has_edge(s(u), s(v)))
      return false;
  return true;
}

GoodnessCheck check_good(const Graph &g, const Permutation &s) {
  GoodnessCheck c;
  c.embedding = is_embedding(g, s);
  c.short_cycles = s.size() == g.order() && is_short(s);
  c.cycles = cycle_count(s);
  c.required = 2 * g.order() / 3;
  c.enough_cycles = c.cycles >= c.required;
  return c;
}

bool is_good(const Graph &g, const Permutation &s) {
  return check_good(g, s).good();
}

bool verify_labeled_packing(const Graph &g, const LabeledPacking &lp) {
  const std::size_t n = g.order();
  if (lp.labeling.label.size() != n)
    return false;
  std::vector<std::set<Edge>> images;
  for (const auto &s : lp.perms) {
    if (s.size() != n)
      return false;
    for (std::size_t v = 0; v < n; ++v)
      if (lp.labeling.label[v] != lp.labeling.label[s(static_cast<Vertex>(v))])
        return false;
    std::set<Edge> img;
    for (auto [u, v] : g.edges()) {
      Vertex a = s(u), b = s(v);
      img.emplace(std::min(a, b), std::max(a, b));
    }
    for (const auto &other : images)
      for (const auto &e : img)
        if (other.count(e))
          return false;
    images.push_back(std::move(img));
  }
  return true;
}

std::size_t lower_bound_main(std::size_t n) {
  if (n < 3)
    throw Error(ErrorKind::OutOfTheoremRange, "lower bound needs n >= 3");
  return 2 * n / 3;
}

std::size_t lower_bound_woz(std::size_t n) { return n / 3 + n % 3; }

UpperBound upper_bound_mis(const Graph &g, std::size_t mis_limit,
                           std::size_t oracle_limit) {
  const std::size_t n = g.order();
  const std::size_t alpha = independence_number(g, mis_limit);
  UpperBound ub;
  ub.value = alpha + (n - alpha) / 2;
  // Any graph with at most n-2 edges embeds; otherwise ask the oracle.
  if (n >= 2 && g.size() + 2 <= n)
    ub.vacuous = false;
  else if (n <= oracle_limit)
    ub.vacuous = !exists_embedding(g, oracle_limit);
  return ub;
}

KnownValue known_lambda2(Family family, std::size_t param) {
  switch (family) {
  case Family::Cycle:
    if (param >= 6)
      return {3 * param / 4, 3 * param / 4};
    break;
  case Family::Path:
    if (param >= 6)
      return {3 * param / 4, 3 * param / 4 + 1};
    break;
  case Family::Tight:
    if (param >= 1)
      return {2 * param + 2, 2 * param + 2};
    break;
  default:
    break;
  }
  throw Error(ErrorKind::Unknown, std::string("no known value for ") +
                                      to_string(family) + " " +
                                      std::to_string(param));
}

} // namespace lpack
