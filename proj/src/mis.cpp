// Exact maximum independent set: branch and bound on a maximum-degree vertex
// with degree <= 1 reductions and a greedy clique-cover bound.

#include <algorithm>
#include <bit>
#include <cstdint>

#include "lpack/error.hpp"
#include "lpack/graph.hpp"

namespace lpack {
namespace {

class Bits {
public:
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](auto w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const Bits &o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  void and_not(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i)
      w_[i] &= ~o.w_[i];
  }
  void and_with(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i)
      w_[i] &= o.w_[i];
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      auto w = w_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> w_;
};

class MisSolver {
public:
  explicit MisSolver(const Graph &g) : n_(g.order()) {
    nbr_.reserve(n_);
    closed_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      Bits b(n_);
      for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
        b.set(static_cast<std::size_t>(w));
      nbr_.push_back(b);
      b.set(v);
      closed_.push_back(std::move(b));
    }
  }

  std::size_t alpha(const Bits &p) {
    best_ = 0;
    search(p, 0);
    return best_;
  }

  Bits all() const {
    Bits b(n_);
    for (std::size_t v = 0; v < n_; ++v)
      b.set(v);
    return b;
  }

  const Bits &closed(std::size_t v) const { return closed_[v]; }

private:
  std::size_t clique_cover(const Bits &p) const {
    std::vector<Bits> candidates;
    p.for_each([&](std::size_t v) {
      for (auto &c : candidates)
        if (c.test(v)) {
          c.and_with(nbr_[v]);
          return;
        }
      Bits c = nbr_[v];
      c.and_with(p);
      candidates.push_back(std::move(c));
    });
    return candidates.size();
  }

  void search(Bits p, std::size_t current) {
    for (bool reduced = true; reduced;) {
      reduced = false;
      std::size_t pick = n_;
      p.for_each([&](std::size_t v) {
        if (pick == n_ && p.count_and(nbr_[v]) <= 1)
          pick = v;
      });
      if (pick != n_) {
        p.and_not(closed_[pick]);
        ++current;
        reduced = true;
      }
    }
    if (p.none()) {
      best_ = std::max(best_, current);
      return;
    }
    if (current + clique_cover(p) <= best_)
      return;
    std::size_t branch = n_, branch_deg = 0;
    p.for_each([&](std::size_t v) {
      std::size_t d = p.count_and(nbr_[v]);
      if (branch == n_ || d > branch_deg) {
        branch = v;
        branch_deg = d;
      }
    });
    Bits take = p;
    take.and_not(closed_[branch]);
    search(take, current + 1);
    p.reset(branch);
    search(p, current);
  }

  std::size_t n_;
  std::vector<Bits> nbr_, closed_;
  std::size_t best_ = 0;
};

void check_limit(const Graph &g, std::size_t limit) {
  if (g.order() > limit)
    throw Error(ErrorKind::SizeLimit,
                "independent set solver limited to n <= " +
                    std::to_string(limit));
}

} // namespace

std::size_t independence_number(const Graph &g, std::size_t limit) {
  check_limit(g, limit);
  MisSolver solver(g);
  return solver.alpha(solver.all());
}

std::vector<Vertex> max_independent_set(const Graph &g, std::size_t limit) {
  check_limit(g, limit);
  MisSolver solver(g);
  Bits avail = solver.all();
  std::size_t need = solver.alpha(avail);
  std::vector<Vertex> chosen;
  for (std::size_t v = 0; v < g.order() && need > 0; ++v) {
    if (!avail.test(v))
      continue;
    avail.reset(v);
    Bits rest = avail;
    rest.and_not(solver.closed(v));
    if (1 + solver.alpha(rest) == need) {
      chosen.push_back(static_cast<Vertex>(v));
      avail = std::move(rest);
      --need;
    }
  }
  return chosen;
}

} // namespace lpack
