#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpack/graph.hpp"
#include "lpack/permutation.hpp"

namespace lpack {

/// A labeling together with k permutations of the same vertex set.
struct LabeledPacking {
  Labeling labeling;
  std::vector<Permutation> perms;
};

/// Every edge uv of g maps to a non-edge s(u)s(v).
bool is_embedding(const Graph &g, const Permutation &s);

/// Embedding, involution, and at least floor(2n/3) cycles.
bool is_good(const Graph &g, const Permutation &s);

/// Which clause of the good-permutation definition a permutation fails.
struct GoodnessCheck {
  bool embedding = false;
  bool short_cycles = false;
  bool enough_cycles = false;
  std::size_t cycles = 0;
  std::size_t required = 0;

  bool good() const { return embedding && short_cycles && enough_cycles; }
};

GoodnessCheck check_good(const Graph &g, const Permutation &s);

/// Pairwise disjoint edge images and label preservation by every permutation.
bool verify_labeled_packing(const Graph &g, const LabeledPacking &lp);

/// floor(2n/3); throws OutOfTheoremRange for n < 3.
std::size_t lower_bound_main(std::size_t n);

/// floor(n/3) + n mod 3.
std::size_t lower_bound_woz(std::size_t n);

struct UpperBound {
  std::size_t value = 0;
  /// True when g is known to admit no embedding (the bound says nothing),
  /// false when an embedding is known to exist, empty when undecided.
  std::optional<bool> vacuous;
};

/// |I| + floor((n - |I|)/2) for a maximum independent set I.
UpperBound upper_bound_mis(const Graph &g,
                           std::size_t mis_limit = kDefaultMisLimit,
                           std::size_t oracle_limit = 9);

struct KnownValue {
  std::size_t low = 0;
  std::size_t high = 0; // equal to low when the value is exact
  bool exact() const { return low == high; }
};

/// Literature values: cycle n>=6 exact floor(3n/4), path n>=6 in
/// {floor(3n/4), floor(3n/4)+1}, tight family 2k+2. Throws Unknown otherwise.
KnownValue known_lambda2(Family family, std::size_t param);

} // namespace lpack
