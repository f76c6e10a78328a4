#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lpack/graph.hpp"

namespace lpack {

/// Bijection on 0..n-1 stored as an image table.
class Permutation {
public:
  Permutation() = default;
  /// Throws NotBijective if `image` is not a permutation of 0..n-1.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex> &image() const noexcept { return image_; }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.image_ <=> b.image_;
  }

private:
  std::vector<Vertex> image_;
};

struct CycleDecomposition {
  /// Each cycle starts at its minimum vertex; cycles sorted by that vertex.
  std::vector<std::vector<Vertex>> cycles;

  std::size_t count() const noexcept { return cycles.size(); }
};

/// Vertex labeling with labels 1..p, each used at least once.
struct Labeling {
  std::vector<int> label;
  int p = 0;
};

using PartialMap = std::map<Vertex, Vertex>;

CycleDecomposition cycle_decomposition(const Permutation &s);
std::size_t cycle_count(const Permutation &s);

/// All cycles of length <= 2, i.e. s is an involution.
bool is_short(const Permutation &s);

/// One label per cycle, numbered by increasing minimum cycle vertex.
Labeling labeling_from_permutation(const Permutation &s);

/// Combines `base` (taking precedence) with `rest` into a permutation on
/// 0..n-1. Throws NotBijective if the result is not a bijection or some
/// vertex is left unmapped.
Permutation extend(std::size_t n, const PartialMap &base,
                   const PartialMap &rest);

/// p1 on 0..|p1|-1 followed by p2 shifted by |p1|.
Permutation disjoint_union(const Permutation &p1, const Permutation &p2);

/// Relabels s through `to` (new index of each old vertex): result(to[v]) =
/// to[s(v)].
Permutation relabel(const Permutation &s, const std::vector<Vertex> &to);

/// "1 0 2 4 3"
std::string to_image_string(const Permutation &s);
/// "(0 1)(2)(3 4)"
std::string to_cycle_string(const Permutation &s);
/// Parses the image form; throws ParseError (line 1) or NotBijective.
Permutation parse_permutation(std::string_view text);

} // namespace lpack
