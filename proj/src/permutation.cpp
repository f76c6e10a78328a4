#include "lpack/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "lpack/error.hpp"

namespace lpack {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[v])
      throw Error(ErrorKind::NotBijective, "image table is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

CycleDecomposition cycle_decomposition(const Permutation &s) {
  CycleDecomposition out;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t start = 0; start < s.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<Vertex> cycle;
    for (auto v = static_cast<Vertex>(start); !seen[v]; v = s(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::size_t cycle_count(const Permutation &s) {
  std::size_t count = 0;
  std::vector<bool> seen(s.size(), false);
  for (std::size_t start = 0; start < s.size(); ++start) {
    if (seen[start])
      continue;
    ++count;
    for (auto v = static_cast<Vertex>(start); !seen[v]; v = s(v))
      seen[v] = true;
  }
  return count;
}

bool is_short(const Permutation &s) {
  for (std::size_t v = 0; v < s.size(); ++v)
    if (s(s(static_cast<Vertex>(v))) != static_cast<Vertex>(v))
      return false;
  return true;
}

Labeling labeling_from_permutation(const Permutation &s) {
  Labeling l;
  l.label.assign(s.size(), 0);
  for (const auto &cycle : cycle_decomposition(s).cycles) {
    ++l.p;
    for (Vertex v : cycle)
      l.label[v] = l.p;
  }
  return l;
}

Permutation extend(std::size_t n, const PartialMap &base,
                   const PartialMap &rest) {
  std::vector<Vertex> img(n, -1);
  for (const auto *part : {&rest, &base})
    for (auto [v, w] : *part) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorKind::NotBijective, "partial map outside 0..n-1");
      img[v] = w;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (img[v] < 0)
      throw Error(ErrorKind::NotBijective,
                  "vertex " + std::to_string(v) + " left unmapped");
  return Permutation(std::move(img));
}

Permutation disjoint_union(const Permutation &p1, const Permutation &p2) {
  std::vector<Vertex> img = p1.image();
  const auto shift = static_cast<Vertex>(p1.size());
  for (Vertex v : p2.image())
    img.push_back(v + shift);
  return Permutation(std::move(img));
}

Permutation relabel(const Permutation &s, const std::vector<Vertex> &to) {
  std::vector<Vertex> img(s.size());
  for (std::size_t v = 0; v < s.size(); ++v)
    img[to[v]] = to[s(static_cast<Vertex>(v))];
  return Permutation(std::move(img));
}

std::string to_image_string(const Permutation &s) {
  std::ostringstream out;
  for (std::size_t v = 0; v < s.size(); ++v)
    out << (v ? " " : "") << s(static_cast<Vertex>(v));
  return out.str();
}

std::string to_cycle_string(const Permutation &s) {
  std::ostringstream out;
  for (const auto &cycle : cycle_decomposition(s).cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  std::vector<Vertex> img;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      ++i;
      continue;
    }
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw ParseError(1, "permutation: expected an integer");
    img.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(img));
}

} // namespace lpack
