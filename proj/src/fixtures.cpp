// Stored good permutations for the small graphs the induction bottoms out
// on. Each table is the output of the exhaustive involution search
// (find_good_permutation) on the canonical layout; the unit tests re-derive
// and re-verify every one of them.

#include "lpack/constructor.hpp"
#include "lpack/error.hpp"

namespace lpack {

const Permutation &three_triangles_fixture() {
  // (0)(1 3)(2 6)(4)(5 7)(8)
  static const Permutation p({0, 3, 6, 1, 4, 7, 2, 5, 8});
  return p;
}

const Permutation &two_triangles_fixture() {
  // (0)(1 3)(2 6)(4)(5 7)
  static const Permutation p({0, 3, 6, 1, 4, 7, 2, 5});
  return p;
}

const Permutation &cycle_fixture(std::size_t m) {
  static const Permutation c4({0, 4, 2, 5, 1, 3});          // (0)(1 4)(2)(3 5)
  static const Permutation c5({0, 3, 5, 1, 6, 2, 4});       // (0)(1 3)(2 5)(4 6)
  static const Permutation c6({0, 3, 5, 1, 4, 2, 6, 7});    // (0)(1 3)(2 5)(4)(6)(7)
  static const Permutation c7({0, 4, 2, 6, 1, 5, 3, 7, 8}); // (0)(1 4)(2)(3 6)(5)(7)(8)
  switch (m) {
  case 4: return c4;
  case 5: return c5;
  case 6: return c6;
  case 7: return c7;
  default:
    throw Error(ErrorKind::BadParams, "cycle fixture needs 4 <= m <= 7");
  }
}

Permutation lemma_kc3_permutation(std::size_t k) {
  if (k < 1)
    throw Error(ErrorKind::BadParams, "lemma permutation needs k >= 1");
  // one triangle (0 1 2), isolated 3 and 4: 0 fixed, 1 <-> 3, 2 <-> 4
  static const Permutation one({0, 3, 4, 1, 2});
  const std::size_t r = (k - 1) % 3 + 1;
  Permutation tail = r == 1   ? one
                     : r == 2 ? two_triangles_fixture()
                              : disjoint_union(three_triangles_fixture(),
                                               Permutation::identity(2));
  Permutation head = Permutation::identity(0);
  for (std::size_t i = 0; i < (k - r) / 3; ++i)
    head = disjoint_union(head, three_triangles_fixture());
  return disjoint_union(head, tail);
}

} // namespace lpack
