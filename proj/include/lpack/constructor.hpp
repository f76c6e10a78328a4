#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpack/graph.hpp"
#include "lpack/oracle.hpp"
#include "lpack/permutation.hpp"

namespace lpack {

/// Which branch of the inductive construction handles a graph with exactly
/// n-2 edges.
enum class CaseId {
  BASE,        // n <= 5, solved by search
  C1_1,        // |T| >= 3, |H| >= 2, deep leaf-parent of degree 2
  C1_2,        // |T| >= 3, |H| >= 2, deep leaf-parent of degree >= 3
  C2_1,        // |T| >= 3, H = K1, a degree >= 3 vertex next to a leaf
  C2_2,        // |T| >= 3, H = K1, all leaf neighbours have degree 2
  C2_2_ALT,    // as C2_2 but T is P3 or P4
  C3,          // |T| = 2
  C4_1,        // |T| = 1, some vertex of degree >= 3
  C4_2a,       // k triangles plus two isolated vertices
  C4_2b,       // two or more cycles, one of length >= 4, plus 2K1
  C4_2c_SMALL, // C_m plus 2K1, 4 <= m < 8
  C4_2c_BIG,   // C_m plus 2K1, m >= 8
};

const char *to_string(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view name);

/// Named vertices of a case. `l1`, `l2`, `l3` are the leaves written with an
/// ell in the case descriptions.
enum class Role { x, y, z, t, l, x0, x1, x2, x3, x4, x5, x6, x7, x8, y0, y1,
                  l1, l2, l3 };

const char *to_string(Role role);

struct CaseDispatch {
  CaseId id = CaseId::BASE;
  std::map<Role, Vertex> roles;
  /// Vertices deleted before recursing (empty for non-recursive cases).
  std::vector<Vertex> removed;

  Vertex operator[](Role r) const { return roles.at(r); }
};

struct TraceStep {
  CaseId id = CaseId::BASE;
  /// Vertex ids of the input graph.
  std::vector<Vertex> removed;
  /// (v, sigma(v)) for every vertex the step assigned or reassigned.
  std::vector<std::pair<Vertex, Vertex>> extension;
  bool fallback = false;
  /// Cycles of this level's permutation minus those of the sub-permutation.
  std::int64_t cycles_added = 0;
  /// Order of the graph handled at this level.
  std::size_t order = 0;
};

struct ConstructionTrace {
  /// Outermost level first; the last step is non-recursive.
  std::vector<TraceStep> steps;
  std::size_t final_cycles = 0;

  std::size_t fallback_count() const;
};

struct ConstructOptions {
  /// Whole-graph involution search is allowed up to this order.
  std::size_t fallback_limit = kDefaultInvolutionLimit;
  /// Largest vertex window explored by local repair.
  std::size_t repair_window = 14;
};

struct Construction {
  Permutation perm;
  ConstructionTrace trace;
};

/// Good permutation (embedding, involution, >= floor(2n/3) cycles) for any
/// graph with n >= 3 and at most n-2 edges. Throws TooSmall, TooManyEdges,
/// or VerificationFailure if even the fallback cannot complete a level.
Construction construct_good(const Graph &g, const ConstructOptions &opts = {});

/// Case and role assignment for a graph with exactly n-2 edges, n >= 6.
CaseDispatch dispatch_case(const Graph &g);

/// Branch of the case's extension table selected by `sigma_prime`, given as
/// an image table on V(g) with -1 on the removed vertices. The returned map
/// covers the removed vertices and any vertex of G' it reassigns.
PartialMap extension_for_case(const Graph &g, const CaseDispatch &d,
                              const std::vector<Vertex> &sigma_prime);

/// Applies extension_for_case and checks that the result is a good
/// permutation of g gaining the required cycles. Throws ExtensionInvalid.
Permutation apply_extension(const Graph &g, const CaseDispatch &d,
                            const std::vector<Vertex> &sigma_prime);

/// Good permutation of k triangles plus two isolated vertices, in the vertex
/// layout of kc3_2k1(k).
Permutation lemma_kc3_permutation(std::size_t k);

/// Stored good permutation of 3C3 (vertices 0..8, triangles consecutive).
const Permutation &three_triangles_fixture();
/// Stored good permutation of 2C3 + 2K1 in the kc3_2k1(2) layout.
const Permutation &two_triangles_fixture();
/// Stored good permutation of C_m + 2K1 in the cm_2k1(m) layout, 4 <= m <= 7.
const Permutation &cycle_fixture(std::size_t m);

/// Whole-graph involution search for a good permutation. Throws SizeLimit
/// beyond `limit`.
std::optional<Permutation>
fallback_search(const Graph &g, std::size_t limit = kDefaultInvolutionLimit);

} // namespace lpack
