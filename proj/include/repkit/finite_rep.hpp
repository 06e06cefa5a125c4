#pragma once

// Representations of a finite quiver with linear algebra over FieldSpec.
// Both the Kronecker quiver and finite windows of the cover are encoded this
// way; the typed wrappers in representations.hpp convert to and from it.

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "repkit/field.hpp"

namespace repkit {

struct FiniteQuiver {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)
};

struct FiniteRep {
  std::shared_ptr<const FiniteQuiver> quiver;
  FieldSpec field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;  // maps[a] is dims[target] x dims[source]

  static FiniteRep zero(std::shared_ptr<const FiniteQuiver> q, FieldSpec f);
  std::size_t total_dim() const;
  void validate() const;
};

// One matrix per vertex, dims_target[v] x dims_source[v].
using Morphism = std::vector<Matrix>;

Morphism zero_morphism(const FiniteRep& m, const FiniteRep& n);
Morphism identity_morphism(const FiniteRep& m);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Matrix>& coeffs);
bool is_morphism(const FiniteRep& m, const FiniteRep& n, const Morphism& f);
bool is_isomorphism(const Morphism& f);

// A linear system for Hom(M,N) stated on an abstract finite quiver. Arrows
// carry pointers to the two representations' maps; nullptr means zero.
struct HomProblem {
  struct Arrow {
    std::size_t s, t;
    const Matrix* m;
    const Matrix* n;
  };
  FieldSpec field;
  std::vector<std::size_t> d, e;
  std::vector<Arrow> arrows;
};

// Basis of the solution space. Independent connected pieces of the common
// support are solved separately; tree-shaped pieces by leaf-to-root elimination.
std::vector<Morphism> solve_hom(const HomProblem& p);
std::size_t solve_hom_dim(const HomProblem& p);

HomProblem make_hom_problem(const FiniteRep& m, const FiniteRep& n);
std::vector<Morphism> hom_basis(const FiniteRep& m, const FiniteRep& n);
std::size_t hom_dim(const FiniteRep& m, const FiniteRep& n);

long long euler_form(const FiniteRep& m, const FiniteRep& n);

// Ext via the standard complex: coker of
//   (+)_v Hom(M_v,N_v) -> (+)_a Hom(M_s(a), N_t(a)),  f |-> N_a f_s - f_t M_a.
// cocycles spans a complement of the image (one entry per arrow).
struct ExtData {
  std::size_t dim = 0;
  std::vector<std::vector<Matrix>> cocycles;
};
ExtData ext_cocycles(const FiniteRep& m, const FiniteRep& n);
// Classes xi in Ext(M, N) with xi . f = 0 for every f in `ends` (endomorphisms
// of M acting by pullback), as cocycles.
std::vector<std::vector<Matrix>> ext_annihilated(const FiniteRep& m, const FiniteRep& n,
                                                 const std::vector<Morphism>& ends);

struct ShortExact {
  FiniteRep left, middle, right;
  Morphism inclusion, projection;
};
// 0 -> N -> E -> M -> 0 with E_a = [[N_a, c_a], [0, M_a]].
ShortExact extension(const FiniteRep& n, const FiniteRep& m, const std::vector<Matrix>& cocycle);

struct Subquotient {
  FiniteRep rep;
  Morphism map;  // kernel: K -> M; cokernel: N -> C
};
Subquotient kernel_rep(const FiniteRep& m, const Morphism& f);
Subquotient cokernel_rep(const FiniteRep& n, const Morphism& f);
FiniteRep direct_sum(const FiniteRep& a, const FiniteRep& b);

// Standard projective presentation 0 -> Omega -> P(M) -> M -> 0 for quivers
// in which every vertex is a source or a sink.
struct Presentation {
  FiniteRep projective, syzygy;
  Morphism cover, inclusion;
};
Presentation standard_presentation(const FiniteRep& m);
// dim coker(Hom(P(M),N) -> Hom(Omega,N)).
std::size_t ext_dim_by_presentation(const FiniteRep& m, const FiniteRep& n);

// Change of basis: E_a = B_t^{-1} M_a B_s.
FiniteRep change_basis(const FiniteRep& m, const std::vector<Matrix>& basis);
// Restriction of M to the subrepresentation spanned at each vertex by the
// given columns, which must be invariant.
FiniteRep restrict_to(const FiniteRep& m, const std::vector<Matrix>& columns);

}  // namespace repkit
