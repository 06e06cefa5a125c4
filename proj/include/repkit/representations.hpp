#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repkit/cover.hpp"
#include "repkit/field.hpp"
#include "repkit/finite_rep.hpp"

namespace repkit {

struct DimVector {
  long long a = 0, b = 0;
  friend bool operator==(const DimVector&, const DimVector&) = default;
};
std::string to_string(const DimVector& d);

// <d,e> = d.a e.a + d.b e.b - r d.a e.b
long long euler_form(const DimVector& d, const DimVector& e, int r);

// Arrow of the cover named by its source (even word) and label.
using ArrowKey = std::pair<Word, int>;
struct ArrowLess {
  bool operator()(const ArrowKey& x, const ArrowKey& y) const {
    CanonicalLess w;
    if (w(x.first, y.first)) return true;
    if (w(y.first, x.first)) return false;
    return x.second < y.second;
  }
};

inline Word arrow_target(const ArrowKey& a) { return neighbor(a.first, a.second); }

struct CoverRep {
  int r = 3;
  FieldSpec field;
  std::map<Word, std::size_t, CanonicalLess> dims;  // support only, all positive
  std::map<ArrowKey, Matrix, ArrowLess> maps;       // missing arrows are zero

  std::size_t dim_at(const Word& v) const;
  // nullptr when the arrow is absent (zero map).
  const Matrix* map_at(const Word& source, int label) const;
  Matrix map_or_zero(const Word& source, int label) const;
  VertexSet support() const;
  std::size_t total_dim() const;
  DimVector dim_vector() const;  // push-down dimension vector
  bool empty() const { return dims.empty(); }
  // Throws std::invalid_argument on shape, support or word errors.
  void validate() const;
  // Drops zero-dimensional vertices, arrows leaving the support and zero matrices.
  void trim();
  friend bool operator==(const CoverRep&, const CoverRep&) = default;
};

struct KroneckerRep {
  int r = 3;
  FieldSpec field;
  std::size_t d1 = 0, d2 = 0;
  std::vector<Matrix> mats;  // r matrices, each d2 x d1

  DimVector dim_vector() const { return {static_cast<long long>(d1), static_cast<long long>(d2)}; }
  std::size_t total_dim() const { return d1 + d2; }
  void validate() const;
  friend bool operator==(const KroneckerRep&, const KroneckerRep&) = default;
};

using CoverMorphism = std::map<Word, Matrix, CanonicalLess>;  // components on supp M ∩ supp N
struct KroneckerMorphism {
  Matrix f1, f2;
};

// Bridges to the finite-quiver engine.
std::shared_ptr<const FiniteQuiver> kronecker_quiver(int r);
FiniteRep to_finite(const KroneckerRep& m);
KroneckerRep from_finite(const FiniteRep& f, int r);
KroneckerMorphism to_kronecker_morphism(const Morphism& f);
Morphism to_morphism(const KroneckerMorphism& f);

// A finite induced subquiver of the cover, indexed in canonical order.
struct CoverWindow {
  int r = 3;
  std::vector<Word> vertices;
  std::map<Word, std::size_t, CanonicalLess> index;
  std::vector<ArrowKey> arrows;
  std::shared_ptr<const FiniteQuiver> quiver;

  static CoverWindow over(const VertexSet& vs, int r);
};
VertexSet joint_support(const CoverRep& m, const CoverRep& n);
FiniteRep to_finite(const CoverRep& m, const CoverWindow& w);
CoverRep from_finite(const FiniteRep& f, const CoverWindow& w);
CoverMorphism to_cover_morphism(const Morphism& f, const CoverWindow& w);
Morphism to_morphism(const CoverMorphism& f, const CoverRep& m, const CoverRep& n, const CoverWindow& w);

// Push-down: blocks in canonical vertex order.
KroneckerRep pushdown(const CoverRep& m);
KroneckerMorphism pushdown(const CoverMorphism& f, const CoverRep& m, const CoverRep& n);

std::vector<CoverMorphism> hom_basis(const CoverRep& m, const CoverRep& n);
std::size_t hom_dim(const CoverRep& m, const CoverRep& n);
std::vector<KroneckerMorphism> hom_basis(const KroneckerRep& m, const KroneckerRep& n);
std::size_t hom_dim(const KroneckerRep& m, const KroneckerRep& n);
bool is_morphism(const CoverRep& m, const CoverRep& n, const CoverMorphism& f);
bool is_morphism(const KroneckerRep& m, const KroneckerRep& n, const KroneckerMorphism& f);

// Ext from a projective presentation, cross-checked against hom - <,>.
// Throws std::logic_error if the two routes disagree.
std::size_t ext_dim(const KroneckerRep& m, const KroneckerRep& n);
std::size_t ext_dim(const CoverRep& m, const CoverRep& n);
long long euler_form(const CoverRep& m, const CoverRep& n);

// (M^g)_x = M_{g.x}
CoverRep shift(const CoverRep& m, const GroupElement& g);
// (DM)_x = (M_{phi(x)})^*
CoverRep dual_cover(const CoverRep& m);
KroneckerRep dual(const KroneckerRep& m);

CoverRep direct_sum(const CoverRep& a, const CoverRep& b);
KroneckerRep direct_sum(const KroneckerRep& a, const KroneckerRep& b);

struct CoverSubquotient {
  CoverRep rep;
  CoverMorphism map;
};
CoverSubquotient kernel_rep(const CoverRep& m, const CoverRep& n, const CoverMorphism& f);
CoverSubquotient cokernel_rep(const CoverRep& m, const CoverRep& n, const CoverMorphism& f);
struct KroneckerSubquotient {
  KroneckerRep rep;
  KroneckerMorphism map;
};
KroneckerSubquotient kernel_rep(const KroneckerRep& m, const KroneckerMorphism& f);
KroneckerSubquotient cokernel_rep(const KroneckerRep& n, const KroneckerMorphism& f);

// Building blocks.
enum class StandardName { P1, P2, I1, I2, S1, S2 };
std::optional<StandardName> parse_standard_name(const std::string& s);
KroneckerRep standard_rep(StandardName name, int r, FieldSpec f = {});
// Cokernel of P_1 -> P_2 given by alpha; alpha must be nonzero.
KroneckerRep build_X_alpha(const std::vector<long long>& alpha, int r, FieldSpec f = {});
KroneckerRep build_X_alpha(const Matrix& alpha, int r);
// k on x0 and its out-neighbours except the one with label i.
CoverRep build_X_cover(int i, int r, FieldSpec f = {});
CoverRep thin_tree_rep(const TreeSubgraph& t, FieldSpec f = {});
// The edge x0 -> [1] with the identity map.
CoverRep thin_edge(int r, FieldSpec f = {});
CoverRep simple_at(const Word& v, int r, FieldSpec f = {});

// Support tree T(M): the induced subgraph on the support.
TreeSubgraph support_tree(const CoverRep& m);
// Leaves with respect to the support tree.
VertexSet rep_leaves(const CoverRep& m);
// Connected support with leaves in both fibers. Balance also needs
// indecomposability, see decomposition.hpp.
bool has_leaves_in_both_fibers(const CoverRep& m);

}  // namespace repkit
