#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repkit/finite_rep.hpp"
#include "repkit/representations.hpp"

namespace repkit {

// End(M) with coordinates: an element is determined by its entries at a
// fixed set of pivot positions, which makes products cheap to express.
class EndAlgebra {
 public:
  explicit EndAlgebra(const FiniteRep& m);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Morphism>& basis() const { return basis_; }
  const FiniteRep& rep() const { return rep_; }

  Matrix coords(const Morphism& x) const;  // n x 1
  Morphism element(const Matrix& coords) const;
  Morphism random_element(std::mt19937_64& rng) const;
  // Matrix of y |-> x y in basis coordinates.
  Matrix left_mult(const Morphism& x) const;
  // dim of the radical of the trace form tr(L_{xy}); equals dim rad End when
  // the characteristic is zero or exceeds dim End.
  std::size_t trace_radical_dim() const;
  bool is_local() const;

 private:
  struct Pos {
    std::size_t v, i, j;
  };
  FiniteRep rep_;
  std::vector<Morphism> basis_;
  std::vector<Pos> pivots_;
  Matrix pivot_inv_;
  Matrix entry(const Morphism& x, const Morphism& y, const Pos& p) const;  // (x y) at p, 1x1
};

struct Summand {
  FiniteRep rep;
  std::size_t multiplicity = 1;
};

struct DecompositionResult {
  std::vector<Summand> summands;
  bool conclusive = true;
  std::size_t draws = 0;
  std::string note;
  std::size_t count() const;  // summands with multiplicity
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  int retry_budget = 32;
  int iso_draws = 16;
};

// Fitting splitting over a prime field. Rational input is reduced modulo the
// default prime first (noted in the result).
DecompositionResult decompose(const FiniteRep& m, const DecomposeOptions& opt = {});

struct CoverSummand {
  CoverRep rep;
  std::size_t multiplicity = 1;
};
struct CoverDecomposition {
  std::vector<CoverSummand> summands;
  bool conclusive = true;
  std::string note;
  std::size_t count() const;
};
CoverDecomposition decompose(const CoverRep& m, const DecomposeOptions& opt = {});

struct KroneckerDecomposition {
  std::vector<std::pair<KroneckerRep, std::size_t>> summands;
  bool conclusive = true;
  std::string note;
  std::size_t count() const;
};
KroneckerDecomposition decompose(const KroneckerRep& m, const DecomposeOptions& opt = {});

// Indecomposable: dim End = 1, or End is local by the trace-form test.
// nullopt when neither test is conclusive (End/rad is a proper field extension).
std::optional<bool> is_indecomposable(const FiniteRep& m);
std::optional<bool> is_indecomposable(const CoverRep& m);

std::size_t end_dim(const CoverRep& m);
bool is_brick(const CoverRep& m);
bool is_brick(const KroneckerRep& m);
// Indecomposable with leaves in both fibers.
bool is_balanced(const CoverRep& m);

enum class IsoVerdict { iso, not_iso, probably_not };
std::string to_string(IsoVerdict v);
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::probably_not;
  int draws = 0;
  Morphism witness;
};
IsoResult iso_test(const FiniteRep& m, const FiniteRep& n, std::uint64_t seed = 0, int draws = 16);
IsoResult iso_test(const CoverRep& m, const CoverRep& n, std::uint64_t seed = 0, int draws = 16);
IsoResult iso_test(const KroneckerRep& m, const KroneckerRep& n, std::uint64_t seed = 0, int draws = 16);

// Searches the deck transformations aligning support anchors for g with
// N ≅ M^g. Returns the element or nullopt.
std::optional<GroupElement> find_shift_iso(const CoverRep& m, const CoverRep& n, std::uint64_t seed = 0);

struct CoverShortExact {
  CoverRep left, middle, right;
  CoverMorphism inclusion, projection;
};
// Almost split sequence 0 -> tau X -> E -> X -> 0 on the cover, for an
// indecomposable X. Bricks take the one-dimensional Ext directly; otherwise
// the class is the part of Ext(X, tau X) killed by rad End(X).
// Throws std::invalid_argument for decomposable or projective X.
CoverShortExact ar_sequence(const CoverRep& x);

enum class QuasiSimpleVerdict { yes, no, inconclusive };
std::string to_string(QuasiSimpleVerdict v);
struct QuasiSimpleResult {
  QuasiSimpleVerdict verdict = QuasiSimpleVerdict::inconclusive;
  std::string route;  // "dimension" or "ar-sequence"
};
QuasiSimpleResult is_quasi_simple(const CoverRep& x, std::uint64_t seed = 0);

}  // namespace repkit
