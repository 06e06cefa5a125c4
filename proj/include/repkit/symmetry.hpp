#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repkit/decomposition.hpp"
#include "repkit/representations.hpp"

namespace repkit {

// sigma[i-1] = sigma(i), a permutation of {1..r}.
using Permutation = std::vector<int>;

Permutation identity_permutation(int r);
Permutation transposition(int r, int i, int j);
// Permutation and Word are the same type, hence the prefixed names.
Permutation permutation_inverse(const Permutation& s);
// (s * t)(i) = s(t(i))
Permutation permutation_compose(const Permutation& s, const Permutation& t);
bool is_permutation(const Permutation& s);
// Letterwise relabeling, an automorphism of the cover.
Word relabel(const Permutation& s, const Word& w);

// sigma(M)_x = M_{sigma(x)}, sigma(M)(alpha) = M(sigma(alpha)).
// Contravariant: sigma_rep(s, sigma_rep(t, M)) = sigma_rep(t * s, M).
CoverRep sigma_rep(const Permutation& s, const CoverRep& m);

enum class StabilityVerdict { stable, not_stable, inconclusive };
std::string to_string(StabilityVerdict v);

struct StabilityResult {
  StabilityVerdict verdict = StabilityVerdict::inconclusive;
  // j -> g with M ≅ sigma(M)^g for sigma = (1 j); filled when stable.
  std::map<int, GroupElement> g;
  int failed_j = 0;  // first generator without an isomorphism
};
// Checks the generators (1 j), 2 <= j <= r. One candidate g per support
// vertex of the anchor's parity.
StabilityResult s_r_stable(const CoverRep& m, std::uint64_t seed = 0);

struct CenterReport {
  Word center;
  // layer[n] = D(n, c): total dimension at distance n from the center.
  std::vector<std::size_t> layer;
  bool layers_divisible = false;  // r | D(n,c) for n >= 1
  bool dims_divisible = false;    // r | a or r | b
};
// Requires a stable result. Throws std::logic_error if the maps sigma o g
// have no common fixed vertex on the support.
CenterReport center_and_divisibility(const CoverRep& m, const StabilityResult& s);

// The permutation matrix with entry (i, sigma(i)) equal to 1.
Matrix permutation_matrix(const Permutation& s, FieldSpec f = {});
// (A.M)(gamma_j) = sum_i (A^{-1})_{ij} M(gamma_i). Throws std::invalid_argument
// for singular or wrongly sized A.
KroneckerRep gl_act(const Matrix& a, const KroneckerRep& m);

struct GlProbe {
  enum class Verdict { not_stable, consistent_with_stable, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::optional<Matrix> witness;  // A with A.M not isomorphic to M
  int draws = 0;
  // Set when a cover lift is given whose dim vector has r dividing neither
  // entry: the lift then cannot be S_r-stable.
  bool divisibility_obstruction = false;
};
std::string to_string(GlProbe::Verdict v);
// Transposition matrices first, then seeded random invertible matrices.
GlProbe gl_stability_probe(const KroneckerRep& m, int draws = 8, std::uint64_t seed = 0,
                           const std::optional<CoverRep>& lift = std::nullopt);

}  // namespace repkit
