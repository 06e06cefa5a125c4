#pragma once

#include <string>
#include <vector>

#include "repkit/representations.hpp"

namespace repkit {

enum class SweepDirection { toward_tau, toward_tau_inverse };

// Two source-reflection sweeps (cokernels). Throws std::invalid_argument if
// the result is zero, i.e. the input was injective.
CoverRep tau_inverse_cover(const CoverRep& m);
// Two sink-reflection sweeps (kernels). Throws on projective input.
CoverRep tau_cover(const CoverRep& m);
CoverRep translate_cover(const CoverRep& m, SweepDirection dir);
// tau^k for k > 0, tau^{-k} for k < 0.
CoverRep tau_power_cover(const CoverRep& m, int k);

KroneckerRep tau_kronecker(const KroneckerRep& m, int power);

// tau^{-1}: (a,b) -> (rb - a, r(rb - a) - b); tau: (a,b) -> (r(ra - b) - a, ra - b).
DimVector coxeter_dim(const DimVector& d, int power, int r);

// A_0 = 0, A_1 = 1, A_{i+1} = r A_i - A_{i-1}; P_i has dimension vector (A_{i-1}, A_i).
long long a_sequence(int i, int r);

struct Position {
  enum class Kind { preprojective, preinjective, regular };
  Kind kind = Kind::regular;
  int index = 0;  // i for P_i / I_i
  std::string note;
};
std::string to_string(const Position& p);

// Follows tau and tau^{-1} while dimensions shrink; at most `cap` steps per direction.
Position classify_position(const KroneckerRep& m, int cap = 64);

}  // namespace repkit
