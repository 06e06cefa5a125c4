#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repkit/guard.hpp"
#include "repkit/representations.hpp"

namespace repkit {

// Every arrow of the cover touching the support is injective (resp.
// surjective). An arrow leaving the support counts as a map to zero.
bool is_inj(const CoverRep& m);
bool is_sur(const CoverRep& m);

struct EkpVerdict {
  enum class Status { yes_certified, no_with_witness, probably_yes };
  Status status = Status::probably_yes;
  std::vector<long long> witness;  // alpha with a rank-deficient pencil
  int samples = 0;
  std::string provenance;
};
std::string to_string(EkpVerdict::Status s);

struct EkpOptions {
  std::uint64_t seed = 0;
  int samples = 64;
};

// Equal kernels: every pencil sum_i alpha_i N(gamma_i) with alpha != 0 is
// injective. With cover provenance the verdict is certified by is_inj.
EkpVerdict ekp_check(const KroneckerRep& n, const std::optional<CoverRep>& provenance = std::nullopt,
                     const EkpOptions& opt = {});
// Equal images, by duality.
EkpVerdict eip_check(const KroneckerRep& n, const std::optional<CoverRep>& provenance = std::nullopt,
                     const EkpOptions& opt = {});

// tau^k X for a fixed X, computed on demand and kept.
class TauOrbit {
 public:
  explicit TauOrbit(CoverRep x) { cache_.emplace(0, std::move(x)); }
  const CoverRep& at(int k);  // tau^k X; k < 0 means tau^{-|k|}
  const CoverRep& base() const { return cache_.at(0); }
  bool computed(int k) const { return cache_.count(k) > 0; }

 private:
  std::map<int, CoverRep> cache_;
};

struct ScanOptions {
  int cap = kDefaultIterationCap;
  // Also confirm that the step past the boundary stays inside the cone.
  bool check_cone = false;
};

// d^-(X) = min { l : tau^{-l} X in Inj },  d^+(X) = min { l : tau^l X in Sur }.
// Throws GuardError past the cap and std::invalid_argument if the scan
// reaches a projective or injective (X not regular).
int d_minus(TauOrbit& orbit, const ScanOptions& opt = {});
int d_plus(TauOrbit& orbit, const ScanOptions& opt = {});
int d_minus(const CoverRep& x, const ScanOptions& opt = {});
int d_plus(const CoverRep& x, const ScanOptions& opt = {});

// d^+ + d^- - ql; throws std::logic_error when negative (wrong ql).
int width(const CoverRep& x, int ql);
int width(TauOrbit& orbit, int ql);

// dim Hom(pushdown A, pushdown B), summed over the connected pieces of
// supp A ∩ supp B^g for all deck transformations g.
std::size_t pushdown_hom_dim(const CoverRep& a, const CoverRep& b);

struct RankCell {
  enum class Source {
    direct,              // hom computed
    euler_duality,       // h(m) = <x, tau^m x> + h(1 - m)
    cone_separation,     // Hom(EIP, EKP) = 0
    euler_lower_bound,   // only h(m) >= <x, tau^m x> > 0 is known
    undetermined,
  };
  int m = 0;
  long long value = -1;  // dim rad(X, tau^m X); a lower bound for euler_lower_bound
  Source source = Source::undetermined;
  bool nonzero() const { return value > 0; }
  bool known() const { return source != Source::undetermined; }
};
std::string to_string(RankCell::Source s);

// Truncation of rk to the window [-B, B]: the least l in the window with
// all cells on [l, B] nonzero.
struct RankWindow {
  int radius = 0;
  std::map<int, RankCell> cells;
  int estimate = 0;
  bool determined = true;
  std::string note;
};

struct WindowOptions {
  // Cells whose hom would need reps above this total dimension are left to
  // the Euler certificates.
  std::size_t direct_limit = 2000;
};

// Dense version on a Kronecker representation (regular, quasi-simple).
RankWindow quasi_rank_window(const KroneckerRep& x, int radius, const WindowOptions& opt = {});
// Cover-backed version: homs on pushdowns are summed on the cover and cells
// below -(d^+ + d^-) come from cone separation.
RankWindow quasi_rank_window(TauOrbit& orbit, int radius, int d_minus_value, int d_plus_value,
                             std::size_t direct_limit = 400000);

struct ComponentReport {
  int d_minus = 0;
  int d_plus = 0;
  int ql = 1;
  int width = 0;
  RankWindow rank_window;
  int rank_estimate() const { return rank_window.estimate; }
};

struct RankWidthReport {
  ComponentReport report;
  int lower = 0, upper = 0;  // allowed interval for the estimate
  bool passed = false;
  std::string detail;
};

// Width on the cover, quasi-rank window on the pushdown; passes iff the
// estimate lies in [-W, min(1, -W + 3)]. Default radius is W + 6.
RankWidthReport verify_rank_width(const CoverRep& x, int ql, std::optional<int> radius = std::nullopt);

}  // namespace repkit
