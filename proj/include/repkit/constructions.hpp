#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repkit/decomposition.hpp"
#include "repkit/invariants.hpp"
#include "repkit/representations.hpp"

namespace repkit {

// (N, M) joined by the arrow source -> neighbor(source, label), where the
// source is a leaf of M and the target a leaf of N; supports are disjoint.
struct LeafConnection {
  ArrowKey arrow;
  CoverRep left;   // N
  CoverRep right;  // M
};

std::optional<LeafConnection> leaf_connected(const CoverRep& n, const CoverRep& m);

struct ShiftedConnection {
  GroupElement g;
  LeafConnection connection;  // (N^g, M)
};
// x a source leaf of M, y a sink leaf of N. Picks an arrow x -> z whose
// label avoids the boundary labels at x and y, and g with g.z = y.
ShiftedConnection make_leaf_connected(const CoverRep& n, const CoverRep& m, const Word& x, const Word& y);

struct GlueResult {
  CoverRep rep;
  CoverShortExact sequence;  // 0 -> N -> N * M -> M -> 0
};
// f : M_x -> N_y, nonzero. Defaults to [1] when both leaf spaces are 1-dimensional.
GlueResult glue(const LeafConnection& c, const std::optional<Matrix>& f = std::nullopt);

struct ChainResult {
  CoverRep rep;
  std::vector<CoverRep> from_left;   // [i] = M_n * ... * M_{i+1}, i = 0..n-1 (index in pieces order)
  std::vector<CoverRep> from_right;  // [i] = M_{i+1} * ... * M_1
};
// pieces = (M_n, ..., M_1), consecutive pairs leaf-connected. maps[i] joins
// pieces[i] and pieces[i+1]; default [1].
ChainResult glue_chain(const std::vector<CoverRep>& pieces, const std::vector<Matrix>& maps = {});

struct SandwichReport {
  bool minus_ok = false, plus_ok = false;
  int d_minus = 0, d_plus = 0;
  int lower_minus = 0, upper_minus = 0, lower_plus = 0, upper_plus = 0;
};
// max d^-(*_{j>=i}) <= d^-(full) <= max d^-(M_i), and dually for d^+.
SandwichReport check_chain_bounds(const std::vector<CoverRep>& pieces, const ChainResult& chain);

struct ATree {
  CoverRep rep;
  std::vector<Word> spine;  // a_1 .. a_n
  std::vector<Word> teeth;  // t_1 .. t_l, t_i attached to a_{4i-1}
};
// Thin rep on a spine a_1..a_n (a_1 a sink next to the source `anchor` along
// anchor_label, not included) with teeth at a_3, a_7, ..., a_{4l-1}.
// Labels are the smallest admissible ones.
ATree build_A_tree_rep(int l, int n, const Word& anchor, int anchor_label, int r = 3, FieldSpec f = {});

struct FnResult {
  CoverRep rep;
  CoverRep base;  // M after the optional dualisation
  bool dualised = false;
  int l = 0, p = 0;
  GroupElement g;
  DimVector expected;
  int d_minus = 0, d_plus = 0;
};
// F = M^g * L * M with L of type A_{l,p}, l = 2(b - a) + 1 for pushdown dims
// (a, b), a <= b after dualising. p defaults to 4l. Every claimed property
// is re-verified; failures throw std::runtime_error.
FnResult family_Fn(const CoverRep& m, std::optional<int> p = std::nullopt);

// M_1 = thin edge; M_{n+1} from the almost split sequence ending at M_n (n
// odd) or at tau^{-1} M_n (n even). ql(M_n) = n.
std::vector<CoverRep> family_Mn(int n, std::uint64_t seed = 0);
CoverRep family_M(int n, std::uint64_t seed = 0);

struct WidthComponent {
  int m = 0;
  CoverRep rep;
  int ql = 1;
  ComponentReport report;  // d-values and width; rank window left empty
  std::string recipe;
};
struct WidthOptions {
  std::uint64_t seed = 0;
  std::optional<int> p;  // length of the A-tree in the last gluing step
};
WidthComponent width_m_component(int m, const WidthOptions& opt = {});

}  // namespace repkit
