#include "repkit/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "repkit/translation.hpp"

namespace repkit {

namespace {

bool disjoint(const CoverRep& a, const CoverRep& b) {
  for (const auto& [v, d] : a.dims)
    if (b.dims.count(v)) return false;
  return true;
}

// Label of the support edge at a leaf, if any.
std::optional<int> boundary_label(const CoverRep& m, const Word& v) {
  for (int j = 1; j <= m.r; ++j)
    if (m.dims.count(neighbor(v, j))) return j;
  return std::nullopt;
}

bool is_leaf(const CoverRep& m, const Word& v) {
  if (!m.dims.count(v)) return false;
  int deg = 0;
  for (int j = 1; j <= m.r; ++j) deg += m.dims.count(neighbor(v, j)) ? 1 : 0;
  return deg <= 1;
}

CoverMorphism identity_on(const CoverRep& m) {
  CoverMorphism f;
  for (const auto& [v, d] : m.dims) f.emplace(v, Matrix::identity(m.field, d));
  return f;
}

}  // namespace

std::optional<LeafConnection> leaf_connected(const CoverRep& n, const CoverRep& m) {
  if (n.r != m.r || n.empty() || m.empty() || !disjoint(n, m)) return std::nullopt;
  for (const auto& x : rep_leaves(m)) {
    if (!is_source(x)) continue;
    for (int j = 1; j <= m.r; ++j) {
      Word y = neighbor(x, j);
      if (is_leaf(n, y)) return LeafConnection{{x, j}, n, m};
    }
  }
  return std::nullopt;
}

ShiftedConnection make_leaf_connected(const CoverRep& n, const CoverRep& m, const Word& x, const Word& y) {
  if (!is_source(x) || !is_leaf(m, x)) throw std::invalid_argument("make_leaf_connected: x is not a source leaf of M");
  if (is_source(y) || !is_leaf(n, y)) throw std::invalid_argument("make_leaf_connected: y is not a sink leaf of N");
  auto dm = boundary_label(m, x), dn = boundary_label(n, y);
  int label = 0;
  for (int j = 1; j <= m.r && label == 0; ++j)
    if (j != dm.value_or(0) && j != dn.value_or(0)) label = j;
  if (label == 0) throw std::invalid_argument("make_leaf_connected: no free label (needs r >= 3)");
  Word z = neighbor(x, label);
  GroupElement g = transporter(z, y);
  CoverRep ng = shift(n, g);
  auto c = leaf_connected(ng, m);
  if (!c || c->arrow != ArrowKey{x, label})
    throw std::logic_error("make_leaf_connected: shifted pair is not leaf-connected along the chosen arrow");
  return {g, *c};
}

GlueResult glue(const LeafConnection& c, const std::optional<Matrix>& f) {
  const CoverRep& n = c.left;
  const CoverRep& m = c.right;
  const Word& x = c.arrow.first;
  Word y = arrow_target(c.arrow);
  std::size_t dx = m.dim_at(x), dy = n.dim_at(y);
  Matrix map;
  if (f) {
    map = *f;
  } else {
    if (dx != 1 || dy != 1) throw std::invalid_argument("glue: connecting map required for leaf spaces of dimension > 1");
    map = Matrix::identity(m.field, 1);
  }
  if (map.rows() != dy || map.cols() != dx) throw std::invalid_argument("glue: connecting map has the wrong shape");
  if (map.is_zero()) throw std::invalid_argument("glue: connecting map must be nonzero");
  GlueResult out;
  CoverRep& e = out.rep;
  e.r = m.r;
  e.field = m.field;
  e.dims = n.dims;
  e.dims.insert(m.dims.begin(), m.dims.end());
  e.maps = n.maps;
  e.maps.insert(m.maps.begin(), m.maps.end());
  e.maps[c.arrow] = map;
  out.sequence = {n, e, m, identity_on(n), identity_on(m)};
  return out;
}

ChainResult glue_chain(const std::vector<CoverRep>& pieces, const std::vector<Matrix>& maps) {
  if (pieces.size() < 2) throw std::invalid_argument("glue_chain: need at least two pieces");
  if (!maps.empty() && maps.size() + 1 != pieces.size())
    throw std::invalid_argument("glue_chain: one connecting map per consecutive pair");
  auto map_at = [&](std::size_t i) { return maps.empty() ? std::optional<Matrix>() : std::optional<Matrix>(maps[i]); };
  const std::size_t k = pieces.size();
  ChainResult out;
  out.from_left.push_back(pieces[0]);
  for (std::size_t i = 1; i < k; ++i) {
    auto c = leaf_connected(out.from_left.back(), pieces[i]);
    if (!c) throw std::invalid_argument("glue_chain: pieces " + std::to_string(i - 1) + ", " + std::to_string(i) +
                                        " are not leaf-connected");
    out.from_left.push_back(glue(*c, map_at(i - 1)).rep);
  }
  std::vector<CoverRep> right{pieces[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    auto c = leaf_connected(pieces[i], right.back());
    if (!c) throw std::invalid_argument("glue_chain: suffix starting at piece " + std::to_string(i) +
                                        " is not leaf-connected");
    right.push_back(glue(*c, map_at(i)).rep);
  }
  std::reverse(right.begin(), right.end());
  out.from_right = std::move(right);
  out.rep = out.from_left.back();
  if (!(out.rep == out.from_right.front())) throw std::logic_error("glue_chain: association changed the result");
  return out;
}

SandwichReport check_chain_bounds(const std::vector<CoverRep>& pieces, const ChainResult& chain) {
  SandwichReport s;
  TauOrbit full(chain.rep);
  s.d_minus = d_minus(full);
  s.d_plus = d_plus(full);
  s.lower_minus = s.lower_plus = s.upper_minus = s.upper_plus = -(1 << 30);
  for (const auto& z : chain.from_left) s.lower_minus = std::max(s.lower_minus, d_minus(z));
  for (const auto& z : chain.from_right) s.lower_plus = std::max(s.lower_plus, d_plus(z));
  for (const auto& p : pieces) {
    TauOrbit o(p);
    s.upper_minus = std::max(s.upper_minus, d_minus(o));
    s.upper_plus = std::max(s.upper_plus, d_plus(o));
  }
  s.minus_ok = s.lower_minus <= s.d_minus && s.d_minus <= s.upper_minus;
  s.plus_ok = s.lower_plus <= s.d_plus && s.d_plus <= s.upper_plus;
  return s;
}

ATree build_A_tree_rep(int l, int n, const Word& anchor, int anchor_label, int r, FieldSpec f) {
  if (l < 1 || n < 4 * l || n % 2 != 0) throw std::invalid_argument("build_A_tree_rep: need l >= 1, n even, n >= 4l");
  if (r < 3) throw std::invalid_argument("build_A_tree_rep: needs r >= 3");
  if (!is_source(anchor) || anchor_label < 1 || anchor_label > r)
    throw std::invalid_argument("build_A_tree_rep: anchor must be a source and the label in 1..r");
  ATree t;
  std::vector<int> labels;  // labels[k]: edge into spine[k]
  t.spine.push_back(neighbor(anchor, anchor_label));
  labels.push_back(anchor_label);
  for (int k = 1; k < n; ++k) {
    int lab = labels.back() == 1 ? 2 : 1;
    t.spine.push_back(neighbor(t.spine.back(), lab));
    labels.push_back(lab);
  }
  TreeSubgraph tree;
  tree.r = r;
  tree.vertices.insert(t.spine.begin(), t.spine.end());
  for (int i = 1; i <= l; ++i) {
    std::size_t at = 4 * i - 2;  // a_{4i-1}
    int lab = 1;
    while (lab == labels[at] || lab == labels[at + 1]) ++lab;
    t.teeth.push_back(neighbor(t.spine[at], lab));
    tree.vertices.insert(t.teeth.back());
  }
  if (!is_small_tree(tree)) throw std::logic_error("build_A_tree_rep: tree is not small");
  t.rep = thin_tree_rep(tree, f);
  int src = 0, snk = 0;
  for (const auto& v : leaves(tree)) ++(is_source(v) ? src : snk);
  if (src != l + 1 || snk != 1) throw std::logic_error("build_A_tree_rep: unexpected leaf count");
  return t;
}

FnResult family_Fn(const CoverRep& m, std::optional<int> p_opt) {
  FnResult out;
  DimVector d = m.dim_vector();
  out.dualised = d.a > d.b;
  out.base = out.dualised ? dual_cover(m) : m;
  const CoverRep& base = out.base;
  d = base.dim_vector();
  if (!is_balanced(base)) throw std::runtime_error("family_Fn: M is not balanced");
  TauOrbit mo(base);
  int dm = d_minus(mo), dp = d_plus(mo);
  if (dm < 2 || dp < 2) throw std::runtime_error("family_Fn: needs d^-(M), d^+(M) >= 2");
  out.l = static_cast<int>(2 * (d.b - d.a) + 1);
  out.p = p_opt.value_or(4 * out.l);
  if (out.p % 2 != 0 || out.p < 4 * out.l) throw std::invalid_argument("family_Fn: p must be even and at least 4l");

  VertexSet lv = rep_leaves(base);
  auto x = std::find_if(lv.begin(), lv.end(), [](const Word& v) { return is_source(v); });
  auto y = std::find_if(lv.begin(), lv.end(), [](const Word& v) { return !is_source(v); });
  int anchor_label = 1;
  while (base.dims.count(neighbor(*x, anchor_label))) ++anchor_label;
  ATree a = build_A_tree_rep(out.l, out.p, *x, anchor_label, base.r, base.field);
  if (!leaf_connected(a.rep, base)) throw std::logic_error("family_Fn: (L, M) not leaf-connected");
  auto sc = make_leaf_connected(base, a.rep, a.spine.back(), *y);
  out.g = sc.g;
  ChainResult chain = glue_chain({sc.connection.left, a.rep, base});
  out.rep = chain.rep;

  long long n = 2 * d.b + out.p / 2;
  out.expected = {n + 1, n};
  if (out.rep.dim_vector() != out.expected)
    throw std::runtime_error("family_Fn: push-down has dimension vector " + to_string(out.rep.dim_vector()) +
                             ", expected " + to_string(out.expected));
  if (!is_balanced(out.rep)) throw std::runtime_error("family_Fn: F is not balanced");
  if (is_quasi_simple(out.rep).route != "dimension") throw std::runtime_error("family_Fn: quasi-simplicity not certified");
  TauOrbit fo(out.rep);
  out.d_minus = d_minus(fo);
  out.d_plus = d_plus(fo);
  if (out.d_minus != dm || out.d_plus != dp)
    throw std::runtime_error("family_Fn: d-values of F differ from those of M");
  return out;
}

std::vector<CoverRep> family_Mn(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("family_Mn: n >= 1");
  std::vector<CoverRep> ms{thin_edge(3)};
  for (int k = 1; k < n; ++k) {
    const CoverRep& cur = ms[k - 1];
    CoverShortExact seq;
    std::optional<CoverRep> known;
    try {
      if (k % 2 == 1) {
        seq = ar_sequence(cur);
        if (k >= 2) known = ms[k - 2];
      } else {
        seq = ar_sequence(tau_inverse_cover(cur));
        known = ms[k - 2];
      }
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("family_Mn: unsupported at n = " + std::to_string(k + 1) + " (" + e.what() + ")");
    }
    CoverDecomposition dec = decompose(seq.middle, {seed});
    std::size_t expect = known ? 2 : 1;
    if (!dec.conclusive || dec.count() != expect)
      throw std::runtime_error("family_Mn: middle term at n = " + std::to_string(k + 1) + " has an unexpected shape");
    std::optional<CoverRep> next;
    for (const auto& s : dec.summands) {
      if (known && iso_test(s.rep, *known, seed).verdict == IsoVerdict::iso) continue;
      next = s.rep;
    }
    if (!next) throw std::runtime_error("family_Mn: could not separate the new summand");
    ms.push_back(*next);
  }
  return ms;
}

CoverRep family_M(int n, std::uint64_t seed) { return family_Mn(n, seed).back(); }

namespace {

// A source leaf a with a thin neighbour b in the support and dim A_a = 1.
bool has_thin_source_leaf(const CoverRep& a) {
  for (const auto& v : rep_leaves(a)) {
    if (!is_source(v) || a.dim_at(v) != 1) continue;
    auto lab = boundary_label(a, v);
    if (lab && a.dim_at(neighbor(v, *lab)) == 1) return true;
  }
  return false;
}

}  // namespace

WidthComponent width_m_component(int m, const WidthOptions& opt) {
  if (m < 1) throw std::invalid_argument("width_m_component: m >= 1");
  WidthComponent out;
  out.m = m;
  if (m == 1) {
    // The component of M_1 has no quasi-simple of dims (n+1, n); this thin
    // path [1] - x0 - [2] - [2,1] - [2,1,3] has (2,3) and width one.
    out.rep = thin_tree_rep(minimal_tree({Word{1}, Word{2, 1, 3}}, 3));
    out.recipe = "thin path [1] .. [2,1,3]";
  } else if (m == 2) {
    out.rep = build_X_cover(1, 3);
    out.recipe = "X^1";
  } else if (m % 2 == 1) {
    int n = m;
    CoverRep mn = family_M(n, opt.seed);
    auto f = family_Fn(mn, opt.p);
    out.rep = f.rep;
    out.recipe = "F from M_" + std::to_string(n) + ", l = " + std::to_string(f.l) + ", p = " + std::to_string(f.p);
  } else {
    int n = m - 1;
    auto a = family_Fn(family_M(n, opt.seed));
    if (!has_thin_source_leaf(a.rep)) throw std::runtime_error("width_m_component: no thin source leaf on A");
    CoverShortExact seq = ar_sequence(tau_inverse_cover(a.rep));
    const CoverRep& b = seq.middle;
    if (!is_balanced(b)) throw std::runtime_error("width_m_component: middle term B is not balanced");
    auto f = family_Fn(b, opt.p);
    out.rep = f.rep;
    out.recipe = "F from B (middle term ending at tau^-1 A, A from M_" + std::to_string(n) + "), l = " +
                 std::to_string(f.l) + ", p = " + std::to_string(f.p);
  }
  TauOrbit o(out.rep);
  out.report.ql = out.ql;
  out.report.d_minus = d_minus(o);
  out.report.d_plus = d_plus(o);
  out.report.width = out.report.d_plus + out.report.d_minus - out.ql;
  if (out.report.width != m)
    throw std::runtime_error("width_m_component: recomputed width " + std::to_string(out.report.width) +
                             " differs from " + std::to_string(m));
  return out;
}

}  // namespace repkit
