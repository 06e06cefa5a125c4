#include "repkit/symmetry.hpp"

#include <random>
#include <stdexcept>

namespace repkit {

Permutation identity_permutation(int r) {
  Permutation s(r);
  for (int i = 0; i < r; ++i) s[i] = i + 1;
  return s;
}

Permutation transposition(int r, int i, int j) {
  if (i < 1 || j < 1 || i > r || j > r) throw std::invalid_argument("transposition: index out of range");
  Permutation s = identity_permutation(r);
  std::swap(s[i - 1], s[j - 1]);
  return s;
}

bool is_permutation(const Permutation& s) {
  std::vector<bool> seen(s.size() + 1, false);
  for (int v : s) {
    if (v < 1 || v > static_cast<int>(s.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation permutation_inverse(const Permutation& s) {
  Permutation t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[s[i] - 1] = static_cast<int>(i) + 1;
  return t;
}

Permutation permutation_compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("permutation_compose: size mismatch");
  Permutation u(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) u[i] = s[t[i] - 1];
  return u;
}

Word relabel(const Permutation& s, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int c : w) out.push_back(s.at(c - 1));
  return out;
}

CoverRep sigma_rep(const Permutation& s, const CoverRep& m) {
  if (static_cast<int>(s.size()) != m.r || !is_permutation(s))
    throw std::invalid_argument("sigma_rep: not a permutation of {1..r}");
  // The new rep lives on sigma^{-1}(supp M).
  Permutation inv = permutation_inverse(s);
  CoverRep out;
  out.r = m.r;
  out.field = m.field;
  for (const auto& [v, d] : m.dims) out.dims[relabel(inv, v)] = d;
  for (const auto& [a, mat] : m.maps) out.maps[ArrowKey(relabel(inv, a.first), inv[a.second - 1])] = mat;
  return out;
}

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::stable: return "stable";
    case StabilityVerdict::not_stable: return "not_stable";
    case StabilityVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

StabilityResult s_r_stable(const CoverRep& m, std::uint64_t seed) {
  if (m.empty()) throw std::invalid_argument("s_r_stable: empty representation");
  StabilityResult res;
  const Word& anchor = m.dims.begin()->first;
  const std::size_t anchor_dim = m.dims.begin()->second;
  bool unsure = false;
  for (int j = 2; j <= m.r; ++j) {
    CoverRep n = sigma_rep(transposition(m.r, 1, j), m);
    std::optional<GroupElement> found;
    bool maybe = false;
    for (const auto& [v, d] : n.dims) {
      if (is_source(v) != is_source(anchor) || d != anchor_dim) continue;
      GroupElement g = transporter(anchor, v);
      CoverRep s = shift(n, g);
      if (s.dims != m.dims) continue;
      auto t = iso_test(s, m, seed + static_cast<std::uint64_t>(j));
      if (t.verdict == IsoVerdict::iso) {
        found = g;
        break;
      }
      if (t.verdict == IsoVerdict::probably_not) maybe = true;
    }
    if (found) {
      res.g[j] = *found;
      continue;
    }
    if (!res.failed_j) res.failed_j = j;
    if (maybe) {
      unsure = true;
    } else {
      res.verdict = StabilityVerdict::not_stable;
      return res;
    }
  }
  res.verdict = unsure ? StabilityVerdict::inconclusive : StabilityVerdict::stable;
  if (!unsure) res.failed_j = 0;
  return res;
}

CenterReport center_and_divisibility(const CoverRep& m, const StabilityResult& s) {
  if (s.verdict != StabilityVerdict::stable || static_cast<int>(s.g.size()) != m.r - 1)
    throw std::invalid_argument("center_and_divisibility: needs a stable result");
  // phi_j(x) = sigma_j(g_j . x) permutes the support; M_x = M_{phi_j(x)}.
  VertexSet fixed = m.support();
  for (const auto& [j, g] : s.g) {
    Permutation sj = transposition(m.r, 1, j);
    VertexSet keep;
    for (const auto& x : m.dims) {
      Word y = relabel(sj, act(g, x.first));
      auto it = m.dims.find(y);
      if (it == m.dims.end() || it->second != x.second)
        throw std::logic_error("center_and_divisibility: sigma o g does not preserve the support");
      if (y == x.first && fixed.count(y)) keep.insert(y);
    }
    fixed = std::move(keep);
  }
  if (fixed.empty()) throw std::logic_error("center_and_divisibility: no common fixed vertex");
  CenterReport rep;
  rep.center = *fixed.begin();
  for (const auto& [x, d] : m.dims) {
    std::size_t n = distance(rep.center, x);
    if (rep.layer.size() <= n) rep.layer.resize(n + 1, 0);
    rep.layer[n] += d;
  }
  rep.layers_divisible = true;
  for (std::size_t n = 1; n < rep.layer.size(); ++n)
    if (rep.layer[n] % static_cast<std::size_t>(m.r)) rep.layers_divisible = false;
  DimVector dv = m.dim_vector();
  rep.dims_divisible = dv.a % m.r == 0 || dv.b % m.r == 0;
  return rep;
}

Matrix permutation_matrix(const Permutation& s, FieldSpec f) {
  if (!is_permutation(s)) throw std::invalid_argument("permutation_matrix: not a permutation");
  Matrix a(f, s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) a.set(i, s[i] - 1, 1);
  return a;
}

KroneckerRep gl_act(const Matrix& a, const KroneckerRep& m) {
  const auto r = static_cast<std::size_t>(m.r);
  if (a.rows() != r || a.cols() != r || !(a.field() == m.field))
    throw std::invalid_argument("gl_act: matrix must be r x r over the rep's field");
  auto inv = inverse(a);
  if (!inv) throw std::invalid_argument("gl_act: singular matrix");
  KroneckerRep out = m;
  for (std::size_t j = 0; j < r; ++j) {
    Matrix acc(m.field, m.d2, m.d1);
    for (std::size_t i = 0; i < r; ++i) acc.add_scaled(m.mats[i], inv->block(i, j, 1, 1));
    out.mats[j] = std::move(acc);
  }
  return out;
}

std::string to_string(GlProbe::Verdict v) {
  switch (v) {
    case GlProbe::Verdict::not_stable: return "not_stable";
    case GlProbe::Verdict::consistent_with_stable: return "consistent_with_stable";
    case GlProbe::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

GlProbe gl_stability_probe(const KroneckerRep& m, int draws, std::uint64_t seed,
                           const std::optional<CoverRep>& lift) {
  GlProbe res;
  if (lift) {
    DimVector d = lift->dim_vector();
    res.divisibility_obstruction = d.a % m.r != 0 && d.b % m.r != 0;
  }
  std::vector<Matrix> candidates;
  for (int j = 2; j <= m.r; ++j) candidates.push_back(permutation_matrix(transposition(m.r, 1, j), m.field));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < draws; ++k) {
    Matrix a = Matrix::random(m.field, m.r, m.r, rng);
    if (inverse(a)) candidates.push_back(std::move(a));
  }
  bool unsure = false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    ++res.draws;
    auto t = iso_test(gl_act(candidates[k], m), m, seed + k);
    if (t.verdict == IsoVerdict::not_iso) {
      res.verdict = GlProbe::Verdict::not_stable;
      res.witness = candidates[k];
      return res;
    }
    if (t.verdict == IsoVerdict::probably_not) unsure = true;
  }
  res.verdict = unsure ? GlProbe::Verdict::inconclusive : GlProbe::Verdict::consistent_with_stable;
  return res;
}

}  // namespace repkit
