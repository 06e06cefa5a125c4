#include "repkit/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "repkit/translation.hpp"

namespace repkit {

namespace {

std::size_t flat_length(const FiniteRep& m) {
  std::size_t len = 0;
  for (auto d : m.dims) len += d * d;
  return len;
}

}  // namespace

EndAlgebra::EndAlgebra(const FiniteRep& m) : rep_(m), basis_(hom_basis(m, m)) {
  const FieldSpec f = m.field;
  const std::size_t n = basis_.size();
  // Rows of the transposed flattening; its pivots pick independent positions.
  std::vector<Pos> all;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    for (std::size_t i = 0; i < m.dims[v]; ++i)
      for (std::size_t j = 0; j < m.dims[v]; ++j) all.push_back({v, i, j});
  Matrix bt(f, n, flat_length(m));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < all.size(); ++k) bt.copy_entry(b, k, basis_[b][all[k].v], all[k].i, all[k].j);
  Matrix red = bt;
  auto piv = rref_in_place(red);
  Matrix sub(f, n, n);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    pivots_.push_back(all[piv[r]]);
    for (std::size_t b = 0; b < n; ++b) sub.copy_entry(r, b, bt, b, piv[r]);
  }
  auto inv = inverse(sub);
  if (!inv) throw std::logic_error("EndAlgebra: dependent basis");
  pivot_inv_ = std::move(*inv);
}

Matrix EndAlgebra::coords(const Morphism& x) const {
  Matrix v(rep_.field, pivots_.size(), 1);
  for (std::size_t k = 0; k < pivots_.size(); ++k) v.copy_entry(k, 0, x[pivots_[k].v], pivots_[k].i, pivots_[k].j);
  return pivot_inv_ * v;
}

Morphism EndAlgebra::element(const Matrix& c) const {
  std::vector<Matrix> coeffs;
  for (std::size_t i = 0; i < basis_.size(); ++i) coeffs.push_back(c.block(i, 0, 1, 1));
  return combine(basis_, coeffs);
}

Morphism EndAlgebra::random_element(std::mt19937_64& rng) const {
  return element(Matrix::random(rep_.field, basis_.size(), 1, rng));
}

Matrix EndAlgebra::entry(const Morphism& x, const Morphism& y, const Pos& p) const {
  std::size_t d = rep_.dims[p.v];
  return x[p.v].block(p.i, 0, 1, d) * y[p.v].block(0, p.j, d, 1);
}

Matrix EndAlgebra::left_mult(const Morphism& x) const {
  const std::size_t n = basis_.size();
  Matrix raw(rep_.field, n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < n; ++k) raw.set_block(k, b, entry(x, basis_[b], pivots_[k]));
  return pivot_inv_ * raw;
}

std::size_t EndAlgebra::trace_radical_dim() const {
  const std::size_t n = basis_.size();
  if (rep_.field.is_prime() && rep_.field.p <= n)
    throw std::logic_error("trace_radical_dim: characteristic too small for the trace criterion");
  std::vector<Matrix> l;
  for (const auto& b : basis_) l.push_back(left_mult(b));
  Matrix t(rep_.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix prod = l[i] * l[j];
      Matrix tr(rep_.field, 1, 1);
      for (std::size_t k = 0; k < n; ++k) tr = tr + prod.block(k, k, 1, 1);
      t.set_block(i, j, tr);
      t.set_block(j, i, tr);
    }
  return n - rank(t);
}

bool EndAlgebra::is_local() const { return dimension() - trace_radical_dim() == 1; }

std::size_t DecompositionResult::count() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.multiplicity;
  return c;
}
std::size_t CoverDecomposition::count() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.multiplicity;
  return c;
}
std::size_t KroneckerDecomposition::count() const {
  std::size_t c = 0;
  for (const auto& s : summands) c += s.second;
  return c;
}

namespace {

FiniteRep to_prime_rep(const FiniteRep& m, std::uint32_t p) {
  FiniteRep out = m;
  out.field = FieldSpec::prime_field(p);
  for (auto& a : out.maps) a = a.to_prime(p);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

// Minimal polynomial of x in End, monic, low degree first, as residues.
std::vector<std::uint64_t> minimal_polynomial(const EndAlgebra& a, const Morphism& x) {
  const FieldSpec f = a.rep().field;
  Matrix lx = a.left_mult(x);
  Matrix v = a.coords(identity_morphism(a.rep()));
  Matrix krylov(f, v.rows(), 0);
  for (;;) {
    if (krylov.cols()) {
      auto c = solve(krylov, v);
      if (c) {
        std::vector<std::uint64_t> poly;
        for (std::size_t i = 0; i < c->rows(); ++i) poly.push_back((f.p - c->residue_at(i, 0)) % f.p);
        poly.push_back(1);
        return poly;
      }
    }
    krylov = Matrix::hstack(krylov, v);
    v = lx * v;
  }
}

std::optional<std::uint64_t> some_root(const std::vector<std::uint64_t>& poly, std::uint64_t p,
                                       std::mt19937_64& rng) {
  // Scan from a random offset so that repeated draws do not favour small roots.
  std::uint64_t start = rng() % p;
  for (std::uint64_t k = 0; k < p; ++k) {
    std::uint64_t x = (start + k) % p, acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    if (acc == 0) return x;
  }
  return std::nullopt;
}

Matrix matrix_power(const Matrix& a, std::size_t e) {
  Matrix result = Matrix::identity(a.field(), a.rows()), base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

struct Splitter {
  DecomposeOptions opt;
  std::mt19937_64 rng;
  bool conclusive = true;
  std::size_t draws = 0;
  std::vector<FiniteRep> pieces;

  void run(const FiniteRep& m) {
    if (m.total_dim() == 0) return;
    EndAlgebra end(m);
    bool trace_ok = m.field.p > end.dimension();
    if (end.dimension() == 1 || (trace_ok && end.is_local())) {
      pieces.push_back(m);
      return;
    }
    const std::uint64_t p = m.field.p;
    for (int attempt = 0; attempt < opt.retry_budget; ++attempt) {
      ++draws;
      Morphism a = end.random_element(rng);
      auto root = some_root(minimal_polynomial(end, a), p, rng);
      if (!root) continue;
      Morphism f = a;
      for (std::size_t v = 0; v < f.size(); ++v)
        f[v] = f[v] - Matrix::identity(m.field, m.dims[v]).scaled(static_cast<long long>(*root));
      std::vector<Matrix> ker, img;
      std::size_t kdim = 0, idim = 0;
      for (std::size_t v = 0; v < f.size(); ++v) {
        Matrix pw = matrix_power(f[v], m.dims[v]);
        ker.push_back(kernel_basis(pw));
        img.push_back(image_basis(pw));
        kdim += ker.back().cols();
        idim += img.back().cols();
      }
      if (kdim == 0 || idim == 0) continue;  // a - root is nilpotent or invertible
      run(restrict_to(m, ker));
      run(restrict_to(m, img));
      return;
    }
    conclusive = false;
    pieces.push_back(m);
  }
};

}  // namespace

DecompositionResult decompose(const FiniteRep& input, const DecomposeOptions& opt) {
  DecompositionResult res;
  FiniteRep m = input;
  if (!m.field.is_prime()) {
    m = to_prime_rep(m, kDefaultPrime);
    res.note = "reduced modulo " + std::to_string(kDefaultPrime);
  }
  Splitter s{opt, std::mt19937_64(opt.seed), true, 0, {}};
  s.run(m);
  res.conclusive = s.conclusive;
  res.draws = s.draws;
  if (!s.conclusive) res.note += (res.note.empty() ? "" : "; ") + std::string("retry budget exhausted");
  // Group isomorphic pieces.
  for (auto& piece : s.pieces) {
    bool merged = false;
    for (auto& sm : res.summands) {
      if (sm.rep.dims != piece.dims) continue;
      if (iso_test(sm.rep, piece, opt.seed, opt.iso_draws).verdict == IsoVerdict::iso) {
        ++sm.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) res.summands.push_back({std::move(piece), 1});
  }
  return res;
}

CoverDecomposition decompose(const CoverRep& m, const DecomposeOptions& opt) {
  CoverWindow w = CoverWindow::over(m.support(), m.r);
  auto d = decompose(to_finite(m, w), opt);
  CoverDecomposition out;
  out.conclusive = d.conclusive;
  out.note = d.note;
  for (auto& s : d.summands) out.summands.push_back({from_finite(s.rep, w), s.multiplicity});
  return out;
}

KroneckerDecomposition decompose(const KroneckerRep& m, const DecomposeOptions& opt) {
  auto d = decompose(to_finite(m), opt);
  KroneckerDecomposition out;
  out.conclusive = d.conclusive;
  out.note = d.note;
  for (auto& s : d.summands) out.summands.emplace_back(from_finite(s.rep, m.r), s.multiplicity);
  return out;
}

std::optional<bool> is_indecomposable(const FiniteRep& m) {
  if (m.total_dim() == 0) return false;
  EndAlgebra end(m.field.is_prime() ? m : to_prime_rep(m, kDefaultPrime));
  if (end.dimension() == 1) return true;
  if (end.rep().field.p <= end.dimension()) return std::nullopt;
  std::size_t top = end.dimension() - end.trace_radical_dim();
  if (top == 1) return true;
  // A non-local End over F_p may still be a division algebra over it.
  auto d = decompose(end.rep());
  if (d.conclusive && d.count() > 1) return false;
  return std::nullopt;
}

std::optional<bool> is_indecomposable(const CoverRep& m) {
  CoverWindow w = CoverWindow::over(m.support(), m.r);
  return is_indecomposable(to_finite(m, w));
}

std::size_t end_dim(const CoverRep& m) { return hom_dim(m, m); }
bool is_brick(const CoverRep& m) { return !m.empty() && end_dim(m) == 1; }
bool is_brick(const KroneckerRep& m) { return m.total_dim() && hom_dim(m, m) == 1; }

bool is_balanced(const CoverRep& m) {
  if (!has_leaves_in_both_fibers(m)) return false;
  auto ind = is_indecomposable(m);
  return ind.value_or(false);
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::iso:
      return "iso";
    case IsoVerdict::not_iso:
      return "not_iso";
    case IsoVerdict::probably_not:
      return "probably_not";
  }
  return "probably_not";
}

IsoResult iso_test(const FiniteRep& m, const FiniteRep& n, std::uint64_t seed, int draws) {
  IsoResult res;
  if (m.dims != n.dims) {
    res.verdict = IsoVerdict::not_iso;
    return res;
  }
  auto basis = hom_basis(m, n);
  std::size_t em = hom_dim(m, m), en = hom_dim(n, n);
  if (basis.size() != em || basis.size() != en) {
    res.verdict = IsoVerdict::not_iso;
    return res;
  }
  if (m.total_dim() == 0) {
    res.verdict = IsoVerdict::iso;
    res.witness = basis.empty() ? zero_morphism(m, n) : basis.front();
    return res;
  }
  std::mt19937_64 rng(seed);
  for (int d = 0; d < draws; ++d) {
    ++res.draws;
    std::vector<Matrix> coeffs;
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs.push_back(Matrix::random(m.field, 1, 1, rng, 7));
    Morphism f = combine(basis, coeffs);
    if (is_isomorphism(f)) {
      res.verdict = IsoVerdict::iso;
      res.witness = std::move(f);
      return res;
    }
  }
  res.verdict = IsoVerdict::probably_not;
  return res;
}

IsoResult iso_test(const CoverRep& m, const CoverRep& n, std::uint64_t seed, int draws) {
  if (m.dims != n.dims) return {IsoVerdict::not_iso, 0, {}};
  CoverWindow w = CoverWindow::over(m.support(), m.r);
  return iso_test(to_finite(m, w), to_finite(n, w), seed, draws);
}

IsoResult iso_test(const KroneckerRep& m, const KroneckerRep& n, std::uint64_t seed, int draws) {
  return iso_test(to_finite(m), to_finite(n), seed, draws);
}

std::optional<GroupElement> find_shift_iso(const CoverRep& m, const CoverRep& n, std::uint64_t seed) {
  if (m.empty() || n.empty() || m.total_dim() != n.total_dim()) return std::nullopt;
  const Word& anchor = n.dims.begin()->first;
  for (const auto& [v, d] : m.dims) {
    if (is_source(v) != is_source(anchor) || d != n.dims.begin()->second) continue;
    GroupElement g = transporter(anchor, v);
    CoverRep s = shift(m, g);
    if (s.dims != n.dims) continue;
    if (iso_test(s, n, seed).verdict == IsoVerdict::iso) return g;
  }
  return std::nullopt;
}

namespace {

Matrix trace(const Morphism& f, FieldSpec field) {
  Matrix t(field, 1, 1);
  for (const auto& fv : f)
    for (std::size_t i = 0; i < fv.rows(); ++i) t = t + fv.block(i, i, 1, 1);
  return t;
}

}  // namespace

CoverShortExact ar_sequence(const CoverRep& x) {
  bool brick = is_brick(x);
  if (!brick && is_indecomposable(x) != true)
    throw std::invalid_argument("ar_sequence: input is not indecomposable");
  CoverRep tx = tau_cover(x);
  CoverWindow w = CoverWindow::over(joint_support(x, tx), x.r);
  FiniteRep fx = to_finite(x, w), ft = to_finite(tx, w);
  std::vector<Matrix> cocycle;
  if (brick) {
    ExtData ext = ext_cocycles(fx, ft);
    if (ext.dim != 1)
      throw std::logic_error("ar_sequence: dim Ext(X, tau X) = " + std::to_string(ext.dim) + " for a brick");
    cocycle = ext.cocycles.front();
  } else {
    // End(X) is local: rad End(X) is the trace-zero part, and the almost split
    // class spans the part of Ext(X, tau X) it annihilates.
    auto ends = hom_basis(fx, fx);
    Morphism one = identity_morphism(fx);
    auto inv = inverse(trace(one, x.field));
    if (!inv) throw std::invalid_argument("ar_sequence: characteristic divides dim X");
    std::vector<Morphism> rad;
    for (const auto& f : ends) {
      Matrix c = trace(f, x.field) * *inv;
      Morphism n = f;
      for (std::size_t v = 0; v < n.size(); ++v) n[v].add_scaled(one[v], -c);
      rad.push_back(std::move(n));
    }
    auto soc = ext_annihilated(fx, ft, rad);
    if (soc.size() != 1)
      throw std::logic_error("ar_sequence: socle of Ext(X, tau X) has dimension " + std::to_string(soc.size()));
    cocycle = soc.front();
  }
  ShortExact se = extension(ft, fx, cocycle);
  CoverShortExact out;
  out.left = tx;
  out.right = x;
  out.middle = from_finite(se.middle, w);
  out.inclusion = to_cover_morphism(se.inclusion, w);
  out.projection = to_cover_morphism(se.projection, w);
  // Nonsplit: the middle term is not the direct sum of the ends.
  FiniteRep split = direct_sum(ft, fx);
  if (hom_dim(se.middle, se.middle) == hom_dim(split, split) &&
      iso_test(se.middle, split).verdict == IsoVerdict::iso)
    throw std::logic_error("ar_sequence: extension splits");
  return out;
}

std::string to_string(QuasiSimpleVerdict v) {
  switch (v) {
    case QuasiSimpleVerdict::yes:
      return "yes";
    case QuasiSimpleVerdict::no:
      return "no";
    case QuasiSimpleVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

QuasiSimpleResult is_quasi_simple(const CoverRep& x, std::uint64_t seed) {
  DimVector d = x.dim_vector();
  if (d.a == d.b + 1 || d.b == d.a + 1) return {QuasiSimpleVerdict::yes, "dimension"};
  if (!is_brick(x)) return {QuasiSimpleVerdict::inconclusive, "not a brick"};
  auto seq = ar_sequence(x);
  auto dec = decompose(seq.middle, {seed});
  if (!dec.conclusive) return {QuasiSimpleVerdict::inconclusive, "ar-sequence"};
  return {dec.count() == 1 ? QuasiSimpleVerdict::yes : QuasiSimpleVerdict::no, "ar-sequence"};
}

}  // namespace repkit
