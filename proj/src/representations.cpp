#include "repkit/representations.hpp"

#include <stdexcept>

#include "repkit/guard.hpp"

namespace repkit {

std::string to_string(const DimVector& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

long long euler_form(const DimVector& d, const DimVector& e, int r) {
  return d.a * e.a + d.b * e.b - static_cast<long long>(r) * d.a * e.b;
}

std::size_t CoverRep::dim_at(const Word& v) const {
  auto it = dims.find(v);
  return it == dims.end() ? 0 : it->second;
}

const Matrix* CoverRep::map_at(const Word& source, int label) const {
  auto it = maps.find({source, label});
  return it == maps.end() ? nullptr : &it->second;
}

Matrix CoverRep::map_or_zero(const Word& source, int label) const {
  if (auto* m = map_at(source, label)) return *m;
  return Matrix(field, dim_at(neighbor(source, label)), dim_at(source));
}

VertexSet CoverRep::support() const {
  VertexSet s;
  for (const auto& [v, d] : dims) s.insert(v);
  return s;
}

std::size_t CoverRep::total_dim() const {
  std::size_t t = 0;
  for (const auto& [v, d] : dims) t += d;
  return t;
}

DimVector CoverRep::dim_vector() const {
  DimVector dv;
  for (const auto& [v, d] : dims) (is_source(v) ? dv.a : dv.b) += static_cast<long long>(d);
  return dv;
}

void CoverRep::validate() const {
  if (r < 2) throw std::invalid_argument("cover representation needs r >= 2");
  for (const auto& [v, d] : dims) {
    if (!is_valid_word(v, r)) throw std::invalid_argument("invalid vertex word " + word_string(v));
    if (d == 0) throw std::invalid_argument("zero dimension stored at " + word_string(v));
  }
  for (const auto& [a, m] : maps) {
    if (!is_source(a.first) || a.second < 1 || a.second > r || !is_valid_word(a.first, r))
      throw std::invalid_argument("invalid arrow at " + word_string(a.first));
    Word t = arrow_target(a);
    if (!dims.count(a.first) || !dims.count(t))
      throw std::invalid_argument("arrow " + word_string(a.first) + " leaves the support");
    if (m.rows() != dims.at(t) || m.cols() != dims.at(a.first))
      throw std::invalid_argument("arrow " + word_string(a.first) + " has the wrong shape");
    if (!(m.field() == field)) throw std::invalid_argument("arrow matrix over the wrong field");
  }
}

void CoverRep::trim() {
  for (auto it = dims.begin(); it != dims.end();) it = it->second == 0 ? dims.erase(it) : std::next(it);
  for (auto it = maps.begin(); it != maps.end();) {
    bool keep = dims.count(it->first.first) && dims.count(arrow_target(it->first)) && !it->second.is_zero();
    it = keep ? std::next(it) : maps.erase(it);
  }
}

void KroneckerRep::validate() const {
  if (r < 2) throw std::invalid_argument("Kronecker representation needs r >= 2");
  if (mats.size() != static_cast<std::size_t>(r)) throw std::invalid_argument("expected r matrices");
  for (const auto& m : mats) {
    if (m.rows() != d2 || m.cols() != d1) throw std::invalid_argument("Kronecker matrix has the wrong shape");
    if (!(m.field() == field)) throw std::invalid_argument("Kronecker matrix over the wrong field");
  }
}

std::shared_ptr<const FiniteQuiver> kronecker_quiver(int r) {
  auto q = std::make_shared<FiniteQuiver>();
  q->vertex_count = 2;
  for (int i = 0; i < r; ++i) q->arrows.emplace_back(0, 1);
  return q;
}

FiniteRep to_finite(const KroneckerRep& m) {
  FiniteRep f;
  f.quiver = kronecker_quiver(m.r);
  f.field = m.field;
  f.dims = {m.d1, m.d2};
  f.maps = m.mats;
  return f;
}

KroneckerRep from_finite(const FiniteRep& f, int r) {
  KroneckerRep k;
  k.r = r;
  k.field = f.field;
  k.d1 = f.dims[0];
  k.d2 = f.dims[1];
  k.mats = f.maps;
  return k;
}

KroneckerMorphism to_kronecker_morphism(const Morphism& f) { return {f[0], f[1]}; }
Morphism to_morphism(const KroneckerMorphism& f) { return {f.f1, f.f2}; }

CoverWindow CoverWindow::over(const VertexSet& vs, int r) {
  CoverWindow w;
  w.r = r;
  auto q = std::make_shared<FiniteQuiver>();
  for (const auto& v : vs) {
    w.index[v] = w.vertices.size();
    w.vertices.push_back(v);
  }
  for (const auto& v : w.vertices) {
    if (!is_source(v)) continue;
    for (int j = 1; j <= r; ++j) {
      auto it = w.index.find(neighbor(v, j));
      if (it == w.index.end()) continue;
      w.arrows.emplace_back(v, j);
      q->arrows.emplace_back(w.index[v], it->second);
    }
  }
  q->vertex_count = w.vertices.size();
  w.quiver = std::move(q);
  return w;
}

VertexSet joint_support(const CoverRep& m, const CoverRep& n) {
  VertexSet s = m.support();
  for (const auto& [v, d] : n.dims) s.insert(v);
  return s;
}

FiniteRep to_finite(const CoverRep& m, const CoverWindow& w) {
  FiniteRep f;
  f.quiver = w.quiver;
  f.field = m.field;
  for (const auto& v : w.vertices) f.dims.push_back(m.dim_at(v));
  for (const auto& a : w.arrows) f.maps.push_back(m.map_or_zero(a.first, a.second));
  return f;
}

CoverRep from_finite(const FiniteRep& f, const CoverWindow& w) {
  CoverRep m;
  m.r = w.r;
  m.field = f.field;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (f.dims[i]) m.dims[w.vertices[i]] = f.dims[i];
  for (std::size_t a = 0; a < w.arrows.size(); ++a)
    if (f.maps[a].size() && !f.maps[a].is_zero()) m.maps[w.arrows[a]] = f.maps[a];
  return m;
}

CoverMorphism to_cover_morphism(const Morphism& f, const CoverWindow& w) {
  CoverMorphism out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (f[i].size()) out[w.vertices[i]] = f[i];
  return out;
}

Morphism to_morphism(const CoverMorphism& f, const CoverRep& m, const CoverRep& n, const CoverWindow& w) {
  Morphism out;
  for (const auto& v : w.vertices) {
    auto it = f.find(v);
    out.push_back(it != f.end() ? it->second : Matrix(m.field, n.dim_at(v), m.dim_at(v)));
  }
  return out;
}

namespace {

struct BlockLayout {
  std::map<Word, std::size_t, CanonicalLess> offset;
  std::size_t d1 = 0, d2 = 0;
};

BlockLayout layout(const CoverRep& m) {
  BlockLayout b;
  for (const auto& [v, d] : m.dims) {
    std::size_t& total = is_source(v) ? b.d1 : b.d2;
    b.offset[v] = total;
    total += d;
  }
  return b;
}

// Hard cap on dense push-down storage, in matrix entries.
constexpr std::size_t kMaxDenseEntries = 200'000'000;

}  // namespace

KroneckerRep pushdown(const CoverRep& m) {
  BlockLayout b = layout(m);
  if (b.d1 * b.d2 * static_cast<std::size_t>(m.r) > kMaxDenseEntries)
    throw GuardError("pushdown: dense Kronecker matrices of size " + std::to_string(b.d2) + "x" +
                     std::to_string(b.d1) + " are too large");
  KroneckerRep k;
  k.r = m.r;
  k.field = m.field;
  k.d1 = b.d1;
  k.d2 = b.d2;
  for (int j = 0; j < m.r; ++j) k.mats.emplace_back(m.field, b.d2, b.d1);
  for (const auto& [a, mat] : m.maps)
    k.mats[a.second - 1].set_block(b.offset.at(arrow_target(a)), b.offset.at(a.first), mat);
  return k;
}

KroneckerMorphism pushdown(const CoverMorphism& f, const CoverRep& m, const CoverRep& n) {
  BlockLayout bm = layout(m), bn = layout(n);
  KroneckerMorphism out{Matrix(m.field, bn.d1, bm.d1), Matrix(m.field, bn.d2, bm.d2)};
  for (const auto& [v, c] : f) {
    if (!m.dims.count(v) || !n.dims.count(v)) continue;
    (is_source(v) ? out.f1 : out.f2).set_block(bn.offset.at(v), bm.offset.at(v), c);
  }
  return out;
}

std::vector<CoverMorphism> hom_basis(const CoverRep& m, const CoverRep& n) {
  CoverWindow w = CoverWindow::over(joint_support(m, n), m.r);
  std::vector<CoverMorphism> out;
  for (const auto& h : hom_basis(to_finite(m, w), to_finite(n, w))) out.push_back(to_cover_morphism(h, w));
  return out;
}

std::size_t hom_dim(const CoverRep& m, const CoverRep& n) {
  CoverWindow w = CoverWindow::over(joint_support(m, n), m.r);
  return hom_dim(to_finite(m, w), to_finite(n, w));
}

std::vector<KroneckerMorphism> hom_basis(const KroneckerRep& m, const KroneckerRep& n) {
  std::vector<KroneckerMorphism> out;
  for (const auto& h : hom_basis(to_finite(m), to_finite(n))) out.push_back(to_kronecker_morphism(h));
  return out;
}

std::size_t hom_dim(const KroneckerRep& m, const KroneckerRep& n) { return hom_dim(to_finite(m), to_finite(n)); }

bool is_morphism(const CoverRep& m, const CoverRep& n, const CoverMorphism& f) {
  CoverWindow w = CoverWindow::over(joint_support(m, n), m.r);
  for (const auto& [v, c] : f)
    if (!w.index.count(v) || c.rows() != n.dim_at(v) || c.cols() != m.dim_at(v)) return false;
  return is_morphism(to_finite(m, w), to_finite(n, w), to_morphism(f, m, n, w));
}

bool is_morphism(const KroneckerRep& m, const KroneckerRep& n, const KroneckerMorphism& f) {
  return is_morphism(to_finite(m), to_finite(n), to_morphism(f));
}

namespace {

std::size_t checked_ext(std::size_t by_presentation, std::size_t hom, long long euler) {
  if (static_cast<long long>(hom) - static_cast<long long>(by_presentation) != euler)
    throw std::logic_error("ext_dim: presentation and Euler form disagree");
  return by_presentation;
}

}  // namespace

std::size_t ext_dim(const KroneckerRep& m, const KroneckerRep& n) {
  FiniteRep fm = to_finite(m), fn = to_finite(n);
  return checked_ext(ext_dim_by_presentation(fm, fn), hom_dim(fm, fn),
                     euler_form(m.dim_vector(), n.dim_vector(), m.r));
}

std::size_t ext_dim(const CoverRep& m, const CoverRep& n) {
  VertexSet vs = joint_support(m, n);
  for (const auto& [v, d] : m.dims)
    if (is_source(v))
      for (int j = 1; j <= m.r; ++j) vs.insert(neighbor(v, j));
  CoverWindow w = CoverWindow::over(vs, m.r);
  FiniteRep fm = to_finite(m, w), fn = to_finite(n, w);
  return checked_ext(ext_dim_by_presentation(fm, fn), hom_dim(fm, fn), euler_form(m, n));
}

long long euler_form(const CoverRep& m, const CoverRep& n) {
  long long s = 0;
  for (const auto& [v, d] : m.dims) {
    s += static_cast<long long>(d * n.dim_at(v));
    if (is_source(v))
      for (int j = 1; j <= m.r; ++j) s -= static_cast<long long>(d * n.dim_at(neighbor(v, j)));
  }
  return s;
}

CoverRep shift(const CoverRep& m, const GroupElement& g) {
  GroupElement gi = group_inverse(g);
  CoverRep out;
  out.r = m.r;
  out.field = m.field;
  for (const auto& [v, d] : m.dims) out.dims[act(gi, v)] = d;
  for (const auto& [a, mat] : m.maps) out.maps[{act(gi, a.first), a.second}] = mat;
  return out;
}

CoverRep dual_cover(const CoverRep& m) {
  CoverRep out;
  out.r = m.r;
  out.field = m.field;
  for (const auto& [v, d] : m.dims) out.dims[phi(v)] = d;
  for (const auto& [a, mat] : m.maps) out.maps[{phi(arrow_target(a)), a.second}] = mat.transpose();
  return out;
}

KroneckerRep dual(const KroneckerRep& m) {
  KroneckerRep out;
  out.r = m.r;
  out.field = m.field;
  out.d1 = m.d2;
  out.d2 = m.d1;
  for (const auto& x : m.mats) out.mats.push_back(x.transpose());
  return out;
}

CoverRep direct_sum(const CoverRep& a, const CoverRep& b) {
  CoverRep s;
  s.r = a.r;
  s.field = a.field;
  for (const auto& v : joint_support(a, b)) s.dims[v] = a.dim_at(v) + b.dim_at(v);
  std::map<ArrowKey, bool, ArrowLess> keys;
  for (const auto& [k, m] : a.maps) keys[k] = true;
  for (const auto& [k, m] : b.maps) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    Word t = arrow_target(k);
    Matrix m(a.field, s.dim_at(t), s.dim_at(k.first));
    if (auto* x = a.map_at(k.first, k.second)) m.set_block(0, 0, *x);
    if (auto* y = b.map_at(k.first, k.second)) m.set_block(a.dim_at(t), a.dim_at(k.first), *y);
    s.maps[k] = std::move(m);
  }
  return s;
}

KroneckerRep direct_sum(const KroneckerRep& a, const KroneckerRep& b) {
  return from_finite(direct_sum(to_finite(a), to_finite(b)), a.r);
}

CoverSubquotient kernel_rep(const CoverRep& m, const CoverRep& n, const CoverMorphism& f) {
  CoverWindow w = CoverWindow::over(joint_support(m, n), m.r);
  auto k = kernel_rep(to_finite(m, w), to_morphism(f, m, n, w));
  return {from_finite(k.rep, w), to_cover_morphism(k.map, w)};
}

CoverSubquotient cokernel_rep(const CoverRep& m, const CoverRep& n, const CoverMorphism& f) {
  CoverWindow w = CoverWindow::over(joint_support(m, n), m.r);
  auto c = cokernel_rep(to_finite(n, w), to_morphism(f, m, n, w));
  return {from_finite(c.rep, w), to_cover_morphism(c.map, w)};
}

KroneckerSubquotient kernel_rep(const KroneckerRep& m, const KroneckerMorphism& f) {
  auto k = kernel_rep(to_finite(m), to_morphism(f));
  return {from_finite(k.rep, m.r), to_kronecker_morphism(k.map)};
}

KroneckerSubquotient cokernel_rep(const KroneckerRep& n, const KroneckerMorphism& f) {
  auto c = cokernel_rep(to_finite(n), to_morphism(f));
  return {from_finite(c.rep, n.r), to_kronecker_morphism(c.map)};
}

std::optional<StandardName> parse_standard_name(const std::string& s) {
  if (s == "P1") return StandardName::P1;
  if (s == "P2") return StandardName::P2;
  if (s == "I1") return StandardName::I1;
  if (s == "I2") return StandardName::I2;
  if (s == "S1") return StandardName::S1;
  if (s == "S2") return StandardName::S2;
  return std::nullopt;
}

namespace {

KroneckerRep zero_kronecker(int r, FieldSpec f, std::size_t d1, std::size_t d2) {
  KroneckerRep k;
  k.r = r;
  k.field = f;
  k.d1 = d1;
  k.d2 = d2;
  for (int j = 0; j < r; ++j) k.mats.emplace_back(f, d2, d1);
  return k;
}

}  // namespace

KroneckerRep standard_rep(StandardName name, int r, FieldSpec f) {
  if (r < 2) throw std::invalid_argument("standard_rep needs r >= 2");
  switch (name) {
    case StandardName::P1:
    case StandardName::S2:
      return zero_kronecker(r, f, 0, 1);
    case StandardName::I1:
    case StandardName::S1:
      return zero_kronecker(r, f, 1, 0);
    case StandardName::P2: {
      auto k = zero_kronecker(r, f, 1, r);
      for (int j = 0; j < r; ++j) k.mats[j].set(j, 0, 1);
      return k;
    }
    case StandardName::I2:
      return dual(standard_rep(StandardName::P2, r, f));
  }
  throw std::invalid_argument("unknown standard representation");
}

KroneckerRep build_X_alpha(const Matrix& alpha, int r) {
  if (alpha.rows() != static_cast<std::size_t>(r) || alpha.cols() != 1)
    throw std::invalid_argument("build_X_alpha: alpha must have r entries");
  if (alpha.is_zero()) throw std::invalid_argument("build_X_alpha: alpha must be nonzero");
  KroneckerRep p2 = standard_rep(StandardName::P2, r, alpha.field());
  KroneckerMorphism iota{Matrix(alpha.field(), 1, 0), alpha};
  return cokernel_rep(p2, iota).rep;
}

KroneckerRep build_X_alpha(const std::vector<long long>& alpha, int r, FieldSpec f) {
  return build_X_alpha(Matrix::from_ints(f, alpha.size(), 1, alpha), r);
}

CoverRep build_X_cover(int i, int r, FieldSpec f) {
  if (i < 1 || i > r) throw std::invalid_argument("build_X_cover: label out of range");
  CoverRep m;
  m.r = r;
  m.field = f;
  m.dims[Word{}] = 1;
  for (int j = 1; j <= r; ++j) {
    if (j == i) continue;
    m.dims[Word{j}] = 1;
    m.maps[{Word{}, j}] = Matrix::identity(f, 1);
  }
  return m;
}

CoverRep thin_tree_rep(const TreeSubgraph& t, FieldSpec f) {
  if (t.vertices.empty() || !is_connected(t)) throw std::invalid_argument("thin_tree_rep: tree is not connected");
  CoverRep m;
  m.r = t.r;
  m.field = f;
  for (const auto& v : t.vertices) m.dims[v] = 1;
  for (const auto& e : t.edges()) m.maps[e] = Matrix::identity(f, 1);
  return m;
}

CoverRep thin_edge(int r, FieldSpec f) { return thin_tree_rep(minimal_tree({Word{}, Word{1}}, r), f); }

CoverRep simple_at(const Word& v, int r, FieldSpec f) {
  if (!is_valid_word(v, r)) throw std::invalid_argument("simple_at: invalid vertex");
  CoverRep m;
  m.r = r;
  m.field = f;
  m.dims[v] = 1;
  return m;
}

TreeSubgraph support_tree(const CoverRep& m) { return TreeSubgraph{m.r, m.support()}; }

VertexSet rep_leaves(const CoverRep& m) { return leaves(support_tree(m)); }

bool has_leaves_in_both_fibers(const CoverRep& m) {
  TreeSubgraph t = support_tree(m);
  if (t.vertices.empty() || !is_connected(t)) return false;
  bool src = false, snk = false;
  for (const auto& v : leaves(t)) (is_source(v) ? src : snk) = true;
  return src && snk;
}

}  // namespace repkit
