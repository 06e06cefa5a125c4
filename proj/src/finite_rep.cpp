#include "repkit/finite_rep.hpp"

#include <deque>
#include <stdexcept>

namespace repkit {

FiniteRep FiniteRep::zero(std::shared_ptr<const FiniteQuiver> q, FieldSpec f) {
  FiniteRep r;
  r.field = f;
  r.dims.assign(q->vertex_count, 0);
  for (std::size_t a = 0; a < q->arrows.size(); ++a) r.maps.emplace_back(f, 0, 0);
  r.quiver = std::move(q);
  return r;
}

std::size_t FiniteRep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

void FiniteRep::validate() const {
  if (!quiver) throw std::invalid_argument("representation without quiver");
  if (dims.size() != quiver->vertex_count || maps.size() != quiver->arrows.size())
    throw std::invalid_argument("representation does not match its quiver");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    auto [s, t] = quiver->arrows[a];
    if (maps[a].rows() != dims[t] || maps[a].cols() != dims[s])
      throw std::invalid_argument("arrow matrix has the wrong shape");
    if (!(maps[a].field() == field)) throw std::invalid_argument("arrow matrix over the wrong field");
  }
}

Morphism zero_morphism(const FiniteRep& m, const FiniteRep& n) {
  Morphism f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.emplace_back(m.field, n.dims[v], m.dims[v]);
  return f;
}

Morphism identity_morphism(const FiniteRep& m) {
  Morphism f;
  for (auto d : m.dims) f.push_back(Matrix::identity(m.field, d));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Matrix>& coeffs) {
  Morphism out = basis.at(0);
  for (auto& c : out) c = Matrix(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t v = 0; v < out.size(); ++v) out[v].add_scaled(basis[i][v], coeffs[i]);
  return out;
}

bool is_morphism(const FiniteRep& m, const FiniteRep& n, const Morphism& f) {
  if (f.size() != m.dims.size()) return false;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v].rows() != n.dims[v] || f[v].cols() != m.dims[v]) return false;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    if (!(f[t] * m.maps[a] == n.maps[a] * f[s])) return false;
  }
  return true;
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& c : f)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return true;
}

namespace {

// Coefficients of vec(N_a f_s) in the unknowns vec(f_s) (column-major).
void add_left_term(Matrix& l, std::size_t row0, std::size_t col0, const Matrix& na, std::size_t ds) {
  std::size_t et = na.rows(), es = na.cols();
  for (std::size_t j = 0; j < ds; ++j)
    for (std::size_t i = 0; i < et; ++i)
      for (std::size_t k = 0; k < es; ++k)
        if (!na.is_zero_at(i, k)) l.copy_entry(row0 + j * et + i, col0 + j * es + k, na, i, k);
}

// Coefficients of -vec(f_t M_a) in the unknowns vec(f_t).
void add_right_term(Matrix& l, std::size_t row0, std::size_t col0, const Matrix& ma, std::size_t et) {
  Matrix neg = -ma;
  std::size_t dt = ma.rows(), ds = ma.cols();
  for (std::size_t j = 0; j < ds; ++j)
    for (std::size_t k = 0; k < dt; ++k) {
      if (neg.is_zero_at(k, j)) continue;
      for (std::size_t i = 0; i < et; ++i) l.copy_entry(row0 + j * et + i, col0 + k * et + i, neg, k, j);
    }
}

struct ComponentSolution {
  std::vector<std::size_t> order;  // BFS order
  std::vector<long> parent;        // indexed by vertex, -1 for the root
  bool tree = true;
  // For tree components: per vertex local kernel (unknown layout: f_v then child coefficients).
  std::vector<Matrix> lambda;
  std::vector<std::vector<std::size_t>> children;
  // For dense components: kernel over the concatenated unknowns.
  Matrix dense_kernel;
  std::vector<std::size_t> dense_offset;
  std::size_t dim = 0;
};

class HomSolver {
 public:
  explicit HomSolver(const HomProblem& p) : p_(p), n_(p.d.size()) {
    in_s_.assign(n_, false);
    for (std::size_t v = 0; v < n_; ++v) in_s_[v] = p.d[v] > 0 && p.e[v] > 0;
    adj_.assign(n_, {});
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
      adj_[p.arrows[a].s].push_back(a);
      if (p.arrows[a].t != p.arrows[a].s) adj_[p.arrows[a].t].push_back(a);
    }
    comp_of_.assign(n_, -1);
    lambda_.assign(n_, Matrix());
    children_.assign(n_, {});
    parent_.assign(n_, -1);
  }

  std::size_t run(bool keep) {
    keep_ = keep;
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!in_s_[v] || comp_of_[v] >= 0) continue;
      comps_.push_back(solve_component(v));
      total += comps_.back().dim;
    }
    return total;
  }

  std::vector<Morphism> basis() const {
    std::vector<Morphism> out;
    for (const auto& c : comps_) {
      for (std::size_t q = 0; q < c.dim; ++q) {
        Morphism f;
        for (std::size_t v = 0; v < n_; ++v) f.emplace_back(p_.field, p_.e[v], p_.d[v]);
        if (c.tree) {
          Matrix coeff(p_.field, c.dim, 1);
          coeff.set(q, 0, 1);
          expand(c.order.front(), coeff, f);
        } else {
          for (std::size_t i = 0; i < c.order.size(); ++i) {
            std::size_t v = c.order[i];
            f[v] = Matrix::unvectorize(c.dense_kernel.block(0, q, c.dense_kernel.rows(), 1),
                                       c.dense_offset[i], p_.e[v], p_.d[v]);
          }
        }
        out.push_back(std::move(f));
      }
    }
    return out;
  }

 private:
  std::size_t nv(std::size_t v) const { return p_.d[v] * p_.e[v]; }

  ComponentSolution solve_component(std::size_t root) {
    ComponentSolution c;
    std::deque<std::size_t> queue{root};
    comp_of_[root] = static_cast<long>(comps_.size());
    parent_[root] = -1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      c.order.push_back(v);
      for (auto a : adj_[v]) {
        std::size_t w = p_.arrows[a].s == v ? p_.arrows[a].t : p_.arrows[a].s;
        if (!in_s_[w] || comp_of_[w] >= 0) continue;
        comp_of_[w] = comp_of_[root];
        parent_[w] = static_cast<long>(v);
        children_[v].push_back(w);
        queue.push_back(w);
      }
    }
    for (auto v : c.order)
      for (auto a : adj_[v]) {
        std::size_t s = p_.arrows[a].s, t = p_.arrows[a].t;
        if (!in_s_[s] || !in_s_[t]) continue;
        if (parent_[t] != static_cast<long>(s) && parent_[s] != static_cast<long>(t)) c.tree = false;
      }
    if (c.tree) {
      for (auto it = c.order.rbegin(); it != c.order.rend(); ++it) solve_vertex(*it);
      c.dim = lambda_[root].cols();
    } else {
      solve_dense(c);
    }
    return c;
  }

  // Builds the local system at v: unknowns vec(f_v) followed by the
  // coefficients of the children's solution bases.
  void solve_vertex(std::size_t v) {
    std::vector<std::size_t> child_off;
    std::size_t cols = nv(v);
    for (auto c : children_[v]) {
      child_off.push_back(cols);
      cols += lambda_[c].cols();
    }
    std::vector<Matrix> blocks;
    for (auto a : adj_[v]) {
      const auto& ar = p_.arrows[a];
      std::size_t s = ar.s, t = ar.t;
      std::size_t other = s == v ? t : s;
      if (in_s_[other] && parent_[v] == static_cast<long>(other)) continue;
      std::size_t rows = p_.d[s] * p_.e[t];
      if (rows == 0) continue;
      Matrix blk(p_.field, rows, cols);
      bool any = false;
      if (!in_s_[other]) {
        if (s == v && ar.n) {
          add_left_term(blk, 0, 0, *ar.n, p_.d[s]);
          any = true;
        }
        if (t == v && ar.m) {
          add_right_term(blk, 0, 0, *ar.m, p_.e[t]);
          any = true;
        }
      } else {
        // other is a child
        std::size_t ci = 0;
        while (children_[v][ci] != other) ++ci;
        const Matrix& lc = lambda_[other];
        std::size_t k = lc.cols();
        if (s == v) {
          if (ar.n) add_left_term(blk, 0, 0, *ar.n, p_.d[s]);
          if (ar.m)
            for (std::size_t q = 0; q < k; ++q) {
              Matrix ft = Matrix::unvectorize(lc.block(0, q, nv(t), 1), 0, p_.e[t], p_.d[t]);
              blk.set_block(0, child_off[ci] + q, (-(ft * *ar.m)).vectorize());
            }
        } else {
          if (ar.m) add_right_term(blk, 0, 0, *ar.m, p_.e[t]);
          if (ar.n)
            for (std::size_t q = 0; q < k; ++q) {
              Matrix fs = Matrix::unvectorize(lc.block(0, q, nv(s), 1), 0, p_.e[s], p_.d[s]);
              blk.set_block(0, child_off[ci] + q, (*ar.n * fs).vectorize());
            }
        }
        any = true;
      }
      if (any) blocks.push_back(std::move(blk));
    }
    Matrix sys(p_.field, 0, cols);
    if (!blocks.empty()) {
      std::size_t total = 0;
      for (auto& b : blocks) total += b.rows();
      sys = Matrix(p_.field, total, cols);
      std::size_t r0 = 0;
      for (auto& b : blocks) {
        sys.set_block(r0, 0, b);
        r0 += b.rows();
      }
    }
    Matrix ker = kernel_basis(sys);
    lambda_[v] = std::move(ker);
    if (!keep_) {
      // Only the counts matter once the children are folded into v.
      for (auto c : children_[v]) lambda_[c] = Matrix();
    }
  }

  void expand(std::size_t root, const Matrix& coeff, Morphism& f) const {
    std::vector<std::pair<std::size_t, Matrix>> stack{{root, coeff}};
    while (!stack.empty()) {
      auto [v, cf] = std::move(stack.back());
      stack.pop_back();
      Matrix local = lambda_[v] * cf;
      f[v] = Matrix::unvectorize(local, 0, p_.e[v], p_.d[v]);
      std::size_t off = nv(v);
      for (auto c : children_[v]) {
        std::size_t k = lambda_[c].cols();
        stack.emplace_back(c, local.block(off, 0, k, 1));
        off += k;
      }
    }
  }

  void solve_dense(ComponentSolution& c) {
    std::vector<long> index(n_, -1);
    std::size_t cols = 0;
    for (std::size_t i = 0; i < c.order.size(); ++i) {
      index[c.order[i]] = static_cast<long>(i);
      c.dense_offset.push_back(cols);
      cols += nv(c.order[i]);
    }
    std::vector<std::size_t> arrows;
    std::vector<bool> seen(p_.arrows.size(), false);
    std::size_t rows = 0;
    for (auto v : c.order)
      for (auto a : adj_[v]) {
        if (seen[a]) continue;
        seen[a] = true;
        arrows.push_back(a);
        rows += p_.d[p_.arrows[a].s] * p_.e[p_.arrows[a].t];
      }
    Matrix sys(p_.field, rows, cols);
    std::size_t r0 = 0;
    for (auto a : arrows) {
      const auto& ar = p_.arrows[a];
      if (index[ar.s] >= 0 && ar.n) add_left_term(sys, r0, c.dense_offset[index[ar.s]], *ar.n, p_.d[ar.s]);
      if (index[ar.t] >= 0 && ar.m) add_right_term(sys, r0, c.dense_offset[index[ar.t]], *ar.m, p_.e[ar.t]);
      r0 += p_.d[ar.s] * p_.e[ar.t];
    }
    c.dense_kernel = kernel_basis(sys);
    c.dim = c.dense_kernel.cols();
  }

  const HomProblem& p_;
  std::size_t n_;
  bool keep_ = true;
  std::vector<bool> in_s_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<long> comp_of_;
  std::vector<long> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<Matrix> lambda_;
  std::vector<ComponentSolution> comps_;
};

}  // namespace

std::vector<Morphism> solve_hom(const HomProblem& p) {
  HomSolver s(p);
  s.run(true);
  return s.basis();
}

std::size_t solve_hom_dim(const HomProblem& p) {
  HomSolver s(p);
  return s.run(false);
}

HomProblem make_hom_problem(const FiniteRep& m, const FiniteRep& n) {
  if (m.quiver.get() != n.quiver.get() && (m.quiver->vertex_count != n.quiver->vertex_count ||
                                          m.quiver->arrows != n.quiver->arrows))
    throw std::invalid_argument("hom between representations of different quivers");
  if (!(m.field == n.field)) throw std::invalid_argument("hom between representations over different fields");
  HomProblem p;
  p.field = m.field;
  p.d = m.dims;
  p.e = n.dims;
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    p.arrows.push_back({s, t, &m.maps[a], &n.maps[a]});
  }
  return p;
}

std::vector<Morphism> hom_basis(const FiniteRep& m, const FiniteRep& n) {
  return solve_hom(make_hom_problem(m, n));
}

std::size_t hom_dim(const FiniteRep& m, const FiniteRep& n) { return solve_hom_dim(make_hom_problem(m, n)); }

long long euler_form(const FiniteRep& m, const FiniteRep& n) {
  long long s = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) s += static_cast<long long>(m.dims[v] * n.dims[v]);
  for (auto [a, b] : m.quiver->arrows) s -= static_cast<long long>(m.dims[a] * n.dims[b]);
  return s;
}

namespace {

// The coboundary map of the standard complex, restricted to nonzero blocks.
struct Coboundary {
  Matrix delta;
  std::vector<std::size_t> arrow_offset;  // row offset per arrow
};

Coboundary coboundary(const FiniteRep& m, const FiniteRep& n) {
  const auto& q = *m.quiver;
  std::vector<std::size_t> voff(q.vertex_count);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    voff[v] = cols;
    cols += m.dims[v] * n.dims[v];
  }
  Coboundary c;
  std::size_t rows = 0;
  for (auto [s, t] : q.arrows) {
    c.arrow_offset.push_back(rows);
    rows += m.dims[s] * n.dims[t];
  }
  c.delta = Matrix(m.field, rows, cols);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    if (m.dims[s] * n.dims[t] == 0) continue;
    if (n.dims[s]) add_left_term(c.delta, c.arrow_offset[a], voff[s], n.maps[a], m.dims[s]);
    if (m.dims[t]) add_right_term(c.delta, c.arrow_offset[a], voff[t], m.maps[a], n.dims[t]);
  }
  return c;
}

}  // namespace

ExtData ext_cocycles(const FiniteRep& m, const FiniteRep& n) {
  Coboundary c = coboundary(m, n);
  const auto& q = *m.quiver;
  std::size_t rows = c.delta.rows();
  ExtData out;
  Matrix aug = Matrix::hstack(c.delta, Matrix::identity(m.field, rows));
  auto piv = rref_in_place(aug);
  for (auto col : piv) {
    if (col < c.delta.cols()) continue;
    std::size_t k = col - c.delta.cols();
    std::vector<Matrix> cocycle;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      Matrix ca(m.field, n.dims[t], m.dims[s]);
      std::size_t lo = c.arrow_offset[a], hi = lo + m.dims[s] * n.dims[t];
      if (k >= lo && k < hi) {
        std::size_t idx = k - lo;
        ca.set(idx % n.dims[t], idx / n.dims[t], 1);
      }
      cocycle.push_back(std::move(ca));
    }
    out.cocycles.push_back(std::move(cocycle));
  }
  out.dim = out.cocycles.size();
  return out;
}

std::vector<std::vector<Matrix>> ext_annihilated(const FiniteRep& m, const FiniteRep& n,
                                                 const std::vector<Morphism>& ends) {
  ExtData ext = ext_cocycles(m, n);
  if (ext.dim == 0) return {};
  Coboundary c = coboundary(m, n);
  Matrix q = cokernel_projection(c.delta);  // z is a coboundary iff q z = 0
  const auto& arrows = m.quiver->arrows;
  Matrix s(m.field, ends.size() * q.rows(), ext.dim);
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t k = 0; k < ext.dim; ++k) {
      Matrix col(m.field, q.rows(), 1);
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        std::size_t len = m.dims[arrows[a].first] * n.dims[arrows[a].second];
        if (len == 0) continue;
        Matrix v = (ext.cocycles[k][a] * ends[i][arrows[a].first]).vectorize();
        col = col + q.block(0, c.arrow_offset[a], q.rows(), len) * v;
      }
      s.set_block(i * q.rows(), k, col);
    }
  Matrix ker = kernel_basis(s);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    std::vector<Matrix> xi;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      Matrix sum(m.field, n.dims[arrows[a].second], m.dims[arrows[a].first]);
      for (std::size_t k = 0; k < ext.dim; ++k)
        if (!ker.is_zero_at(k, j)) sum.add_scaled(ext.cocycles[k][a], ker.block(k, j, 1, 1));
      xi.push_back(std::move(sum));
    }
    out.push_back(std::move(xi));
  }
  return out;
}

ShortExact extension(const FiniteRep& n, const FiniteRep& m, const std::vector<Matrix>& cocycle) {
  ShortExact se;
  se.left = n;
  se.right = m;
  FiniteRep e = FiniteRep::zero(m.quiver, m.field);
  for (std::size_t v = 0; v < e.dims.size(); ++v) e.dims[v] = n.dims[v] + m.dims[v];
  for (std::size_t a = 0; a < e.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    Matrix ea(m.field, e.dims[t], e.dims[s]);
    ea.set_block(0, 0, n.maps[a]);
    ea.set_block(0, n.dims[s], cocycle[a]);
    ea.set_block(n.dims[t], n.dims[s], m.maps[a]);
    e.maps[a] = std::move(ea);
  }
  for (std::size_t v = 0; v < e.dims.size(); ++v) {
    Matrix inc(m.field, e.dims[v], n.dims[v]);
    inc.set_block(0, 0, Matrix::identity(m.field, n.dims[v]));
    se.inclusion.push_back(std::move(inc));
    Matrix proj(m.field, m.dims[v], e.dims[v]);
    proj.set_block(0, n.dims[v], Matrix::identity(m.field, m.dims[v]));
    se.projection.push_back(std::move(proj));
  }
  se.middle = std::move(e);
  return se;
}

Subquotient kernel_rep(const FiniteRep& m, const Morphism& f) {
  Subquotient k;
  k.rep = FiniteRep::zero(m.quiver, m.field);
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    k.map.push_back(kernel_basis(f[v]));
    k.rep.dims[v] = k.map.back().cols();
  }
  k.rep.maps.clear();
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    auto x = solve(k.map[t], m.maps[a] * k.map[s]);
    if (!x) throw std::logic_error("kernel_rep: argument is not a morphism");
    k.rep.maps.push_back(std::move(*x));
  }
  return k;
}

Subquotient cokernel_rep(const FiniteRep& n, const Morphism& f) {
  Subquotient c;
  c.rep = FiniteRep::zero(n.quiver, n.field);
  for (std::size_t v = 0; v < n.dims.size(); ++v) {
    c.map.push_back(cokernel_projection(f[v]));
    c.rep.dims[v] = c.map.back().rows();
  }
  c.rep.maps.clear();
  for (std::size_t a = 0; a < n.maps.size(); ++a) {
    auto [s, t] = n.quiver->arrows[a];
    Matrix rhs = c.map[t] * n.maps[a];
    auto x = solve(c.map[s].transpose(), rhs.transpose());
    if (!x) throw std::logic_error("cokernel_rep: argument is not a morphism");
    c.rep.maps.push_back(x->transpose());
  }
  return c;
}

FiniteRep direct_sum(const FiniteRep& a, const FiniteRep& b) {
  FiniteRep s = FiniteRep::zero(a.quiver, a.field);
  for (std::size_t v = 0; v < s.dims.size(); ++v) s.dims[v] = a.dims[v] + b.dims[v];
  for (std::size_t k = 0; k < s.maps.size(); ++k) {
    auto [src, tgt] = a.quiver->arrows[k];
    Matrix m(a.field, s.dims[tgt], s.dims[src]);
    m.set_block(0, 0, a.maps[k]);
    m.set_block(a.dims[tgt], a.dims[src], b.maps[k]);
    s.maps[k] = std::move(m);
  }
  return s;
}

Presentation standard_presentation(const FiniteRep& m) {
  const auto& q = *m.quiver;
  std::vector<bool> has_out(q.vertex_count, false), has_in(q.vertex_count, false);
  for (auto [s, t] : q.arrows) {
    has_out[s] = true;
    has_in[t] = true;
  }
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    if (has_out[v] && has_in[v]) throw std::invalid_argument("standard_presentation needs a bipartite quiver");

  // P(M)_w = M_w, plus one copy of M_s per arrow s -> w.
  Presentation pr;
  pr.projective = FiniteRep::zero(m.quiver, m.field);
  std::vector<std::size_t> arrow_off(q.arrows.size());
  for (std::size_t v = 0; v < q.vertex_count; ++v) pr.projective.dims[v] = m.dims[v];
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    arrow_off[a] = pr.projective.dims[t];
    pr.projective.dims[t] += m.dims[s];
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    Matrix pa(m.field, pr.projective.dims[t], pr.projective.dims[s]);
    pa.set_block(arrow_off[a], 0, Matrix::identity(m.field, m.dims[s]));
    pr.projective.maps[a] = std::move(pa);
  }
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    Matrix c(m.field, m.dims[v], pr.projective.dims[v]);
    c.set_block(0, 0, Matrix::identity(m.field, m.dims[v]));
    pr.cover.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    pr.cover[t].set_block(0, arrow_off[a], m.maps[a]);
  }
  auto k = kernel_rep(pr.projective, pr.cover);
  pr.syzygy = std::move(k.rep);
  pr.inclusion = std::move(k.map);
  return pr;
}

std::size_t ext_dim_by_presentation(const FiniteRep& m, const FiniteRep& n) {
  Presentation pr = standard_presentation(m);
  auto from_p = hom_basis(pr.projective, n);
  std::size_t omega_hom = hom_dim(pr.syzygy, n);
  if (from_p.empty()) return omega_hom;
  // Rank of the restriction map h |-> h o inclusion, on flattened components.
  std::size_t len = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) len += n.dims[v] * pr.syzygy.dims[v];
  Matrix img(m.field, len, from_p.size());
  for (std::size_t i = 0; i < from_p.size(); ++i) {
    std::size_t off = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      Matrix r = from_p[i][v] * pr.inclusion[v];
      img.set_block(off, i, r.vectorize());
      off += r.size();
    }
  }
  return omega_hom - rank(img);
}

FiniteRep change_basis(const FiniteRep& m, const std::vector<Matrix>& basis) {
  FiniteRep out = m;
  std::vector<Matrix> inv;
  for (const auto& b : basis) {
    auto i = inverse(b);
    if (!i) throw std::invalid_argument("change_basis: singular basis");
    inv.push_back(std::move(*i));
  }
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    out.maps[a] = inv[t] * m.maps[a] * basis[s];
  }
  return out;
}

FiniteRep restrict_to(const FiniteRep& m, const std::vector<Matrix>& columns) {
  FiniteRep out = FiniteRep::zero(m.quiver, m.field);
  for (std::size_t v = 0; v < m.dims.size(); ++v) out.dims[v] = columns[v].cols();
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = m.quiver->arrows[a];
    auto x = solve(columns[t], m.maps[a] * columns[s]);
    if (!x) throw std::invalid_argument("restrict_to: subspace is not invariant");
    out.maps[a] = std::move(*x);
  }
  return out;
}

}  // namespace repkit
