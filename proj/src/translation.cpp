#include "repkit/translation.hpp"

#include <stdexcept>

#include "repkit/guard.hpp"

namespace repkit {

namespace {

using DimMap = std::map<Word, std::size_t, CanonicalLess>;
using ArrowMap = std::map<ArrowKey, Matrix, ArrowLess>;

std::size_t dim_in(const DimMap& d, const Word& v) {
  auto it = d.find(v);
  return it == d.end() ? 0 : it->second;
}

// Vertices of the given parity within distance one of the support.
VertexSet ring(const DimMap& dims, bool sources, int r) {
  VertexSet out;
  for (const auto& [v, d] : dims) {
    if (is_source(v) == sources) out.insert(v);
    for (int j = 1; j <= r; ++j) {
      Word w = neighbor(v, j);
      if (is_source(w) == sources) out.insert(w);
    }
  }
  return out;
}

// A reflected representation: `in` holds the maps (from the current source
// side, label) and is read through `get`.
struct Half {
  DimMap dims;
  ArrowMap maps;  // key: (vertex of the current source parity, label)
};

// One reflection at every vertex v of parity `parity_sources` (which are the
// current sources when cokernel is true, the current sinks otherwise). The
// maps of `h` are keyed by the current source vertex.
Half reflect(const Half& h, bool at_even, bool cokernel, int r, FieldSpec f) {
  Half out;
  // Vertices of the other parity keep their spaces.
  for (const auto& [v, d] : h.dims)
    if (is_source(v) != at_even) out.dims[v] = d;
  for (const auto& x : ring(h.dims, at_even, r)) {
    std::vector<int> labels;
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (int j = 1; j <= r; ++j) {
      std::size_t d = dim_in(h.dims, neighbor(x, j));
      if (!d) continue;
      labels.push_back(j);
      sizes.push_back(d);
      total += d;
    }
    std::size_t dx = dim_in(h.dims, x);
    if (cokernel) {
      // x is a source: phi = stacked maps x -> y_j.
      Matrix phi(f, total, dx);
      std::size_t off = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = h.maps.find({x, labels[i]});
        if (it != h.maps.end()) phi.set_block(off, 0, it->second);
        off += sizes[i];
      }
      Matrix q = cokernel_projection(phi);
      if (!q.rows()) continue;
      out.dims[x] = q.rows();
      off = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        Matrix blk = q.block(0, off, q.rows(), sizes[i]);
        if (!blk.is_zero()) out.maps[{neighbor(x, labels[i]), labels[i]}] = std::move(blk);
        off += sizes[i];
      }
    } else {
      // x is a sink: psi = side-by-side maps y_j -> x.
      Matrix psi(f, dx, total);
      std::size_t off = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = h.maps.find({neighbor(x, labels[i]), labels[i]});
        if (it != h.maps.end()) psi.set_block(0, off, it->second);
        off += sizes[i];
      }
      Matrix k = kernel_basis(psi);
      if (!k.cols()) continue;
      out.dims[x] = k.cols();
      off = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        Matrix blk = k.block(off, 0, sizes[i], k.cols());
        if (!blk.is_zero()) out.maps[{x, labels[i]}] = std::move(blk);
        off += sizes[i];
      }
    }
  }
  return out;
}

CoverRep sweep(const CoverRep& m, bool cokernel) {
  check_dim_guard(m.total_dim(), cokernel ? "tau_inverse_cover" : "tau_cover");
  Half h{m.dims, m.maps};
  // Cokernels reflect the sources first; kernels the sinks first.
  Half mid = reflect(h, cokernel, cokernel, m.r, m.field);
  Half fin = reflect(mid, !cokernel, cokernel, m.r, m.field);
  CoverRep out;
  out.r = m.r;
  out.field = m.field;
  out.dims = std::move(fin.dims);
  out.maps = std::move(fin.maps);
  out.trim();
  return out;
}

}  // namespace

CoverRep tau_inverse_cover(const CoverRep& m) {
  CoverRep out = sweep(m, true);
  if (out.empty() && !m.empty()) throw std::invalid_argument("tau_inverse_cover: input is injective");
  return out;
}

CoverRep tau_cover(const CoverRep& m) {
  CoverRep out = sweep(m, false);
  if (out.empty() && !m.empty()) throw std::invalid_argument("tau_cover: input is projective");
  return out;
}

CoverRep translate_cover(const CoverRep& m, SweepDirection dir) {
  return dir == SweepDirection::toward_tau ? tau_cover(m) : tau_inverse_cover(m);
}

CoverRep tau_power_cover(const CoverRep& m, int k) {
  CoverRep cur = m;
  for (int i = 0; i < std::abs(k); ++i) cur = k > 0 ? tau_cover(cur) : tau_inverse_cover(cur);
  return cur;
}

namespace {

KroneckerRep kronecker_step(const KroneckerRep& m, bool inverse) {
  check_dim_guard(m.total_dim(), "tau_kronecker");
  const int r = m.r;
  const FieldSpec f = m.field;
  KroneckerRep out;
  out.r = r;
  out.field = f;
  if (inverse) {
    Matrix phi(f, r * m.d2, m.d1);
    for (int j = 0; j < r; ++j) phi.set_block(j * m.d2, 0, m.mats[j]);
    Matrix q = cokernel_projection(phi);  // c x r d2
    std::size_t c = q.rows();
    Matrix psi(f, r * c, m.d2);
    for (int j = 0; j < r; ++j) psi.set_block(j * c, 0, q.block(0, j * m.d2, c, m.d2));
    Matrix q2 = cokernel_projection(psi);
    out.d1 = c;
    out.d2 = q2.rows();
    for (int j = 0; j < r; ++j) out.mats.push_back(q2.block(0, j * c, out.d2, c));
  } else {
    Matrix psi(f, m.d2, r * m.d1);
    for (int j = 0; j < r; ++j) psi.set_block(0, j * m.d1, m.mats[j]);
    Matrix k = kernel_basis(psi);  // r d1 x c
    std::size_t c = k.cols();
    Matrix phi(f, m.d1, r * c);
    for (int j = 0; j < r; ++j) phi.set_block(0, j * c, k.block(j * m.d1, 0, m.d1, c));
    Matrix k2 = kernel_basis(phi);
    out.d2 = c;
    out.d1 = k2.cols();
    for (int j = 0; j < r; ++j) out.mats.push_back(k2.block(j * c, 0, c, out.d1));
  }
  return out;
}

}  // namespace

KroneckerRep tau_kronecker(const KroneckerRep& m, int power) {
  KroneckerRep cur = m;
  for (int i = 0; i < std::abs(power); ++i) {
    bool inverse = power < 0;
    KroneckerRep next = kronecker_step(cur, inverse);
    if (next.total_dim() == 0 && cur.total_dim() != 0)
      throw std::invalid_argument(inverse ? "tau_kronecker: reached an injective"
                                          : "tau_kronecker: reached a projective");
    cur = std::move(next);
  }
  return cur;
}

DimVector coxeter_dim(const DimVector& d, int power, int r) {
  DimVector cur = d;
  for (int i = 0; i < std::abs(power); ++i) {
    long long a = cur.a, b = cur.b;
    if (power < 0) {
      long long na = r * b - a;
      cur = {na, r * na - b};
    } else {
      long long nb = r * a - b;
      cur = {r * nb - a, nb};
    }
  }
  return cur;
}

long long a_sequence(int i, int r) {
  if (i <= 0) return 0;
  long long prev = 0, cur = 1;
  for (int k = 1; k < i; ++k) {
    long long next = r * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string to_string(const Position& p) {
  switch (p.kind) {
    case Position::Kind::preprojective:
      return "preprojective(" + std::to_string(p.index) + ")";
    case Position::Kind::preinjective:
      return "preinjective(" + std::to_string(p.index) + ")";
    case Position::Kind::regular:
      return "regular";
  }
  return "regular";
}

namespace {

// Index i with d = (A_{i-1}, A_i) (or swapped when `swapped`), else 0.
int a_pair_index(const DimVector& d, int r, bool swapped) {
  long long x = swapped ? d.b : d.a, y = swapped ? d.a : d.b;
  for (int i = 1; i < 64; ++i) {
    long long lo = a_sequence(i - 1, r), hi = a_sequence(i, r);
    if (lo == x && hi == y) return i;
    if (lo > x) break;
  }
  return 0;
}

}  // namespace

Position classify_position(const KroneckerRep& m, int cap) {
  Position pos;
  const DimVector d = m.dim_vector();
  for (bool toward_tau : {true, false}) {
    KroneckerRep cur = m;
    for (int l = 0; l < cap; ++l) {
      if (cur.total_dim() > max_total_dim()) break;
      KroneckerRep next = kronecker_step(cur, !toward_tau);
      if (next.total_dim() == 0) {
        // cur is projective (resp. injective): P_1 = (0,1), P_2 = (1,r).
        bool simple_end = toward_tau ? cur.d1 == 0 : cur.d2 == 0;
        pos.kind = toward_tau ? Position::Kind::preprojective : Position::Kind::preinjective;
        pos.index = 2 * l + (simple_end ? 1 : 2);
        int check = a_pair_index(d, m.r, !toward_tau);
        if (check != pos.index)
          throw std::logic_error("classify_position: dimension vector " + to_string(d) +
                                 " does not match " + to_string(pos));
        return pos;
      }
      if (next.total_dim() >= cur.total_dim()) break;
      cur = std::move(next);
    }
  }
  pos.kind = Position::Kind::regular;
  pos.note = "dimensions grow in both directions";
  if (a_pair_index(d, m.r, false) || a_pair_index(d, m.r, true))
    pos.note += "; dimension vector lies on the preprojective/preinjective sequence";
  return pos;
}

}  // namespace repkit
