#include "repkit/invariants.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "repkit/decomposition.hpp"
#include "repkit/finite_rep.hpp"
#include "repkit/translation.hpp"

namespace repkit {

bool is_inj(const CoverRep& m) {
  for (const auto& [v, d] : m.dims) {
    if (!is_source(v)) continue;
    for (int j = 1; j <= m.r; ++j) {
      const Matrix* a = m.map_at(v, j);
      if (!a || !is_injective(*a)) return false;
    }
  }
  return true;
}

bool is_sur(const CoverRep& m) {
  for (const auto& [v, d] : m.dims) {
    if (is_source(v)) continue;
    for (int j = 1; j <= m.r; ++j) {
      const Matrix* a = m.map_at(neighbor(v, j), j);
      if (!a || !is_surjective(*a)) return false;
    }
  }
  return true;
}

std::string to_string(EkpVerdict::Status s) {
  switch (s) {
    case EkpVerdict::Status::yes_certified: return "yes_certified";
    case EkpVerdict::Status::no_with_witness: return "no_with_witness";
    case EkpVerdict::Status::probably_yes: return "probably_yes";
  }
  return "?";
}

namespace {

Matrix pencil(const KroneckerRep& n, const std::vector<long long>& alpha) {
  Matrix s(n.field, n.d2, n.d1);
  for (int i = 0; i < n.r; ++i)
    if (alpha[i] != 0) s = s + n.mats[i].scaled(alpha[i]);
  return s;
}

std::vector<long long> unit(int r, int j) {
  std::vector<long long> e(r, 0);
  e[j] = 1;
  return e;
}

}  // namespace

EkpVerdict ekp_check(const KroneckerRep& n, const std::optional<CoverRep>& provenance, const EkpOptions& opt) {
  EkpVerdict v;
  for (int j = 0; j < n.r; ++j) {
    if (!is_injective(n.mats[j])) {
      v.status = EkpVerdict::Status::no_with_witness;
      v.witness = unit(n.r, j);
      v.provenance = "coordinate arrow " + std::to_string(j + 1) + " is not injective";
      return v;
    }
  }
  if (provenance) {
    if (provenance->dim_vector() != n.dim_vector())
      throw std::invalid_argument("ekp_check: provenance has dimension vector " +
                                  to_string(provenance->dim_vector()) + ", expected " + to_string(n.dim_vector()));
    bool inj = is_inj(*provenance);
    bool hom_zero = true;
    for (int i = 0; i < n.r; ++i)
      if (hom_dim(build_X_alpha(unit(n.r, i), n.r, n.field), n) != 0) hom_zero = false;
    if (inj != hom_zero)
      throw std::logic_error("ekp_check: cover criterion and Hom(X_e_i, N) test disagree");
    if (!inj) throw std::logic_error("ekp_check: coordinate arrows injective but provenance not in Inj");
    v.status = EkpVerdict::Status::yes_certified;
    v.provenance = "cover criterion: provenance in Inj; Hom(X_e_i, N) = 0 for all i";
    return v;
  }
  std::mt19937_64 rng(opt.seed);
  for (int s = 0; s < opt.samples; ++s) {
    std::vector<long long> alpha(n.r);
    bool nonzero = false;
    for (auto& a : alpha) {
      a = n.field.is_prime() ? static_cast<long long>(rng() % n.field.p) : static_cast<long long>(rng() % 11) - 5;
      nonzero = nonzero || a != 0;
    }
    if (!nonzero) continue;
    ++v.samples;
    if (!is_injective(pencil(n, alpha))) {
      v.status = EkpVerdict::Status::no_with_witness;
      v.witness = alpha;
      v.provenance = "random pencil sample";
      return v;
    }
  }
  v.status = EkpVerdict::Status::probably_yes;
  v.provenance = "no rank drop in " + std::to_string(v.samples) + " random pencil samples";
  return v;
}

EkpVerdict eip_check(const KroneckerRep& n, const std::optional<CoverRep>& provenance, const EkpOptions& opt) {
  std::optional<CoverRep> dp;
  if (provenance) dp = dual_cover(*provenance);
  EkpVerdict v = ekp_check(dual(n), dp, opt);
  if (v.status == EkpVerdict::Status::yes_certified)
    v.provenance = "cover criterion: provenance in Sur (dual in Inj)";
  return v;
}

const CoverRep& TauOrbit::at(int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  int step = k > 0 ? 1 : -1;
  const CoverRep& prev = at(k - step);
  CoverRep next = step > 0 ? tau_cover(prev) : tau_inverse_cover(prev);
  return cache_.emplace(k, std::move(next)).first->second;
}

namespace {

// Least l with tau^{sign * l} X in the cone, for a cone closed under the
// step that moves further in (tau^{-1} for Inj, tau for Sur).
int cone_boundary(TauOrbit& orbit, int sign, bool (*member)(const CoverRep&), const ScanOptions& opt,
                  const char* what) {
  auto in = [&](int l) {
    try {
      return member(orbit.at(sign * l));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(what) + ": input is not regular (" + e.what() + ")");
    }
  };
  int l = 0;
  if (in(0)) {
    for (int k = 1;; ++k) {
      if (k > opt.cap) throw GuardError(std::string(what) + ": scan cap exceeded");
      if (!in(-k)) {
        l = 1 - k;
        break;
      }
    }
  } else {
    for (int k = 1;; ++k) {
      if (k > opt.cap) throw GuardError(std::string(what) + ": scan cap exceeded");
      if (in(k)) {
        l = k;
        break;
      }
    }
  }
  if (opt.check_cone && !in(l + 1)) throw std::logic_error(std::string(what) + ": cone not closed under translation");
  return l;
}

}  // namespace

int d_minus(TauOrbit& orbit, const ScanOptions& opt) { return cone_boundary(orbit, -1, is_inj, opt, "d_minus"); }
int d_plus(TauOrbit& orbit, const ScanOptions& opt) { return cone_boundary(orbit, 1, is_sur, opt, "d_plus"); }

int d_minus(const CoverRep& x, const ScanOptions& opt) {
  TauOrbit o(x);
  return d_minus(o, opt);
}
int d_plus(const CoverRep& x, const ScanOptions& opt) {
  TauOrbit o(x);
  return d_plus(o, opt);
}

int width(TauOrbit& orbit, int ql) {
  if (ql < 1) throw std::invalid_argument("width: quasi-length must be positive");
  int w = d_plus(orbit) + d_minus(orbit) - ql;
  if (w < 0) throw std::logic_error("width: negative result, quasi-length " + std::to_string(ql) + " is wrong");
  return w;
}

int width(const CoverRep& x, int ql) {
  TauOrbit o(x);
  return width(o, ql);
}

// ---------------------------------------------------------------------------
// Hom between push-downs, computed upstairs.

namespace {

struct Indexed {
  std::vector<Word> verts;
  std::vector<std::size_t> dim;
  std::vector<int> nbr;  // verts.size() * r, -1 outside the support
  std::vector<const Matrix*> arrow;  // at the source vertex: map along label j
  int r = 0;

  explicit Indexed(const CoverRep& m) : r(m.r) {
    std::unordered_map<Word, int, WordHash> id;
    for (const auto& [v, d] : m.dims) {
      id.emplace(v, static_cast<int>(verts.size()));
      verts.push_back(v);
      dim.push_back(d);
    }
    nbr.assign(verts.size() * r, -1);
    arrow.assign(verts.size() * r, nullptr);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (int j = 1; j <= r; ++j) {
        Word w = neighbor(verts[i], j);
        auto it = id.find(w);
        if (it != id.end()) nbr[i * r + j - 1] = it->second;
        const Word& s = is_source(verts[i]) ? verts[i] : w;
        arrow[i * r + j - 1] = m.map_at(s, j);
      }
  }
  bool source(int i) const { return is_source(verts[i]); }
  // Map of the arrow with label j at vertex i (source side or sink side).
  const Matrix* map(int i, int j) const { return arrow[i * r + j - 1]; }
  bool inj(int i, int j) const {
    const Matrix* a = map(i, j);
    return a && is_injective(*a);
  }
  bool sur(int i, int j) const {
    const Matrix* a = map(i, j);
    return a && is_surjective(*a);
  }
};

struct PairSolver {
  const Indexed& a;
  const Indexed& b;
  FieldSpec field;
  std::vector<bool> seen;
  std::vector<char> inj_b, sur_a;  // cached per (vertex, label)

  PairSolver(const Indexed& x, const Indexed& y, FieldSpec f)
      : a(x), b(y), field(f), seen(x.verts.size() * y.verts.size(), false) {
    int r = a.r;
    inj_b.assign(b.verts.size() * r, -1);
    sur_a.assign(a.verts.size() * r, -1);
  }

  bool b_inj(int i, int j) {
    char& c = inj_b[i * a.r + j - 1];
    if (c < 0) c = b.inj(i, j);
    return c;
  }
  bool a_sur(int i, int j) {
    char& c = sur_a[i * a.r + j - 1];
    if (c < 0) c = a.sur(i, j);
    return c;
  }

  std::size_t component(int x0, int y0) {
    int r = a.r;
    std::size_t nb = b.verts.size();
    std::vector<std::pair<int, int>> pairs{{x0, y0}};
    seen[x0 * nb + y0] = true;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      auto [x, y] = pairs[q];
      for (int j = 1; j <= r; ++j) {
        int x1 = a.nbr[x * r + j - 1], y1 = b.nbr[y * r + j - 1];
        if (x1 < 0 || y1 < 0 || seen[x1 * nb + y1]) continue;
        seen[x1 * nb + y1] = true;
        pairs.emplace_back(x1, y1);
      }
    }
    // Zero propagation: f_x = 0 is forced at a source whose B-arrow is
    // injective into a vertex where f vanishes, and at a sink whose A-arrow
    // is surjective from a vertex where f vanishes.
    std::unordered_map<long long, int> local;
    for (std::size_t q = 0; q < pairs.size(); ++q)
      local.emplace(static_cast<long long>(pairs[q].first) * nb + pairs[q].second, static_cast<int>(q));
    std::vector<bool> zero(pairs.size(), false);
    std::vector<int> queue;
    auto kill = [&](int q) {
      if (!zero[q]) {
        zero[q] = true;
        queue.push_back(q);
      }
    };
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      auto [x, y] = pairs[q];
      for (int j = 1; j <= r; ++j) {
        int x1 = a.nbr[x * r + j - 1], y1 = b.nbr[y * r + j - 1];
        if (x1 >= 0 && y1 >= 0) continue;
        if (a.source(x) ? b_inj(y, j) : a_sur(x, j)) kill(static_cast<int>(q));
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      auto [x, y] = pairs[queue[h]];
      for (int j = 1; j <= r; ++j) {
        int x1 = a.nbr[x * r + j - 1], y1 = b.nbr[y * r + j - 1];
        if (x1 < 0 || y1 < 0) continue;
        int q1 = local.at(static_cast<long long>(x1) * nb + y1);
        // (x,y) is zero. Its neighbor (x1,y1) across label j.
        if (a.source(x) ? a_sur(x, j) : b_inj(y1, j)) kill(q1);
      }
    }
    if (queue.size() == pairs.size()) return 0;
    return solve(pairs, local);
  }

  std::size_t solve(const std::vector<std::pair<int, int>>& pairs, const std::unordered_map<long long, int>& local) {
    int r = a.r;
    std::size_t nb = b.verts.size();
    HomProblem p;
    p.field = field;
    for (auto [x, y] : pairs) {
      p.d.push_back(a.dim[x]);
      p.e.push_back(b.dim[y]);
    }
    std::deque<Matrix> zeros;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      auto [x, y] = pairs[q];
      for (int j = 1; j <= r; ++j) {
        int x1 = a.nbr[x * r + j - 1], y1 = b.nbr[y * r + j - 1];
        const Matrix* ma = a.map(x, j);
        const Matrix* mb = b.map(y, j);
        if (x1 >= 0 && y1 >= 0) {
          if (!a.source(x)) continue;  // each inner arrow once, from its source
          std::size_t t = local.at(static_cast<long long>(x1) * nb + y1);
          zeros.emplace_back(field, a.dim[x1], a.dim[x]);
          const Matrix* m = ma ? ma : &zeros.back();
          zeros.emplace_back(field, b.dim[y1], b.dim[y]);
          const Matrix* n = mb ? mb : &zeros.back();
          p.arrows.push_back({q, t, m, n});
        } else if (a.source(x) && y1 >= 0 && mb) {
          // B(alpha) f_x = 0
          std::size_t t = p.d.size();
          p.d.push_back(0);
          p.e.push_back(b.dim[y1]);
          zeros.emplace_back(field, 0, a.dim[x]);
          p.arrows.push_back({q, t, &zeros.back(), mb});
        } else if (!a.source(x) && x1 >= 0 && ma) {
          // f_y A(alpha) = 0
          std::size_t s = p.d.size();
          p.d.push_back(a.dim[x1]);
          p.e.push_back(0);
          zeros.emplace_back(field, b.dim[y], 0);
          p.arrows.push_back({s, q, ma, &zeros.back()});
        }
      }
    }
    return solve_hom_dim(p);
  }
};

}  // namespace

std::size_t pushdown_hom_dim(const CoverRep& a, const CoverRep& b) {
  if (a.r != b.r || !(a.field == b.field)) throw std::invalid_argument("pushdown_hom_dim: mismatched reps");
  Indexed ia(a), ib(b);
  PairSolver s(ia, ib, a.field);
  std::size_t nb = ib.verts.size(), total = 0;
  for (std::size_t x = 0; x < ia.verts.size(); ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      if (s.seen[x * nb + y] || ia.source(static_cast<int>(x)) != ib.source(static_cast<int>(y))) continue;
      total += s.component(static_cast<int>(x), static_cast<int>(y));
    }
  return total;
}

// ---------------------------------------------------------------------------
// Quasi-rank window.

std::string to_string(RankCell::Source s) {
  switch (s) {
    case RankCell::Source::direct: return "direct";
    case RankCell::Source::euler_duality: return "euler_duality";
    case RankCell::Source::cone_separation: return "cone_separation";
    case RankCell::Source::euler_lower_bound: return "euler_lower_bound";
    case RankCell::Source::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

DimVector coxeter_power(DimVector d, int m, int r) {
  for (int i = 0; i < std::abs(m); ++i) d = coxeter_dim(d, m > 0 ? 1 : -1, r);
  return d;
}

long long total(const DimVector& d) { return d.a + d.b; }

// Fills m >= 1 from Ext(X, tau^m X) = D Hom(X, tau^{1-m} X), then reads off
// the estimate.
void finish_window(RankWindow& w, const DimVector& x, int r, long long end_dim) {
  // Hom(X, tau^m X) for m <= 0, where known exactly.
  auto hom = [&](int m) -> std::optional<long long> {
    if (m == 0) return end_dim >= 0 ? std::optional<long long>(end_dim) : std::nullopt;
    auto it = w.cells.find(m);
    if (it == w.cells.end() || !it->second.known() || it->second.source == RankCell::Source::euler_lower_bound)
      return std::nullopt;
    return it->second.value;
  };
  for (int m = 1; m <= w.radius; ++m) {
    RankCell& c = w.cells[m];
    if (c.known()) continue;
    c.m = m;
    long long e = euler_form(x, coxeter_power(x, m, r), r);
    std::optional<long long> ext = hom(1 - m);
    if (ext) {
      c.value = e + *ext;
      c.source = RankCell::Source::euler_duality;
    } else if (e > 0) {
      c.value = e;
      c.source = RankCell::Source::euler_lower_bound;
    }
  }
  w.determined = true;
  w.estimate = -w.radius;
  for (int m = w.radius; m >= -w.radius; --m) {
    const RankCell& c = w.cells.at(m);
    if (!c.known()) {
      w.estimate = m + 1;
      w.determined = false;
      break;
    }
    if (!c.nonzero()) {
      w.estimate = m + 1;
      break;
    }
    if (m == -w.radius) w.determined = false;  // nonzero across the whole window
  }
  w.note = "window truncation of rk over [-" + std::to_string(w.radius) + ", " + std::to_string(w.radius) + "]";
  if (!w.determined) w.note += "; estimate not pinned by the window";
}

}  // namespace

RankWindow quasi_rank_window(const KroneckerRep& x, int radius, const WindowOptions& opt) {
  if (radius < 1) throw std::invalid_argument("quasi_rank_window: radius must be positive");
  RankWindow w;
  w.radius = radius;
  DimVector d = x.dim_vector();
  long long end_dim = -1;
  for (int m = -radius; m <= 0; ++m) {
    RankCell c;
    c.m = m;
    DimVector dm = coxeter_power(d, m, x.r);
    if (m != 0 && dm == d) {
      w.cells[m] = c;  // possible periodicity; leave open
      continue;
    }
    if (total(dm) <= static_cast<long long>(opt.direct_limit)) {
      KroneckerRep y = m == 0 ? x : tau_kronecker(x, m);
      long long h = static_cast<long long>(hom_dim(x, y));
      if (m == 0) {
        end_dim = h;
        if (is_indecomposable(to_finite(x)) == true) {
          c.value = h - 1;
          c.source = RankCell::Source::direct;
        }
      } else {
        c.value = h;
        c.source = RankCell::Source::direct;
      }
    }
    w.cells[m] = c;
  }
  finish_window(w, d, x.r, end_dim);
  return w;
}

RankWindow quasi_rank_window(TauOrbit& orbit, int radius, int dm, int dp, std::size_t direct_limit) {
  if (radius < 1) throw std::invalid_argument("quasi_rank_window: radius must be positive");
  const CoverRep& x = orbit.base();
  RankWindow w;
  w.radius = radius;
  DimVector d = x.dim_vector();
  long long end_dim = -1;
  for (int m = -radius; m <= 0; ++m) {
    RankCell c;
    c.m = m;
    if (m <= -(dm + dp)) {
      c.value = 0;
      c.source = RankCell::Source::cone_separation;
    } else if (m == 0) {
      end_dim = static_cast<long long>(pushdown_hom_dim(x, x));
      // Push-down preserves indecomposability (free deck group), so End is
      // local whenever End_C(X) is.
      if (hom_dim(x, x) == 1 || is_indecomposable(x) == true) {
        c.value = end_dim - 1;
        c.source = RankCell::Source::direct;
      }
    } else {
      // Hom(X, tau^m X) = Hom(tau^s X, tau^{m+s} X); pick s to keep both small.
      int k = -m, best = 0;
      long long cost = -1;
      for (int s = 0; s <= k; ++s) {
        long long c1 = total(coxeter_power(d, s, x.r)), c2 = total(coxeter_power(d, m + s, x.r));
        long long mx = std::max(c1, c2);
        if (cost < 0 || mx < cost) {
          cost = mx;
          best = s;
        }
      }
      if (coxeter_power(d, m, x.r) != d && cost <= static_cast<long long>(direct_limit)) {
        c.value = static_cast<long long>(pushdown_hom_dim(orbit.at(best), orbit.at(m + best)));
        c.source = RankCell::Source::direct;
      }
    }
    w.cells[m] = c;
  }
  finish_window(w, d, x.r, end_dim);
  return w;
}

RankWidthReport verify_rank_width(const CoverRep& x, int ql, std::optional<int> radius) {
  RankWidthReport out;
  TauOrbit orbit(x);
  ComponentReport& rep = out.report;
  rep.ql = ql;
  rep.d_minus = d_minus(orbit);
  rep.d_plus = d_plus(orbit);
  rep.width = rep.d_plus + rep.d_minus - ql;
  if (rep.width < 0) throw std::logic_error("verify_rank_width: negative width, quasi-length is wrong");
  int b = radius.value_or(rep.width + 6);
  // The window is read on the quasi-simple at the mouth; for ql > 1 the cone
  // bound uses d^+ + d^- of X itself, which only widens the separated range.
  rep.rank_window = quasi_rank_window(orbit, b, rep.d_minus, rep.d_plus);
  out.lower = -rep.width;
  out.upper = std::min(1, -rep.width + 3);
  int e = rep.rank_window.estimate;
  out.passed = rep.rank_window.determined && e >= out.lower && e <= out.upper;
  out.detail = "estimate " + std::to_string(e) + (rep.rank_window.determined ? "" : " (undetermined)") +
               ", allowed [" + std::to_string(out.lower) + ", " + std::to_string(out.upper) + "]";
  return out;
}

}  // namespace repkit
