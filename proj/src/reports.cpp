#include "repkit/reports.hpp"

#include <random>
#include <stdexcept>

#include "repkit/constructions.hpp"
#include "repkit/generators.hpp"
#include "repkit/invariants.hpp"
#include "repkit/symmetry.hpp"
#include "repkit/translation.hpp"

namespace repkit {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json() const {
  Json cs = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"paper_anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"data", c.data}});
    failed += !c.pass;
  }
  return {{"command", command},
          {"seed", seed},
          {"r", r},
          {"checks", std::move(cs)},
          {"summary",
           {{"passed", checks.size() - failed}, {"failed", failed}, {"status", failed ? "fail" : "pass"}}}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::uint64_t cell_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return h ^ (seed * 0x9e3779b97f4a7c15ULL);
}

namespace {

Json dims_json(const DimVector& d) { return Json::array({d.a, d.b}); }

CheckRecord record(std::string name, std::string anchor) {
  CheckRecord c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.data = Json::object();
  return c;
}

bool regular(const CoverRep& m) { return classify_position(pushdown(m)).kind == Position::Kind::regular; }

Word first_leaf(const CoverRep& m, bool source) {
  for (const auto& v : rep_leaves(m))
    if (is_source(v) == source) return v;
  throw std::logic_error("first_leaf: no leaf in the requested fiber");
}

}  // namespace

void verify_hom_projectives(Report& rep, const SuiteOptions& opt) {
  auto c = record("hom-projectives", "dim Hom(P1,P2) = r and Hom(P2,P1) = 0");
  auto p1 = standard_rep(StandardName::P1, opt.r), p2 = standard_rep(StandardName::P2, opt.r);
  std::size_t h12 = hom_dim(p1, p2), h21 = hom_dim(p2, p1);
  c.data = {{"hom_P1_P2", h12}, {"hom_P2_P1", h21}};
  c.pass = h12 == static_cast<std::size_t>(opt.r) && h21 == 0;
  rep.checks.push_back(std::move(c));
}

void verify_euler(Report& rep, const SuiteOptions& opt, int pairs) {
  auto c = record("euler", "dim Hom - dim Ext = <dim M, dim N> on random pairs");
  std::mt19937_64 rng(cell_seed(opt.seed, c.name));
  int failures = 0;
  Json first_failure;
  for (int i = 0; i < pairs; ++i) {
    auto m = gen::random_kronecker(opt.r, {}, 5, rng), n = gen::random_kronecker(opt.r, {}, 5, rng);
    FiniteRep fm = to_finite(m), fn = to_finite(n);
    long long h = static_cast<long long>(hom_dim(fm, fn));
    long long e = static_cast<long long>(ext_dim_by_presentation(fm, fn));
    long long q = euler_form(m.dim_vector(), n.dim_vector(), opt.r);
    if (h - e != q) {
      if (!failures) first_failure = {{"pair", i}, {"hom", h}, {"ext", e}, {"euler", q}};
      ++failures;
    }
  }
  c.data = {{"pairs", pairs}, {"failures", failures}};
  if (failures) c.data["first_failure"] = first_failure;
  c.pass = failures == 0 && pairs >= 100;
  rep.checks.push_back(std::move(c));
}

void verify_tau_dims(Report& rep, const SuiteOptions& opt, int count) {
  auto c = record("tau-dims", "dims of tau^-1 M from sums over x+ (sources) and y- (sinks)");
  std::mt19937_64 rng(cell_seed(opt.seed, c.name));
  int checked = 0, failures = 0;
  std::size_t vertices = 0;
  while (checked < count) {
    CoverRep m = gen::random_thin_rep(gen::random_balanced_tree(opt.r, 2 + rng() % 5, rng), {}, rng);
    if (rng() % 2) m = tau_power_cover(m, -1);
    CoverRep t = tau_inverse_cover(m);
    VertexSet vs = joint_support(m, t);
    VertexSet around = vs;
    for (const auto& v : vs)
      for (const auto& [w, label] : neighbors(v, opt.r)) around.insert(w);
    bool ok = true;
    for (const auto& x : around) {
      long long s = 0;
      for (const auto& [y, label] : neighbors(x, opt.r))
        s += static_cast<long long>(is_source(x) ? m.dim_at(y) : t.dim_at(y));
      long long expect = s - static_cast<long long>(m.dim_at(x));
      if (expect != static_cast<long long>(t.dim_at(x))) ok = false;
      ++vertices;
    }
    failures += !ok;
    ++checked;
  }
  c.data = {{"reps", checked}, {"vertices", vertices}, {"failures", failures}};
  c.pass = failures == 0 && checked >= 50;
  rep.checks.push_back(std::move(c));
}

void verify_inj_equivalence(Report& rep, const SuiteOptions& opt, int count) {
  auto c = record("inj-equivalence", "EKP of the push-down, injective arrows of the push-down and Inj agree; D swaps Inj and Sur");
  std::mt19937_64 rng(cell_seed(opt.seed, c.name));
  int disagreements = 0, duality_failures = 0, inj = 0;
  for (int i = 0; i < count; ++i) {
    CoverRep m = gen::random_thin_rep(gen::random_balanced_tree(opt.r, 2 + rng() % 5, rng), {}, rng);
    m = tau_power_cover(m, -static_cast<int>(rng() % 3));
    KroneckerRep n = pushdown(m);
    bool a = ekp_check(n, std::nullopt, {rng(), 64}).status != EkpVerdict::Status::no_with_witness;
    bool b = true;
    for (const auto& mat : n.mats) b = b && rank(mat) == n.d1;
    bool cc = is_inj(m);
    disagreements += !(a == b && b == cc);
    duality_failures += is_sur(dual_cover(m)) != cc;
    inj += cc;
  }
  c.data = {{"reps", count}, {"in_inj", inj}, {"disagreements", disagreements}, {"duality_failures", duality_failures}};
  c.pass = disagreements == 0 && duality_failures == 0 && count >= 50;
  rep.checks.push_back(std::move(c));
}

void verify_glue(Report& rep, const SuiteOptions& opt, int pairs) {
  auto c = record("glue", "N *_f M is indecomposable and d-values are sandwiched by the pieces");
  std::mt19937_64 rng(cell_seed(opt.seed, c.name));
  int done = 0, multi = 0, sandwich = 0, attempts = 0;
  while (done < pairs && attempts++ < 20 * pairs) {
    CoverRep n = gen::random_thin_rep(gen::random_balanced_tree(opt.r, 3 + rng() % 4, rng), {}, rng);
    CoverRep m = gen::random_thin_rep(gen::random_balanced_tree(opt.r, 3 + rng() % 4, rng), {}, rng);
    if (!regular(n) || !regular(m)) continue;
    auto sc = make_leaf_connected(n, m, first_leaf(m, true), first_leaf(n, false));
    long long f = 1 + static_cast<long long>(rng() % 7);
    std::vector<CoverRep> pieces{sc.connection.left, m};
    auto chain = glue_chain(pieces, {Matrix::from_ints(m.field, 1, 1, {f})});
    auto d = decompose(chain.rep, {rng()});
    if (!d.conclusive || d.count() != 1) ++multi;
    auto s = check_chain_bounds(pieces, chain);
    if (!s.minus_ok || !s.plus_ok) ++sandwich;
    ++done;
  }
  c.data = {{"pairs", done}, {"not_one_summand", multi}, {"sandwich_failures", sandwich}};
  c.pass = done >= pairs && multi == 0 && sandwich == 0;
  rep.checks.push_back(std::move(c));
}

void verify_named_widths(Report& rep, const SuiteOptions& opt) {
  auto c = record("named-widths", "width of the M_1 component is 1 and of the X^1 component is 2");
  int w1 = width(thin_edge(opt.r), 1), w2 = width(build_X_cover(1, opt.r), 1);
  c.data = {{"width_M1", w1}, {"width_X1", w2}};
  c.pass = w1 == 1 && w2 == 2;
  rep.checks.push_back(std::move(c));
}

WidthComponent verify_width_component(Report& rep, int m, const SuiteOptions& opt) {
  if (opt.r != 3) throw std::invalid_argument("rank-width: the constructions are implemented for r = 3");
  if (m < 1) throw std::invalid_argument("rank-width: m >= 1");
  const std::string tag = "m=" + std::to_string(m);
  auto c = record("width-component " + tag, "a quasi-simple F of dims (n+1, n) or (n, n+1) in a component of width m");
  WidthComponent wc = width_m_component(m, {opt.seed, std::nullopt});
  DimVector d = wc.rep.dim_vector();
  int recomputed = width(wc.rep, wc.ql);
  auto qs = is_quasi_simple(wc.rep);
  bool shape = d.a == d.b + 1 || d.b == d.a + 1;
  c.data = {{"recipe", wc.recipe}, {"dims", dims_json(d)}, {"d_minus", wc.report.d_minus},
            {"d_plus", wc.report.d_plus}, {"width", recomputed}, {"quasi_simple_route", qs.route}};
  c.pass = recomputed == m && shape && qs.verdict == QuasiSimpleVerdict::yes && qs.route == "dimension";
  rep.checks.push_back(std::move(c));
  return wc;
}

void verify_rank_window(Report& rep, const WidthComponent& wc, const SuiteOptions& opt) {
  const int m = wc.m;
  auto w = record("rank-width m=" + std::to_string(m), "-W <= rk <= min(1, -W + 3), rad(X, tau^m X) != 0 for m >= 1");
  int radius = opt.window.value_or(m + 6);
  auto rw = verify_rank_width(wc.rep, wc.ql, radius);
  Json cells = Json::array();
  bool positive_side = true;
  for (const auto& [k, cell] : rw.report.rank_window.cells) {
    cells.push_back({{"m", k}, {"value", cell.value}, {"source", to_string(cell.source)}});
    if (k >= 1 && !cell.nonzero()) positive_side = false;
  }
  w.data = {{"window", radius},
            {"estimate", rw.report.rank_estimate()},
            {"interval", Json::array({rw.lower, rw.upper})},
            {"determined", rw.report.rank_window.determined},
            {"cells", std::move(cells)}};
  w.pass = rw.passed && positive_side && rw.report.width == m;
  rep.checks.push_back(std::move(w));
}

void verify_rank_width_m(Report& rep, int m, const SuiteOptions& opt) {
  verify_rank_window(rep, verify_width_component(rep, m, opt), opt);
}

void verify_small_trees(Report& rep, const SuiteOptions& opt) {
  auto c = record("small-trees", "thin reps on A_{l,n} trees have 1 <= d-, d+ <= 2");
  int count = 0, failures = 0;
  Json seen = Json::array();
  for (int l = 1; l <= 3; ++l)
    for (int n = 4 * l; n <= 16; n += 2) {
      ATree t = build_A_tree_rep(l, n, Word{}, 1, opt.r);
      int dm = d_minus(t.rep), dp = d_plus(t.rep);
      seen.push_back({{"l", l}, {"n", n}, {"d_minus", dm}, {"d_plus", dp}});
      failures += !(dm >= 1 && dm <= 2 && dp >= 1 && dp <= 2);
      ++count;
    }
  c.data = {{"trees", count}, {"failures", failures}, {"values", std::move(seen)}};
  c.pass = count >= 10 && failures == 0;
  rep.checks.push_back(std::move(c));
}

void verify_stability(Report& rep, const SuiteOptions& opt) {
  const int r = opt.r;
  {
    auto c = record("stability tau I_1", "S_r-stable with a fixed center, r | D(n,c) and r | a or r | b");
    CoverRep ti = tau_cover(simple_at(Word{}, r));
    auto s = s_r_stable(ti, cell_seed(opt.seed, c.name));
    DimVector d = ti.dim_vector();
    c.data = {{"dims", dims_json(d)}, {"position", to_string(classify_position(pushdown(ti)))},
              {"verdict", to_string(s.verdict)}};
    bool ok = s.verdict == StabilityVerdict::stable;
    if (ok) {
      auto cr = center_and_divisibility(ti, s);
      c.data["center"] = cr.center;
      c.data["layers"] = cr.layer;
      ok = cr.layers_divisible && d.b % r == 0 &&
           d == DimVector{static_cast<long long>(r) * r - 1, static_cast<long long>(r)};
    }
    c.pass = ok;
    rep.checks.push_back(std::move(c));
  }
  {
    auto c = record("stability X_e1", "X_e1 is not GL_r-stable and its lift is not S_r-stable");
    auto xe1 = build_X_alpha(std::vector<long long>([&] {
                               std::vector<long long> e(r, 0);
                               e[0] = 1;
                               return e;
                             }()),
                             r);
    auto probe = gl_stability_probe(xe1, 8, cell_seed(opt.seed, c.name), build_X_cover(1, r));
    auto s = s_r_stable(build_X_cover(1, r));
    c.data = {{"gl_verdict", to_string(probe.verdict)}, {"s_r_verdict", to_string(s.verdict)},
              {"divisibility_obstruction", probe.divisibility_obstruction}};
    c.pass = probe.verdict == GlProbe::Verdict::not_stable && s.verdict == StabilityVerdict::not_stable;
    rep.checks.push_back(std::move(c));
  }
  if (r == 3) {
    auto c = record("stability F_l", "F_l with r dividing neither l nor l+1 is not stable");
    auto f = family_Fn(family_M(3), 6).rep;
    DimVector d = f.dim_vector();
    auto s = s_r_stable(f, cell_seed(opt.seed, c.name));
    auto probe = gl_stability_probe(pushdown(f), 4, cell_seed(opt.seed, c.name), f);
    c.data = {{"dims", dims_json(d)}, {"s_r_verdict", to_string(s.verdict)},
              {"gl_verdict", to_string(probe.verdict)}, {"divisibility_obstruction", probe.divisibility_obstruction}};
    c.pass = d.b % 3 != 0 && d.a % 3 != 0 && s.verdict == StabilityVerdict::not_stable &&
             probe.verdict == GlProbe::Verdict::not_stable;
    rep.checks.push_back(std::move(c));
  }
}

Report run_verify(const std::string& suite, const SuiteOptions& opt, std::optional<int> m) {
  Report rep;
  rep.command = "verify " + suite + (m ? " --m " + std::to_string(*m) : "");
  rep.seed = opt.seed;
  rep.r = opt.r;
  bool all = suite == "all";
  bool known = all;
  auto want = [&](const char* s) {
    bool hit = all || suite == s;
    known = known || suite == s;
    return hit;
  };
  if (want("euler")) {
    verify_hom_projectives(rep, opt);
    verify_euler(rep, opt);
  }
  if (want("tau-dims")) verify_tau_dims(rep, opt);
  if (want("inj-equivalence")) verify_inj_equivalence(rep, opt);
  if (want("glue")) {
    verify_glue(rep, opt);
    verify_small_trees(rep, opt);
  }
  if (want("rank-width")) {
    if (all) {
      verify_named_widths(rep, opt);
      for (int k = 1; k <= 5; ++k) verify_rank_width_m(rep, k, opt);
    } else {
      if (!m) throw std::invalid_argument("verify rank-width needs --m");
      verify_rank_width_m(rep, *m, opt);
    }
  }
  if (want("stability")) verify_stability(rep, opt);
  if (!known) throw std::invalid_argument("unknown verify suite: " + suite);
  return rep;
}

}  // namespace repkit
