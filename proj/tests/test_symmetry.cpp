#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/constructions.hpp"
#include "repkit/symmetry.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

CoverRep star(int r) {
  std::vector<Word> vs{Word{}};
  for (int j = 1; j <= r; ++j) vs.push_back(Word{j});
  return thin_tree_rep(minimal_tree(vs, r));
}

Permutation random_permutation(int r, std::mt19937_64& rng) {
  Permutation s = identity_permutation(r);
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

Matrix random_invertible(int r, std::mt19937_64& rng) {
  for (;;) {
    Matrix a = Matrix::random(FieldSpec{}, r, r, rng);
    if (inverse(a)) return a;
  }
}

}  // namespace

TEST_CASE("sigma_rep relabels the support") {
  auto x1 = build_X_cover(1, 3);
  CHECK(sigma_rep(identity_permutation(3), x1) == x1);
  auto s = sigma_rep(transposition(3, 1, 2), x1);
  CHECK(find_shift_iso(s, build_X_cover(2, 3)).has_value());
  CHECK_THROWS_AS(sigma_rep(Permutation{1, 1, 2}, x1), std::invalid_argument);

  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 4, rng), {}, rng);
    auto a = random_permutation(3, rng), b = random_permutation(3, rng);
    auto sm = sigma_rep(a, m);
    sm.validate();
    CHECK(sm.total_dim() == m.total_dim());
    CHECK(rep_leaves(sm).size() == rep_leaves(m).size());
    CHECK(is_balanced(sm));
    CHECK(sigma_rep(a, sigma_rep(b, m)) == sigma_rep(permutation_compose(b, a), m));
    // push-down of the relabeled rep is the permutation-matrix twist
    auto lhs = pushdown(sm), rhs = gl_act(permutation_matrix(a), pushdown(m));
    CHECK(iso_test(lhs, rhs).verdict == IsoVerdict::iso);
  }
}

TEST_CASE("the GL action is a left action") {
  std::mt19937_64 rng(92);
  auto id = Matrix::identity(FieldSpec{}, 3);
  for (int trial = 0; trial < 50; ++trial) {
    KroneckerRep m;
    m.r = 3;
    m.d1 = 1 + rng() % 3;
    m.d2 = 1 + rng() % 3;
    for (int i = 0; i < 3; ++i) m.mats.push_back(Matrix::random(FieldSpec{}, m.d2, m.d1, rng));
    auto a = random_invertible(3, rng), b = random_invertible(3, rng);
    CHECK(gl_act(id, m) == m);
    CHECK(gl_act(a, gl_act(b, m)) == gl_act(a * b, m));
  }
  auto m = standard_rep(StandardName::P2, 3);
  CHECK_THROWS_AS(gl_act(Matrix(FieldSpec{}, 3, 3), m), std::invalid_argument);
  // c.Id rescales every arrow, undone by scaling the second vertex.
  auto c = id.scaled(5);
  auto cm = gl_act(c, m);
  auto t = iso_test(cm, m);
  CHECK(t.verdict == IsoVerdict::iso);
}

TEST_CASE("S_r-stable cover reps") {
  auto s = simple_at(Word{}, 3);
  auto rs = s_r_stable(s);
  REQUIRE(rs.verdict == StabilityVerdict::stable);
  for (const auto& [j, g] : rs.g) CHECK(g.empty());
  auto cs = center_and_divisibility(s, rs);
  CHECK(cs.center == Word{});
  CHECK(cs.layer.size() == 1);

  auto st = star(3);
  auto r2 = s_r_stable(st);
  REQUIRE(r2.verdict == StabilityVerdict::stable);
  auto c2 = center_and_divisibility(st, r2);
  CHECK(c2.center == Word{});
  REQUIRE(c2.layer.size() == 2);
  CHECK(c2.layer[1] == 3);
  CHECK(c2.layers_divisible);

  auto ti = tau_cover(simple_at(Word{}, 3));
  REQUIRE(ti.dim_vector() == DimVector{8, 3});
  auto r3 = s_r_stable(ti);
  REQUIRE(r3.verdict == StabilityVerdict::stable);
  auto c3 = center_and_divisibility(ti, r3);
  CHECK(c3.layers_divisible);
  CHECK(c3.dims_divisible);
  CHECK(ti.dim_vector().b % 3 == 0);
}

TEST_CASE("stability fails for lopsided reps") {
  auto x1 = build_X_cover(1, 3);
  auto r = s_r_stable(x1);
  CHECK(r.verdict == StabilityVerdict::not_stable);
  CHECK(r.failed_j >= 2);

  auto f = family_Fn(family_M(3), 6).rep;
  REQUIRE(f.dim_vector() == DimVector{20, 19});
  CHECK(s_r_stable(f).verdict == StabilityVerdict::not_stable);

  auto pf = gl_stability_probe(pushdown(f), 4, 1, f);
  CHECK(pf.divisibility_obstruction);
  CHECK(pf.verdict == GlProbe::Verdict::not_stable);
}

TEST_CASE("GL stability probe") {
  auto xe1 = build_X_alpha(std::vector<long long>{1, 0, 0}, 3);
  auto p = gl_stability_probe(xe1, 8, 3);
  REQUIRE(p.verdict == GlProbe::Verdict::not_stable);
  REQUIRE(p.witness.has_value());
  CHECK(iso_test(gl_act(*p.witness, xe1), xe1).verdict != IsoVerdict::iso);

  auto p2 = gl_stability_probe(standard_rep(StandardName::P2, 3), 8, 4);
  CHECK(p2.verdict == GlProbe::Verdict::consistent_with_stable);
  CHECK(p2.draws >= 8);
  CHECK(!p2.witness.has_value());
}

TEST_CASE("stable reps along the preprojective and preinjective orbits") {
  // Push-downs here are preprojective or preinjective, hence GL_r-stable.
  std::vector<CoverRep> reps;
  for (int k = 0; k <= 2; ++k) {
    reps.push_back(tau_power_cover(simple_at(Word{}, 3), k));
    reps.push_back(tau_power_cover(star(3), -k));
  }
  for (const auto& m : reps) {
    auto s = s_r_stable(m);
    REQUIRE(s.verdict == StabilityVerdict::stable);
    auto c = center_and_divisibility(m, s);
    CHECK(c.layers_divisible);
    CHECK(c.dims_divisible);
    // the dense hom system grows like (a^2 + b^2)^2
    if (m.total_dim() <= 80)
      CHECK(gl_stability_probe(pushdown(m), 3).verdict == GlProbe::Verdict::consistent_with_stable);
  }
}
