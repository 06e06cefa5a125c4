#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

// Source/sink dimension rules for tau^{-1} at every vertex near the support.
bool reflection_formulas_hold(const CoverRep& m, const CoverRep& t) {
  VertexSet near;
  for (const auto& v : joint_support(m, t)) {
    near.insert(v);
    for (int j = 1; j <= m.r; ++j) near.insert(neighbor(v, j));
  }
  for (const auto& x : near) {
    long long s = 0;
    if (is_source(x)) {
      for (int j = 1; j <= m.r; ++j) s += static_cast<long long>(m.dim_at(neighbor(x, j)));
      if (static_cast<long long>(t.dim_at(x)) != s - static_cast<long long>(m.dim_at(x))) return false;
    } else {
      for (int j = 1; j <= m.r; ++j) s += static_cast<long long>(t.dim_at(neighbor(x, j)));
      if (static_cast<long long>(t.dim_at(x)) != s - static_cast<long long>(m.dim_at(x))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("A-sequence and Coxeter maps") {
  const int r = 3;
  CHECK(a_sequence(0, r) == 0);
  CHECK(a_sequence(1, r) == 1);
  CHECK(a_sequence(2, r) == 3);
  CHECK(a_sequence(3, r) == 8);
  CHECK(a_sequence(4, r) == 21);
  CHECK(coxeter_dim({0, 1}, -1, r) == DimVector{r, r * r - 1});
  CHECK(coxeter_dim({r, r * r - 1}, 1, r) == DimVector{0, 1});
  CHECK(coxeter_dim({1, 0}, 1, r) == DimVector{r * r - 1, r});
  for (int i = 1; i < 8; ++i)
    CHECK(coxeter_dim({a_sequence(i - 1, r), a_sequence(i, r)}, -1, r) ==
          DimVector{a_sequence(i + 1, r), a_sequence(i + 2, r)});
}

TEST_CASE("Kronecker translates of projectives and injectives") {
  for (int r : {3, 4}) {
    auto p1 = standard_rep(StandardName::P1, r);
    auto t = tau_kronecker(p1, -1);
    CHECK(t.dim_vector() == DimVector{r, r * r - 1});
    CHECK(tau_kronecker(standard_rep(StandardName::I1, r), 1).dim_vector() == DimVector{r * r - 1, r});
    CHECK_THROWS_AS(tau_kronecker(p1, 1), std::invalid_argument);
    CHECK_THROWS_AS(tau_kronecker(standard_rep(StandardName::I2, r), -1), std::invalid_argument);
    auto back = tau_kronecker(t, 1);
    CHECK(back.dim_vector() == p1.dim_vector());
  }
}

TEST_CASE("Coxeter map predicts Kronecker translates") {
  std::mt19937_64 rng(51);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    auto t = gen::random_balanced_tree(3, 3 + rng() % 5, rng);
    auto k = pushdown(gen::random_thin_rep(t, {}, rng));
    auto d = k.dim_vector();
    CHECK(tau_kronecker(k, -1).dim_vector() == coxeter_dim(d, -1, 3));
    CHECK(tau_kronecker(k, 1).dim_vector() == coxeter_dim(d, 1, 3));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("cover translates satisfy the reflection dimension formulas") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = gen::random_balanced_tree(3, 2 + rng() % 6, rng);
    auto m = gen::random_thin_rep(t, {}, rng);
    auto tm = tau_inverse_cover(m);
    tm.validate();
    CHECK(reflection_formulas_hold(m, tm));
    auto back = tau_cover(tm);
    CHECK(back.dim_vector() == m.dim_vector());
    CHECK(hom_dim(back, m) == 1);
    CHECK(hom_dim(m, back) == 1);
  }
}

TEST_CASE("cover translates commute with push-down") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = gen::random_balanced_tree(3, 2 + rng() % 5, rng);
    auto m = gen::random_thin_rep(t, {}, rng);
    for (int power : {1, -1}) {
      auto a = pushdown(tau_power_cover(m, power));
      auto b = tau_kronecker(pushdown(m), power);
      CHECK(a.dim_vector() == b.dim_vector());
      // Both are indecomposable bricks here, so a nonzero map either way
      // between equal dimension vectors pins the isomorphism class.
      CHECK(hom_dim(a, b) == hom_dim(b, b));
    }
  }
}

TEST_CASE("translation preserves hom dimensions between regular reps") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 4, rng), {}, rng);
    auto y = gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 4, rng), {}, rng);
    auto px = pushdown(x), py = pushdown(y);
    CHECK(hom_dim(px, py) == hom_dim(tau_kronecker(px, 1), tau_kronecker(py, 1)));
    CHECK(hom_dim(x, y) == hom_dim(tau_cover(x), tau_cover(y)));
  }
}

TEST_CASE("simple cover reps at a sink and source") {
  auto s = simple_at(Word{1}, 3);  // projective at a sink
  CHECK_THROWS_AS(tau_cover(s), std::invalid_argument);
  auto t = tau_inverse_cover(s);
  CHECK(t.dim_vector() == DimVector{3, 8});
  auto x0 = simple_at(Word{}, 3);  // injective at a source
  CHECK_THROWS_AS(tau_inverse_cover(x0), std::invalid_argument);
  CHECK(tau_cover(x0).dim_vector() == DimVector{8, 3});
}

TEST_CASE("position classification") {
  const int r = 3;
  auto p2 = classify_position(standard_rep(StandardName::P2, r));
  CHECK(p2.kind == Position::Kind::preprojective);
  CHECK(p2.index == 2);
  auto p1 = classify_position(standard_rep(StandardName::P1, r));
  CHECK(p1.index == 1);
  auto i1 = classify_position(standard_rep(StandardName::I1, r));
  CHECK(i1.kind == Position::Kind::preinjective);
  CHECK(i1.index == 1);
  auto p5 = classify_position(tau_kronecker(standard_rep(StandardName::P1, r), -2));
  CHECK(p5.kind == Position::Kind::preprojective);
  CHECK(p5.index == 5);
  CHECK(classify_position(pushdown(thin_edge(r))).kind == Position::Kind::regular);
  auto x = build_X_alpha(std::vector<long long>{1, 0, 0}, r);
  CHECK(classify_position(x).kind == Position::Kind::regular);
  // (n+1, n) thin trees are regular.
  auto a = pushdown(thin_tree_rep(minimal_tree({Word{}, Word{1, 2, 1, 2}}, r)));
  CHECK(a.dim_vector() == DimVector{3, 2});
  CHECK(classify_position(a).kind == Position::Kind::regular);
}
