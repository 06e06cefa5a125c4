#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/representations.hpp"

using namespace repkit;

TEST_CASE("Kronecker projectives") {
  for (int r : {2, 3, 4}) {
    auto p1 = standard_rep(StandardName::P1, r), p2 = standard_rep(StandardName::P2, r);
    CHECK(p1.dim_vector() == DimVector{0, 1});
    CHECK(p2.dim_vector() == DimVector{1, r});
    CHECK(hom_dim(p1, p2) == static_cast<std::size_t>(r));
    CHECK(hom_dim(p2, p1) == 0);
    CHECK(ext_dim(p1, p1) == 0);
    CHECK(ext_dim(p2, p1) == 0);
    CHECK(standard_rep(StandardName::I2, r).dim_vector() == DimVector{r, 1});
    CHECK(ext_dim(standard_rep(StandardName::I1, r), p1) == static_cast<std::size_t>(r));
  }
}

TEST_CASE("Euler form values") {
  const int r = 3;
  CHECK(euler_form({1, r - 1}, {1, r - 1}, r) == 2 - r);
  CHECK(euler_form({0, 1}, {1, r}, r) == r);
  CHECK(euler_form({1, 1}, {1, 1}, r) == 2 - r);
}

TEST_CASE("Euler identity on random Kronecker pairs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 2 + trial % 3;
    auto f = trial % 2 ? FieldSpec::rationals() : FieldSpec::prime_field();
    auto m = gen::random_kronecker(r, f, 3, rng), n = gen::random_kronecker(r, f, 3, rng);
    std::size_t e = ext_dim(m, n);
    CHECK(static_cast<long long>(hom_dim(m, n)) - static_cast<long long>(e) ==
          euler_form(m.dim_vector(), n.dim_vector(), r));
  }
}

TEST_CASE("Euler identity on random cover pairs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto t1 = gen::random_tree(3, 1 + rng() % 5, rng), t2 = gen::random_tree(3, 1 + rng() % 5, rng);
    auto m = gen::random_cover_rep(t1, {}, 2, rng), n = gen::random_cover_rep(t2, {}, 2, rng);
    std::size_t e = ext_dim(m, n);
    CHECK(static_cast<long long>(hom_dim(m, n)) - static_cast<long long>(e) == euler_form(m, n));
    // Cover Euler form pushes down to the Kronecker one summed over shifts;
    // for a single pair it is bounded by the push-down hom.
    CHECK(hom_dim(m, n) <= hom_dim(pushdown(m), pushdown(n)));
  }
}

TEST_CASE("X^i and elementary modules") {
  for (int r : {3, 4}) {
    for (int i = 1; i <= r; ++i) {
      auto x = build_X_cover(i, r);
      x.validate();
      CHECK(x.dims.size() == static_cast<std::size_t>(r));
      auto p = pushdown(x);
      CHECK(p.dim_vector() == DimVector{1, r - 1});
      std::vector<long long> e(r, 0);
      e[i - 1] = 1;
      auto xe = build_X_alpha(e, r);
      CHECK(xe.dim_vector() == DimVector{1, r - 1});
      // Mutual nonzero maps between bricks of equal dimension are isomorphisms.
      CHECK(hom_dim(p, xe) == 1);
      CHECK(hom_dim(xe, xe) == 1);
    }
    CHECK_THROWS(build_X_cover(0, r));
  }
  CHECK_THROWS(build_X_alpha(std::vector<long long>{0, 0, 0}, 3));
  auto a = build_X_alpha(std::vector<long long>{1, 2, 3}, 3), b = build_X_alpha(std::vector<long long>{2, 4, 6}, 3);
  CHECK(hom_dim(a, b) == 1);
  CHECK(hom_dim(a, build_X_alpha(std::vector<long long>{1, 0, 3}, 3)) == 0);
}

TEST_CASE("push-down block layout") {
  auto s = simple_at(Word{}, 3);
  auto p = pushdown(s);
  CHECK(p.dim_vector() == DimVector{1, 0});
  auto e = thin_edge(3);
  auto pe = pushdown(e);
  CHECK(pe.dim_vector() == DimVector{1, 1});
  CHECK(pe.mats[0].is_one_at(0, 0));
  CHECK(pe.mats[1].is_zero());

  std::mt19937_64 rng(43);
  auto m = gen::random_cover_rep(gen::random_tree(3, 4, rng), {}, 2, rng);
  auto n = shift(gen::random_cover_rep(gen::random_tree(3, 4, rng), {}, 2, rng), Word{1, 2, 1, 2, 3, 2});
  auto sum = direct_sum(m, n);
  auto ps = pushdown(sum).dim_vector();
  CHECK(ps.a == m.dim_vector().a + n.dim_vector().a);
  CHECK(ps.b == m.dim_vector().b + n.dim_vector().b);
}

TEST_CASE("push-down of morphisms intertwines") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = gen::random_tree(3, 5, rng);
    auto m = gen::random_cover_rep(t, {}, 2, rng), n = gen::random_cover_rep(t, {}, 2, rng);
    auto pm = pushdown(m), pn = pushdown(n);
    for (const auto& h : hom_basis(m, n)) {
      CHECK(is_morphism(m, n, h));
      CHECK(is_morphism(pm, pn, pushdown(h, m, n)));
    }
  }
}

TEST_CASE("shifts") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = gen::random_cover_rep(gen::random_tree(3, 5, rng), {}, 2, rng);
    GroupElement g = random_group_element(3, 1 + rng() % 3, rng);
    CHECK(shift(m, Word{}) == m);
    CHECK(shift(shift(m, g), group_inverse(g)) == m);
    auto s = shift(m, g);
    s.validate();
    CHECK(pushdown(s).dim_vector() == pushdown(m).dim_vector());
    for (const auto& [v, d] : s.dims) CHECK(m.dim_at(act(g, v)) == d);
    // Push-downs of a rep and its shift are isomorphic: Hom contains End(M) ∼ shift.
    CHECK(hom_dim(pushdown(s), pushdown(m)) == hom_dim(pushdown(m), pushdown(m)));
  }
}

TEST_CASE("cover duality") {
  auto d = dual_cover(simple_at(Word{}, 3));
  CHECK(d.dims.size() == 1);
  CHECK(d.dims.count(Word{1}) == 1);
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = gen::random_cover_rep(gen::random_tree(3, 6, rng), {}, 2, rng);
    auto dm = dual_cover(m);
    dm.validate();
    CHECK(dual_cover(dm) == m);
    auto pd = pushdown(dm).dim_vector(), pm = pushdown(m).dim_vector();
    CHECK(pd == DimVector{pm.b, pm.a});
    // D commutes with push-down: same hom dimensions against both.
    auto a = pushdown(dm), b = dual(pushdown(m));
    CHECK(hom_dim(a, b) == hom_dim(b, b));
    CHECK(hom_dim(b, a) == hom_dim(a, a));
  }
}

TEST_CASE("thin tree representations") {
  auto t = minimal_tree({Word{}, Word{1, 2, 3}}, 3);
  auto m = thin_tree_rep(t);
  m.validate();
  CHECK(m.total_dim() == 4);
  CHECK(hom_dim(m, m) == 1);
  TreeSubgraph bad{3, {Word{}, Word{1, 2}}};
  CHECK_THROWS(thin_tree_rep(bad));
  CHECK(has_leaves_in_both_fibers(m));
  CHECK(!has_leaves_in_both_fibers(build_X_cover(1, 3)));
}

TEST_CASE("kernels and cokernels of cover morphisms") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = gen::random_tree(3, 4, rng);
    auto m = gen::random_cover_rep(t, {}, 2, rng), n = gen::random_cover_rep(t, {}, 2, rng);
    auto basis = hom_basis(m, n);
    if (basis.empty()) continue;
    auto k = kernel_rep(m, n, basis[0]);
    auto c = cokernel_rep(m, n, basis[0]);
    k.rep.validate();
    c.rep.validate();
    CHECK(is_morphism(k.rep, m, k.map));
    CHECK(is_morphism(n, c.rep, c.map));
    // dim M - dim K = rank f = dim N - dim C
    CHECK(m.total_dim() - k.rep.total_dim() == n.total_dim() - c.rep.total_dim());
  }
}

TEST_CASE("validation rejects malformed representations") {
  CoverRep m = thin_edge(3);
  m.dims[Word{1, 1}] = 1;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  CoverRep n = thin_edge(3);
  n.maps[{Word{}, 2}] = Matrix::identity({}, 1);
  CHECK_THROWS_AS(n.validate(), std::invalid_argument);
  KroneckerRep k = standard_rep(StandardName::P2, 3);
  k.mats.pop_back();
  CHECK_THROWS_AS(k.validate(), std::invalid_argument);
}
