#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/decomposition.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

std::size_t total(const CoverDecomposition& d) {
  std::size_t t = 0;
  for (const auto& s : d.summands) t += s.rep.total_dim() * s.multiplicity;
  return t;
}

}  // namespace

TEST_CASE("endomorphism algebras") {
  auto e = thin_edge(3);
  CHECK(end_dim(e) == 1);
  CHECK(is_brick(e));
  CHECK(end_dim(direct_sum(e, e)) == 4);
  CHECK(!is_brick(direct_sum(e, e)));
  CoverWindow w = CoverWindow::over(e.support(), 3);
  EndAlgebra a(to_finite(direct_sum(e, e), w));
  CHECK(a.dimension() == 4);
  CHECK(a.trace_radical_dim() == 0);  // M_2(k) is semisimple
  CHECK(!a.is_local());
}

TEST_CASE("local endomorphism rings are detected") {
  // Kronecker rep (2,2) with maps (I, N, 0): End = k[N]/N^2 is local.
  auto f = FieldSpec::prime_field();
  KroneckerRep m;
  m.r = 3;
  m.field = f;
  m.d1 = m.d2 = 2;
  m.mats = {Matrix::identity(f, 2), Matrix::from_ints(f, 2, 2, {0, 1, 0, 0}), Matrix(f, 2, 2)};
  EndAlgebra a(to_finite(m));
  CHECK(a.dimension() == 2);
  CHECK(a.trace_radical_dim() == 1);
  CHECK(a.is_local());
  CHECK(is_indecomposable(to_finite(m)) == true);
  CHECK(decompose(m).count() == 1);
}

TEST_CASE("decomposition of disjoint and overlapping sums") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = gen::random_thin_rep(gen::random_tree(3, 2 + rng() % 4, rng), {}, rng);
    auto b = gen::random_thin_rep(gen::random_tree(3, 2 + rng() % 4, rng), {}, rng);
    auto sum = direct_sum(a, b);
    auto d = decompose(sum, {static_cast<std::uint64_t>(trial)});
    REQUIRE(d.conclusive);
    CHECK(d.count() == 2);
    CHECK(total(d) == sum.total_dim());
    for (const auto& s : d.summands) CHECK(is_indecomposable(s.rep) == true);
    auto triple = direct_sum(direct_sum(a, a), b);
    auto d3 = decompose(triple, {static_cast<std::uint64_t>(trial)});
    CHECK(d3.count() == 3);
    CHECK(total(d3) == triple.total_dim());
  }
}

TEST_CASE("decomposition of Kronecker sums") {
  auto x = build_X_alpha(std::vector<long long>{1, 0, 0}, 3);
  auto y = build_X_alpha(std::vector<long long>{0, 1, 0}, 3);
  auto d = decompose(direct_sum(direct_sum(x, y), x));
  CHECK(d.conclusive);
  CHECK(d.count() == 3);
  CHECK(d.summands.size() == 2);
}

TEST_CASE("isomorphism tests") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = gen::random_cover_rep(gen::random_tree(3, 4, rng), {}, 2, rng);
    CHECK(iso_test(m, m).verdict == IsoVerdict::iso);
    // A random change of basis is detected as an isomorphism.
    CoverRep n = m;
    std::map<Word, Matrix, CanonicalLess> basis, inv;
    for (const auto& [v, d] : m.dims) {
      Matrix b = Matrix::random(m.field, d, d, rng);
      while (rank(b) < d) b = Matrix::random(m.field, d, d, rng);
      basis[v] = b;
      inv[v] = *inverse(b);
    }
    for (auto& [a, mat] : n.maps) mat = inv[arrow_target(a)] * mat * basis[a.first];
    CHECK(iso_test(m, n).verdict == IsoVerdict::iso);
    GroupElement g = random_group_element(3, 1 + rng() % 2, rng);
    auto s = shift(m, g);
    CHECK(iso_test(m, s).verdict == IsoVerdict::not_iso);
    CHECK(iso_test(pushdown(m), pushdown(s)).verdict == IsoVerdict::iso);
    auto found = find_shift_iso(m, s);
    REQUIRE(found.has_value());
    CHECK(iso_test(shift(m, *found), s).verdict == IsoVerdict::iso);
  }
  auto e = thin_edge(3);
  CHECK(iso_test(e, simple_at(Word{}, 3)).verdict == IsoVerdict::not_iso);
}

TEST_CASE("almost split sequences of bricks") {
  auto m1 = thin_edge(3);
  auto seq = ar_sequence(m1);
  CHECK(seq.middle.total_dim() == m1.total_dim() + seq.left.total_dim());
  CHECK(is_morphism(seq.left, seq.middle, seq.inclusion));
  CHECK(is_morphism(seq.middle, seq.right, seq.projection));
  auto d = decompose(seq.middle);
  CHECK(d.count() == 1);  // M_1 is quasi-simple
  CHECK(is_quasi_simple(m1).verdict == QuasiSimpleVerdict::yes);

  // The middle term M_2 sits in layer two; its sequence has two middle summands.
  auto m2 = d.summands.front().rep;
  REQUIRE(is_brick(m2));
  auto seq2 = ar_sequence(m2);
  auto d2 = decompose(seq2.middle);
  CHECK(d2.count() == 2);
  auto q = is_quasi_simple(m2);
  CHECK(q.verdict == QuasiSimpleVerdict::no);
  CHECK(q.route == "ar-sequence");

  CHECK_THROWS_AS(ar_sequence(direct_sum(m1, m1)), std::invalid_argument);
}

TEST_CASE("quasi-simplicity fast path") {
  auto a = thin_tree_rep(minimal_tree({Word{}, Word{1, 2, 1, 2}}, 3));
  auto q = is_quasi_simple(a);
  CHECK(q.verdict == QuasiSimpleVerdict::yes);
  CHECK(q.route == "dimension");
}

TEST_CASE("balanced thin trees") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = gen::random_balanced_tree(3, 2 + rng() % 6, rng);
    auto m = gen::random_thin_rep(t, {}, rng);
    CHECK(is_balanced(m));
    CHECK(classify_position(pushdown(m)).kind == Position::Kind::regular);
  }
  CHECK(!is_balanced(build_X_cover(1, 3)));
}
