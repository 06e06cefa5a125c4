#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/decomposition.hpp"
#include "repkit/invariants.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

bool pushdown_arrows_injective(const KroneckerRep& n) {
  for (const auto& m : n.mats)
    if (rank(m) != n.d1) return false;
  return true;
}

bool hom_from_coordinate_modules_vanishes(const KroneckerRep& n) {
  for (int i = 0; i < n.r; ++i) {
    std::vector<long long> e(n.r, 0);
    e[i] = 1;
    if (hom_dim(build_X_alpha(e, n.r, n.field), n) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Inj and Sur on small reps") {
  auto s = simple_at(Word{1}, 3);
  CHECK(is_inj(s));
  CHECK(!is_sur(s));
  auto t = simple_at(Word{}, 3);
  CHECK(!is_inj(t));
  CHECK(is_sur(t));
  auto x1 = build_X_cover(1, 3);
  CHECK(!is_inj(x1));
  CHECK(!is_inj(thin_edge(3)));
  CHECK(!is_sur(thin_edge(3)));
}

TEST_CASE("Inj reps have all leaves among the sources' neighbours") {
  std::mt19937_64 rng(71);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto m = tau_power_cover(gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 4, rng), {}, rng), -2);
    if (!is_inj(m)) continue;
    ++found;
    for (const auto& v : rep_leaves(m)) CHECK(!is_source(v));
  }
  CHECK(found > 0);
}

TEST_CASE("three characterisations of Inj agree") {
  std::mt19937_64 rng(72);
  int inj = 0, total = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto m = gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 5, rng), {}, rng);
    m = tau_power_cover(m, -static_cast<int>(rng() % 3));
    REQUIRE(is_indecomposable(m) == true);
    auto n = pushdown(m);
    bool a = is_inj(m), b = pushdown_arrows_injective(n), c = hom_from_coordinate_modules_vanishes(n);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(is_sur(dual_cover(m)) == a);
    CHECK(!(is_inj(m) && is_sur(m)));
    inj += a;
    ++total;
  }
  CHECK(total == 50);
  CHECK(inj > 5);
  CHECK(inj < 45);
}

TEST_CASE("EKP and EIP verdicts") {
  auto xe1 = build_X_alpha(std::vector<long long>{1, 0, 0}, 3);
  auto v = ekp_check(xe1);
  CHECK(v.status == EkpVerdict::Status::no_with_witness);
  CHECK(v.witness == std::vector<long long>{1, 0, 0});
  CHECK(rank(xe1.mats[0]) < xe1.d1);

  auto p1 = standard_rep(StandardName::P1, 3);
  CHECK(ekp_check(p1).status == EkpVerdict::Status::probably_yes);

  auto m = tau_inverse_cover(thin_edge(3));
  REQUIRE(is_inj(m));
  auto cert = ekp_check(pushdown(m), m);
  CHECK(cert.status == EkpVerdict::Status::yes_certified);
  CHECK(ekp_check(pushdown(m)).status == EkpVerdict::Status::probably_yes);
  CHECK(eip_check(pushdown(m)).status == EkpVerdict::Status::no_with_witness);

  auto s = tau_cover(thin_edge(3));
  REQUIRE(is_sur(s));
  CHECK(eip_check(pushdown(s), s).status == EkpVerdict::Status::yes_certified);
  CHECK_THROWS_AS(ekp_check(pushdown(m), thin_edge(3)), std::invalid_argument);
}

TEST_CASE("pencil witnesses found by sampling") {
  // N(gamma_1) injective alone but gamma_1 - gamma_2 kills a vector.
  auto f = FieldSpec::prime_field(5);
  KroneckerRep n;
  n.r = 3;
  n.field = f;
  n.d1 = 1;
  n.d2 = 2;
  n.mats = {Matrix::from_ints(f, 2, 1, {1, 0}), Matrix::from_ints(f, 2, 1, {1, 0}),
            Matrix::from_ints(f, 2, 1, {0, 1})};
  auto v = ekp_check(n, std::nullopt, {3, 200});
  REQUIRE(v.status == EkpVerdict::Status::no_with_witness);
  std::vector<long long> a = v.witness;
  Matrix p = n.mats[0].scaled(a[0]) + n.mats[1].scaled(a[1]) + n.mats[2].scaled(a[2]);
  CHECK(rank(p) == 0);
}

TEST_CASE("cone boundaries of named components") {
  ScanOptions strict;
  strict.check_cone = true;
  auto m1 = thin_edge(3);
  CHECK(d_minus(m1, strict) == 1);
  CHECK(d_plus(m1, strict) == 1);
  CHECK(width(m1, 1) == 1);
  auto x1 = build_X_cover(1, 3);
  CHECK(d_plus(x1, strict) + d_minus(x1, strict) - 1 == 2);
  CHECK(width(x1, 1) == 2);
  CHECK_THROWS_AS(width(m1, 3), std::logic_error);
  CHECK_THROWS_AS(d_plus(simple_at(Word{1}, 3)), std::invalid_argument);
}

TEST_CASE("d-values shift along the orbit") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = gen::random_thin_rep(gen::random_balanced_tree(3, 2 + rng() % 4, rng), {}, rng);
    TauOrbit o(m);
    int dm = d_minus(o), dp = d_plus(o);
    auto t = tau_inverse_cover(m);
    CHECK(d_minus(t) == dm - 1);
    CHECK(d_plus(t) == dp + 1);
  }
}

TEST_CASE("push-down homs summed on the cover") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = gen::random_cover_rep(gen::random_tree(3, 1 + rng() % 5, rng), {}, 2, rng);
    auto b = gen::random_cover_rep(gen::random_tree(3, 1 + rng() % 5, rng), {}, 2, rng);
    if (trial % 3 == 0) b = tau_power_cover(gen::random_thin_rep(gen::random_balanced_tree(3, 3, rng), {}, rng), -1);
    if (trial % 4 == 0) a = tau_power_cover(gen::random_thin_rep(gen::random_balanced_tree(3, 3, rng), {}, rng), 1);
    CHECK(pushdown_hom_dim(a, b) == hom_dim(pushdown(a), pushdown(b)));
  }
}

TEST_CASE("quasi-rank windows") {
  auto m1 = thin_edge(3);
  auto dense = quasi_rank_window(pushdown(m1), 4);
  TauOrbit o(m1);
  auto cover = quasi_rank_window(o, 4, 1, 1);
  for (int m = -4; m <= 4; ++m) {
    const auto& c = cover.cells.at(m);
    REQUIRE(c.known());
    if (dense.cells.at(m).source == RankCell::Source::direct && c.source != RankCell::Source::euler_lower_bound)
      CHECK(dense.cells.at(m).value == c.value);
    if (m >= 1) CHECK(c.nonzero());
  }
  CHECK(cover.determined);
  CHECK(cover.estimate <= 1);
  CHECK(cover.estimate == dense.estimate);

  auto r1 = verify_rank_width(m1, 1);
  CHECK(r1.report.width == 1);
  CHECK(r1.passed);
  auto r2 = verify_rank_width(build_X_cover(1, 3), 1);
  CHECK(r2.report.width == 2);
  CHECK(r2.passed);
}
