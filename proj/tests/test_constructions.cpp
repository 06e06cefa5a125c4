#include <random>

#include "doctest.h"
#include "repkit/generators.hpp"
#include "repkit/constructions.hpp"
#include "repkit/translation.hpp"

using namespace repkit;

namespace {

Word first_leaf(const CoverRep& m, bool source) {
  for (const auto& v : rep_leaves(m))
    if (is_source(v) == source) return v;
  return {};
}

// A random balanced rep placed away from the base vertex.
CoverRep random_piece(std::mt19937_64& rng) {
  return gen::random_thin_rep(gen::random_balanced_tree(3, 3 + rng() % 4, rng), {}, rng);
}

}  // namespace

TEST_CASE("A-trees") {
  for (int l = 1; l <= 3; ++l)
    for (int n = 4 * l; n <= 16; n += 2) {
      ATree t = build_A_tree_rep(l, n, Word{}, 1);
      CHECK(t.rep.dim_vector() == DimVector{n / 2 + l, n / 2});
      CHECK(is_small_tree(support_tree(t.rep)));
      CHECK(t.spine.size() == static_cast<std::size_t>(n));
      CHECK(t.teeth.size() == static_cast<std::size_t>(l));
      CHECK(!t.rep.dims.count(Word{}));
      CHECK(is_balanced(t.rep));
    }
  CHECK_THROWS_AS(build_A_tree_rep(2, 6, Word{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_A_tree_rep(1, 5, Word{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_A_tree_rep(1, 4, Word{1}, 1), std::invalid_argument);
}

TEST_CASE("leaf connections") {
  auto m = thin_edge(3);                            // [] -> [1]
  auto n = thin_tree_rep(minimal_tree({Word{2}, Word{2, 1}}, 3));  // [2,1] -> [2]
  auto c = leaf_connected(n, m);
  REQUIRE(c.has_value());
  CHECK(c->arrow == ArrowKey{Word{}, 2});
  CHECK(!leaf_connected(m, n).has_value());
  CHECK(!leaf_connected(m, m).has_value());
  auto g = glue(*c);
  CHECK(g.rep.total_dim() == 4);
  CHECK(is_morphism(g.sequence.left, g.sequence.middle, g.sequence.inclusion));
  CHECK(is_morphism(g.sequence.middle, g.sequence.right, g.sequence.projection));
  CHECK(decompose(g.rep).count() == 1);
  CHECK(ext_dim(m, n) >= 1);
  CHECK_THROWS_AS(glue(*c, Matrix(FieldSpec{}, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(glue(*c, Matrix(FieldSpec{}, 2, 1)), std::invalid_argument);
}

TEST_CASE("gluing random balanced pairs") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = random_piece(rng), m = random_piece(rng);
    Word x = first_leaf(m, true), y = first_leaf(n, false);
    auto sc = make_leaf_connected(n, m, x, y);
    int label = sc.connection.arrow.second;
    for (int j = 1; j <= 3; ++j) {
      if (m.dims.count(neighbor(x, j))) CHECK(j != label);
      if (n.dims.count(neighbor(y, j))) CHECK(j != label);
    }
    CHECK(leaf_connected(sc.connection.left, m).has_value());
    auto g = glue(sc.connection, Matrix::from_ints(FieldSpec{}, 1, 1, {1 + static_cast<long long>(rng() % 7)}));
    CHECK(g.rep.total_dim() == n.total_dim() + m.total_dim());
    auto d = decompose(g.rep, {static_cast<std::uint64_t>(trial)});
    CHECK(d.conclusive);
    CHECK(d.count() == 1);
    CHECK(classify_position(pushdown(g.rep)).kind == Position::Kind::regular);
    std::vector<CoverRep> pieces{sc.connection.left, m};
    auto s = check_chain_bounds(pieces, glue_chain(pieces));
    CHECK(s.minus_ok);
    CHECK(s.plus_ok);
  }
}

TEST_CASE("chains of three") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_piece(rng), b = random_piece(rng), c = random_piece(rng);
    // (b, c) then (a, b * c): shift each new piece into place.
    auto s1 = make_leaf_connected(b, c, first_leaf(c, true), first_leaf(b, false));
    CoverRep b1 = s1.connection.left;
    auto s2 = make_leaf_connected(a, b1, first_leaf(b1, true), first_leaf(a, false));
    CoverRep a1 = s2.connection.left;
    std::vector<CoverRep> pieces{a1, b1, c};
    auto chain = glue_chain(pieces);
    CHECK(chain.rep.total_dim() == a.total_dim() + b.total_dim() + c.total_dim());
    CHECK(decompose(chain.rep).count() == 1);
    CHECK(chain.from_left.size() == 3);
    CHECK(chain.from_right.size() == 3);
    auto s = check_chain_bounds(pieces, chain);
    CHECK(s.minus_ok);
    CHECK(s.plus_ok);
  }
}

TEST_CASE("the M_n family") {
  auto ms = family_Mn(5);
  REQUIRE(ms.size() == 5);
  CHECK(ms[0].total_dim() == 2);
  CHECK(classify_position(pushdown(ms[0])).kind == Position::Kind::regular);
  for (int i : {2, 4}) {  // M_3, M_5
    CHECK(is_balanced(ms[i]));
    CHECK(d_minus(ms[i]) >= 2);
    CHECK(d_plus(ms[i]) >= 2);
    // quasi-length i+1 in a width-one component
    CHECK(width(ms[i], i + 1) == 1);
  }
  CHECK(ms[2].dim_vector() == DimVector{8, 8});
  CHECK(ms[4].dim_vector() == DimVector{55, 55});
  // irreducible epi M_2 -> M_1 and mono M_2 -> M_3
  CHECK(hom_dim(ms[1], ms[0]) >= 1);
  CHECK(hom_dim(ms[1], ms[2]) >= 1);
}

TEST_CASE("F_n from M_3") {
  auto m3 = family_M(3);
  auto f = family_Fn(m3);
  CHECK(f.l == 1);
  CHECK(f.p == 4);
  CHECK(f.rep.dim_vector() == DimVector{19, 18});
  CHECK(f.d_minus == d_minus(m3));
  CHECK(f.d_plus == d_plus(m3));
  CHECK(decompose(f.rep).count() == 1);
  auto f6 = family_Fn(m3, 6);
  CHECK(f6.rep.dim_vector() == DimVector{20, 19});
  CHECK(width(f6.rep, 1) == 3);
  CHECK_THROWS_AS(family_Fn(m3, 5), std::invalid_argument);
  CHECK_THROWS_AS(family_Fn(thin_edge(3)), std::runtime_error);
}

TEST_CASE("small widths") {
  for (int m = 1; m <= 3; ++m) {
    auto c = width_m_component(m);
    CHECK(c.report.width == m);
    CHECK(width(c.rep, c.ql) == m);
    auto d = c.rep.dim_vector();
    CHECK((d.a == d.b + 1 || d.b == d.a + 1));
    CHECK(is_quasi_simple(c.rep).route == "dimension");
    CHECK(classify_position(pushdown(c.rep)).kind == Position::Kind::regular);
  }
  CHECK_THROWS_AS(width_m_component(0), std::invalid_argument);
}
