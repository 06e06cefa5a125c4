#include <random>
#include <stdexcept>

#include "doctest.h"
#include "repkit/cover.hpp"

using namespace repkit;

TEST_CASE("neighbors are involutive and change parity") {
  std::mt19937_64 rng(31);
  for (int r : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      Word v = random_vertex(r, rng() % 9, rng);
      REQUIRE(is_valid_word(v, r));
      auto nb = neighbors(v, r);
      CHECK(nb.size() == static_cast<std::size_t>(r));
      for (auto& [w, j] : nb) {
        CHECK(is_valid_word(w, r));
        CHECK(is_source(w) != is_source(v));
        CHECK(neighbor(w, j) == v);
        CHECK(edge_label(v, w) == j);
        CHECK(distance(v, w) == 1);
      }
    }
  }
}

TEST_CASE("deck transformations act freely and preserve adjacency labels") {
  std::mt19937_64 rng(32);
  const int r = 3;
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement g = random_group_element(r, rng() % 4, rng);
    GroupElement h = random_group_element(r, rng() % 4, rng);
    Word v = random_vertex(r, rng() % 7, rng);
    CHECK(act(compose(g, h), v) == act(g, act(h, v)));
    CHECK(act(group_inverse(g), act(g, v)) == v);
    CHECK(is_source(act(g, v)) == is_source(v));
    if (!g.empty()) CHECK(act(g, v) != v);
    for (int j = 1; j <= r; ++j) CHECK(act(g, neighbor(v, j)) == neighbor(act(g, v), j));
    Word u = random_vertex(r, 2 * (rng() % 3) + v.size() % 2, rng);
    CHECK(act(transporter(v, u), v) == u);
  }
  CHECK_THROWS_AS(transporter(Word{}, Word{1}), std::invalid_argument);
}

TEST_CASE("the duality involution swaps fibers and reverses arrows") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    Word v = random_vertex(4, rng() % 8, rng);
    CHECK(phi(phi(v)) == v);
    CHECK(is_source(phi(v)) != is_source(v));
    for (int j = 1; j <= 4; ++j) CHECK(edge_label(phi(v), phi(neighbor(v, j))) == j);
  }
}

TEST_CASE("geodesics are shortest paths") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = random_vertex(3, rng() % 6, rng), v = random_vertex(3, rng() % 6, rng);
    auto path = geodesic(u, v);
    CHECK(path.front() == u);
    CHECK(path.back() == v);
    CHECK(path.size() == distance(u, v) + 1);
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(edge_label(path[i - 1], path[i]).has_value());
  }
}

TEST_CASE("minimal trees, leaves and small trees") {
  // Path [] - [1] - [1,2] - [1,2,3].
  auto path = minimal_tree({Word{}, Word{1, 2, 3}}, 3);
  CHECK(path.vertices.size() == 4);
  CHECK(is_connected(path));
  CHECK(leaves(path).size() == 2);
  CHECK(is_small_tree(path));
  CHECK(path.edges().size() == 3);

  auto star = minimal_tree({Word{1}, Word{2}, Word{3}}, 3);
  CHECK(star.vertices.size() == 4);
  CHECK(leaves(star).size() == 3);
  CHECK(!is_small_tree(star));  // no source leaf

  auto single = minimal_tree({Word{}}, 3);
  CHECK(!is_small_tree(single));

  // Two branch points at distance 2 are not allowed.
  auto close = minimal_tree({Word{1, 2}, Word{1, 3}, Word{2, 1}, Word{2, 3}}, 3);
  CHECK(!is_small_tree(close));
  auto far = minimal_tree({Word{1, 2, 1}, Word{1, 2, 3}, Word{1, 3}, Word{2, 1}, Word{2, 3}, Word{1, 2, 1, 2}}, 3);
  CHECK(is_connected(far));
  CHECK_THROWS(minimal_tree({}, 3));
}
