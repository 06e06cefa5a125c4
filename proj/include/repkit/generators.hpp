#pragma once

// Seeded generators shared by the property tests and the verify suites.

#include <random>
#include <vector>

#include "repkit/representations.hpp"

namespace repkit::gen {

// A random connected subtree grown from a random vertex near x0.
inline TreeSubgraph random_tree(int r, std::size_t size, std::mt19937_64& rng) {
  TreeSubgraph t;
  t.r = r;
  Word start = random_vertex(r, rng() % 3, rng);
  t.vertices.insert(start);
  std::vector<Word> members{start};
  std::size_t guard = 0;
  while (t.vertices.size() < size && guard++ < 100 * size) {
    const Word& v = members[rng() % members.size()];
    Word w = neighbor(v, 1 + static_cast<int>(rng() % r));
    if (t.vertices.insert(w).second) members.push_back(w);
  }
  return t;
}

// A random tree with leaves in both fibers. Some sizes admit none (a path
// on three vertices), so the size creeps up after repeated misses.
inline TreeSubgraph random_balanced_tree(int r, std::size_t size, std::mt19937_64& rng) {
  for (int attempt = 0;; ++attempt) {
    TreeSubgraph t = random_tree(r, (size < 2 ? 2 : size) + attempt / 8, rng);
    bool src = false, snk = false;
    for (const auto& v : leaves(t)) (is_source(v) ? src : snk) = true;
    if (src && snk) return t;
  }
}

// Thin tree representation with random nonzero scalars; indecomposable.
inline CoverRep random_thin_rep(const TreeSubgraph& t, FieldSpec f, std::mt19937_64& rng) {
  CoverRep m = thin_tree_rep(t, f);
  for (auto& [a, mat] : m.maps) {
    long long c = 1 + static_cast<long long>(rng() % 5);
    mat = Matrix::from_ints(f, 1, 1, {c});
  }
  return m;
}

// Random dimensions up to maxdim on a tree and random maps; may decompose.
inline CoverRep random_cover_rep(const TreeSubgraph& t, FieldSpec f, std::size_t maxdim, std::mt19937_64& rng) {
  CoverRep m;
  m.r = t.r;
  m.field = f;
  for (const auto& v : t.vertices) m.dims[v] = 1 + rng() % maxdim;
  for (const auto& e : t.edges()) m.maps[e] = Matrix::random(f, m.dims[arrow_target(e)], m.dims[e.first], rng, 2);
  m.trim();
  return m;
}

inline KroneckerRep random_kronecker(int r, FieldSpec f, std::size_t maxdim, std::mt19937_64& rng) {
  KroneckerRep k;
  k.r = r;
  k.field = f;
  k.d1 = rng() % (maxdim + 1);
  k.d2 = rng() % (maxdim + 1);
  for (int j = 0; j < r; ++j) k.mats.push_back(Matrix::random(f, k.d2, k.d1, rng, 2));
  return k;
}

}  // namespace repkit::gen
