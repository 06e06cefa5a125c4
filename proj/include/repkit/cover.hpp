#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace repkit {

// A reduced word over {1..r}: adjacent letters differ. Vertices of the cover
// are such words (walks from vertex 1 of the Kronecker quiver); even length
// means a source, odd length a sink. Deck transformations are even-length
// reduced words acting by left concatenation.
using Word = std::vector<int>;
using CoverVertex = Word;
using GroupElement = Word;

// Length first, then lexicographic. This is the block order of push-down.
struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int c : w) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h ^ w.size();
  }
};

using VertexSet = std::set<Word, CanonicalLess>;

bool is_reduced(const Word& w);
bool is_valid_word(const Word& w, int r);
inline bool is_source(const Word& v) { return v.size() % 2 == 0; }
std::string word_string(const Word& w);

// Concatenate and cancel adjacent equal letters.
Word concat_reduce(const Word& a, const Word& b);

Word neighbor(const Word& v, int label);
std::vector<std::pair<Word, int>> neighbors(const Word& v, int r);
// Label of the arrow joining u and v, if adjacent.
std::optional<int> edge_label(const Word& u, const Word& v);

std::size_t distance(const Word& u, const Word& v);
// Vertices on the unique path from u to v, both ends included.
std::vector<Word> geodesic(const Word& u, const Word& v);

GroupElement group_inverse(const GroupElement& g);
GroupElement compose(const GroupElement& g, const GroupElement& h);
Word act(const GroupElement& g, const Word& v);
// The unique g with act(g,u) = v; throws std::invalid_argument on a fiber mismatch.
GroupElement transporter(const Word& u, const Word& v);

// The duality involution: prepend letter 1 and reduce.
Word phi(const Word& v);

Word random_vertex(int r, std::size_t length, std::mt19937_64& rng);
GroupElement random_group_element(int r, std::size_t half_length, std::mt19937_64& rng);

struct TreeSubgraph {
  int r = 0;
  VertexSet vertices;

  // Arrows (source, label) with both endpoints in the tree, in canonical order.
  std::vector<std::pair<Word, int>> edges() const;
  std::size_t degree(const Word& v) const;
  bool contains(const Word& v) const { return vertices.count(v) > 0; }
};

TreeSubgraph minimal_tree(const std::vector<Word>& xs, int r);
VertexSet leaves(const TreeSubgraph& t);
bool is_small_tree(const TreeSubgraph& t);
bool is_connected(const TreeSubgraph& t);

}  // namespace repkit
