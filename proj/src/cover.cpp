#include "repkit/cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace repkit {

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

bool is_valid_word(const Word& w, int r) {
  for (int c : w)
    if (c < 1 || c > r) return false;
  return is_reduced(w);
}

std::string word_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Word concat_reduce(const Word& a, const Word& b) {
  Word out = a;
  for (int c : b) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word neighbor(const Word& v, int label) {
  Word w = v;
  if (!w.empty() && w.back() == label)
    w.pop_back();
  else
    w.push_back(label);
  return w;
}

std::vector<std::pair<Word, int>> neighbors(const Word& v, int r) {
  std::vector<std::pair<Word, int>> out;
  out.reserve(r);
  for (int j = 1; j <= r; ++j) out.emplace_back(neighbor(v, j), j);
  return out;
}

std::optional<int> edge_label(const Word& u, const Word& v) {
  if (u.size() + 1 == v.size() && std::equal(u.begin(), u.end(), v.begin())) return v.back();
  if (v.size() + 1 == u.size() && std::equal(v.begin(), v.end(), u.begin())) return u.back();
  return std::nullopt;
}

namespace {
std::size_t common_prefix(const Word& u, const Word& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[k] == v[k]) ++k;
  return k;
}
}  // namespace

std::size_t distance(const Word& u, const Word& v) {
  return u.size() + v.size() - 2 * common_prefix(u, v);
}

std::vector<Word> geodesic(const Word& u, const Word& v) {
  std::size_t k = common_prefix(u, v);
  std::vector<Word> path;
  for (std::size_t len = u.size(); len > k; --len) path.emplace_back(u.begin(), u.begin() + len);
  for (std::size_t len = k; len <= v.size(); ++len) path.emplace_back(v.begin(), v.begin() + len);
  return path;
}

GroupElement group_inverse(const GroupElement& g) { return Word(g.rbegin(), g.rend()); }

GroupElement compose(const GroupElement& g, const GroupElement& h) { return concat_reduce(g, h); }

Word act(const GroupElement& g, const Word& v) { return concat_reduce(g, v); }

GroupElement transporter(const Word& u, const Word& v) {
  if (u.size() % 2 != v.size() % 2) throw std::invalid_argument("transporter: vertices lie in different fibers");
  return concat_reduce(v, group_inverse(u));
}

Word phi(const Word& v) { return concat_reduce(Word{1}, v); }

Word random_vertex(int r, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, r);
  Word w;
  while (w.size() < length) {
    int c = d(rng);
    if (w.empty() || w.back() != c) w.push_back(c);
  }
  return w;
}

GroupElement random_group_element(int r, std::size_t half_length, std::mt19937_64& rng) {
  return random_vertex(r, 2 * half_length, rng);
}

std::vector<std::pair<Word, int>> TreeSubgraph::edges() const {
  std::vector<std::pair<Word, int>> out;
  for (const auto& v : vertices) {
    if (!is_source(v)) continue;
    for (int j = 1; j <= r; ++j)
      if (vertices.count(neighbor(v, j))) out.emplace_back(v, j);
  }
  return out;
}

std::size_t TreeSubgraph::degree(const Word& v) const {
  std::size_t d = 0;
  for (int j = 1; j <= r; ++j)
    if (vertices.count(neighbor(v, j))) ++d;
  return d;
}

TreeSubgraph minimal_tree(const std::vector<Word>& xs, int r) {
  if (xs.empty()) throw std::invalid_argument("minimal_tree of an empty set");
  TreeSubgraph t;
  t.r = r;
  // Paths from one fixed member to all others already span the minimal tree.
  const Word& root = xs.front();
  for (const auto& x : xs)
    for (auto& v : geodesic(root, x)) t.vertices.insert(std::move(v));
  return t;
}

VertexSet leaves(const TreeSubgraph& t) {
  VertexSet out;
  for (const auto& v : t.vertices)
    if (t.degree(v) <= 1) out.insert(v);
  return out;
}

bool is_connected(const TreeSubgraph& t) {
  if (t.vertices.empty()) return true;
  VertexSet seen{*t.vertices.begin()};
  std::deque<Word> queue{*t.vertices.begin()};
  while (!queue.empty()) {
    Word v = queue.front();
    queue.pop_front();
    for (auto& [w, j] : neighbors(v, t.r))
      if (t.vertices.count(w) && seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == t.vertices.size();
}

bool is_small_tree(const TreeSubgraph& t) {
  bool source_leaf = false, sink_leaf = false;
  std::vector<Word> branch;
  for (const auto& v : t.vertices) {
    std::size_t d = t.degree(v);
    if (d > 3) return false;
    if (d == 3) branch.push_back(v);
    if (d <= 1) (is_source(v) ? source_leaf : sink_leaf) = true;
  }
  if (!source_leaf || !sink_leaf) return false;
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      if (distance(branch[i], branch[j]) < 3) return false;
  return true;
}

}  // namespace repkit
