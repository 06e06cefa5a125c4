#include "repkit/serialize.hpp"

#include <regex>
#include <sstream>

namespace repkit {

namespace {

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& base, const char* key) {
  if (!j.is_object()) throw ParseError(base, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(base, key), "missing field");
  return *it;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long long>();
}

std::size_t as_count(const Json& j, const std::string& path) {
  long long v = as_int(j, path);
  if (v < 0) throw ParseError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Word parse_word(const Json& j, const std::string& path, int r) {
  Word w;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) w.push_back(static_cast<int>(as_int(j[i], at(path, i))));
  if (!is_valid_word(w, r)) throw ParseError(path, "not a reduced word over 1.." + std::to_string(r));
  return w;
}

Json entry_json(const Matrix& m, std::size_t i, std::size_t k) {
  if (m.field().is_prime()) return m.residue_at(i, k);
  return m.entry_string(i, k);
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry_json(m, i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

void set_entry(Matrix& m, std::size_t i, std::size_t k, const Json& e, const std::string& path) {
  const FieldSpec& f = m.field();
  if (f.is_prime()) {
    long long v = as_int(e, path);
    if (v < 0 || v >= static_cast<long long>(f.p)) throw ParseError(path, "entry outside [0,p)");
    m.set(i, k, v);
    return;
  }
  if (e.is_number_integer()) {
    m.set(i, k, e.get<long long>());
    return;
  }
  static const std::regex rational(R"(-?[0-9]+(/[0-9]+)?)");
  if (!e.is_string() || !std::regex_match(e.get<std::string>(), rational))
    throw ParseError(path, "expected an integer or \"p/q\" string");
  const std::string s = e.get<std::string>();
  auto slash = s.find('/');
  if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
    throw ParseError(path, "zero denominator");
  mpq_class q(s, 10);
  q.canonicalize();
  m.set(i, k, q);
}

Matrix parse_matrix(const Json& j, const std::string& path, FieldSpec f, std::size_t rows, std::size_t cols) {
  as_array(j, path);
  if (j.size() != rows)
    throw ParseError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string rp = at(path, i);
    as_array(j[i], rp);
    if (j[i].size() != cols)
      throw ParseError(rp, "expected " + std::to_string(cols) + " columns, got " + std::to_string(j[i].size()));
    for (std::size_t k = 0; k < cols; ++k) set_entry(m, i, k, j[i][k], at(rp, k));
  }
  return m;
}

FieldSpec parse_field(const Json& j, const std::string& path) {
  const Json& t = member(j, path, "type");
  if (t == "rational") return FieldSpec::rationals();
  if (t != "prime") throw ParseError(at(path, "type"), "expected \"rational\" or \"prime\"");
  long long p = as_int(member(j, path, "p"), at(path, "p"));
  FieldSpec f = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
  try {
    if (p < 0 || p > 0xffffffffLL) throw std::invalid_argument("bad prime");
    validate_field(f);
  } catch (const std::invalid_argument& e) {
    throw ParseError(at(path, "p"), e.what());
  }
  return f;
}

int parse_r(const Json& j) {
  long long r = as_int(member(j, "", "r"), "/r");
  if (r < 2 || r > 64) throw ParseError("/r", "r must lie in [2, 64]");
  return static_cast<int>(r);
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  if (f.is_prime()) return {{"type", "prime"}, {"p", f.p}};
  return {{"type", "rational"}};
}

Json to_json(const CoverRep& m) {
  Json vs = Json::array(), as = Json::array();
  for (const auto& [v, d] : m.dims) vs.push_back({{"word", v}, {"dim", d}});
  for (const auto& [a, mat] : m.maps)
    as.push_back({{"source_word", a.first}, {"label", a.second}, {"matrix", matrix_json(mat)}});
  return {{"kind", "cover"}, {"r", m.r}, {"field", field_to_json(m.field)},
          {"cover", {{"vertices", std::move(vs)}, {"arrows", std::move(as)}}}};
}

Json to_json(const KroneckerRep& m) {
  Json ms = Json::array();
  for (const auto& mat : m.mats) ms.push_back(matrix_json(mat));
  return {{"kind", "kronecker"}, {"r", m.r}, {"field", field_to_json(m.field)},
          {"kronecker", {{"d1", m.d1}, {"d2", m.d2}, {"matrices", std::move(ms)}}}};
}

Json to_json(const AnyRep& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

CoverRep cover_from_json(const Json& j) {
  CoverRep m;
  m.r = parse_r(j);
  m.field = parse_field(member(j, "", "field"), "/field");
  const Json& c = member(j, "", "cover");
  const Json& vs = as_array(member(c, "/cover", "vertices"), "/cover/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string p = at("/cover/vertices", i);
    Word w = parse_word(member(vs[i], p, "word"), at(p, "word"), m.r);
    std::size_t d = as_count(member(vs[i], p, "dim"), at(p, "dim"));
    if (d == 0) throw ParseError(at(p, "dim"), "support dimensions must be positive");
    if (!m.dims.emplace(w, d).second) throw ParseError(at(p, "word"), "duplicate vertex");
  }
  const Json& as = as_array(member(c, "/cover", "arrows"), "/cover/arrows");
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string p = at("/cover/arrows", i);
    Word s = parse_word(member(as[i], p, "source_word"), at(p, "source_word"), m.r);
    if (!is_source(s)) throw ParseError(at(p, "source_word"), "arrows start at even-length words");
    long long label = as_int(member(as[i], p, "label"), at(p, "label"));
    if (label < 1 || label > m.r) throw ParseError(at(p, "label"), "label outside 1..r");
    ArrowKey key{s, static_cast<int>(label)};
    Word t = arrow_target(key);
    if (!m.dims.count(s) || !m.dims.count(t)) throw ParseError(p, "arrow endpoint outside the support");
    Matrix mat = parse_matrix(member(as[i], p, "matrix"), at(p, "matrix"), m.field, m.dims.at(t), m.dims.at(s));
    if (!m.maps.emplace(key, std::move(mat)).second) throw ParseError(p, "duplicate arrow");
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("/cover", e.what());
  }
  m.trim();
  return m;
}

KroneckerRep kronecker_from_json(const Json& j) {
  KroneckerRep m;
  m.r = parse_r(j);
  m.field = parse_field(member(j, "", "field"), "/field");
  const Json& k = member(j, "", "kronecker");
  m.d1 = as_count(member(k, "/kronecker", "d1"), "/kronecker/d1");
  m.d2 = as_count(member(k, "/kronecker", "d2"), "/kronecker/d2");
  const Json& ms = as_array(member(k, "/kronecker", "matrices"), "/kronecker/matrices");
  if (ms.size() != static_cast<std::size_t>(m.r))
    throw ParseError("/kronecker/matrices", "expected r matrices");
  for (std::size_t i = 0; i < ms.size(); ++i)
    m.mats.push_back(parse_matrix(ms[i], at("/kronecker/matrices", i), m.field, m.d2, m.d1));
  return m;
}

AnyRep rep_from_json(const Json& j) {
  const Json& kind = member(j, "", "kind");
  if (kind == "cover") return cover_from_json(j);
  if (kind == "kronecker") return kronecker_from_json(j);
  throw ParseError("/kind", "expected \"cover\" or \"kronecker\"");
}

AnyRep parse_rep(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return rep_from_json(j);
}

std::string serialize(const AnyRep& m) { return to_json(m).dump(2) + "\n"; }

std::string export_dot(const CoverRep& m) {
  std::ostringstream os;
  os << "digraph cover {\n";
  std::map<Word, std::size_t, CanonicalLess> id;
  for (const auto& [v, d] : m.dims) {
    std::size_t k = id.size();
    id[v] = k;
    os << "  v" << k << " [label=\"" << word_string(v) << ":" << d << "\"];\n";
  }
  for (const auto& [a, mat] : m.maps)
    os << "  v" << id.at(a.first) << " -> v" << id.at(arrow_target(a)) << " [label=\"" << a.second << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const TreeSubgraph& t) {
  std::ostringstream os;
  os << "digraph tree {\n";
  std::map<Word, std::size_t, CanonicalLess> id;
  for (const auto& v : t.vertices) {
    std::size_t k = id.size();
    id[v] = k;
    os << "  v" << k << " [label=\"" << word_string(v) << "\"];\n";
  }
  for (const auto& [s, label] : t.edges())
    os << "  v" << id.at(s) << " -> v" << id.at(neighbor(s, label)) << " [label=\"" << label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace repkit
