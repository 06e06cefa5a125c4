#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "repkit/representations.hpp"

namespace repkit {

using Json = nlohmann::json;

// Malformed input; `path` is a JSON pointer to the offending value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(what + " at " + (path.empty() ? "/" : path)), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

using AnyRep = std::variant<CoverRep, KroneckerRep>;

Json field_to_json(const FieldSpec& f);
Json to_json(const CoverRep& m);
Json to_json(const KroneckerRep& m);
Json to_json(const AnyRep& m);

// Validates shapes, words and entry ranges; throws ParseError.
AnyRep rep_from_json(const Json& j);
CoverRep cover_from_json(const Json& j);
KroneckerRep kronecker_from_json(const Json& j);

AnyRep parse_rep(const std::string& text);
std::string serialize(const AnyRep& m);  // two-space indented, trailing newline

// Nodes "word:dim" in canonical order, edges source -> sink labelled by the
// arrow label.
std::string export_dot(const CoverRep& m);
std::string export_dot(const TreeSubgraph& t);

}  // namespace repkit
