#pragma once

#include "omcanon/linalg.hpp"
#include "omcanon/oriented_matroid.hpp"
#include "omcanon/os_algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace omc {

using Json = nlohmann::ordered_json;

/// Input file: {"format": "chirotope"|"matrix", "rank": r, "elements": [...],
/// "chirotope": {"a,b": "+", ...}} or {..., "matrix": [["1","-1/2",...], ...]}.
/// Chirotope keys list labels; keys that are absent count as "0".
struct InputDocument {
  std::string format;
  int rank = 0;
  std::vector<std::string> elements;
  std::optional<Chirotope> chirotope;
  std::optional<Matrix> matrix;
};

InputDocument parse_input(const std::string& text);
InputDocument load_input(const std::string& path);

/// Builds the oriented matroid; when `validate` is set the chirotope axioms
/// are checked first and a violation is reported as Error naming the tuple.
OrientedMatroid to_oriented_matroid(const InputDocument& doc, bool validate);

/// {"grade": k, "terms": {"a,b": "p/q", ...}} keyed by atom representative labels.
Json os_element_to_json(const OSAlgebra& a, const OrientedMatroid& om, const OSElement& x);
OSElement os_element_from_json(const OSAlgebra& a, const OrientedMatroid& om, const Json& doc);

}  // namespace omc
