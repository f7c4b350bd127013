#include "omcanon/io.hpp"

#include "omcanon/realization.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace omc {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

int label_position(const std::vector<std::string>& labels, const std::string& label) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw Error("unknown element '" + label + "'");
}

std::string rational_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error("rational entries must be strings \"p/q\" or integers");
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("input must be a JSON object");
  InputDocument doc;
  try {
    doc.format = j.at("format").get<std::string>();
    doc.elements = j.at("elements").get<std::vector<std::string>>();
    if (j.contains("rank")) doc.rank = j.at("rank").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad input document: ") + e.what());
  }
  const std::set<std::string> unique(doc.elements.begin(), doc.elements.end());
  if (unique.size() != doc.elements.size()) throw Error("element labels must be unique");
  const int n = static_cast<int>(doc.elements.size());
  if (n > 63) throw Error("at most 63 elements are supported");
  if (j.contains("chirotope") == j.contains("matrix")) throw Error("give exactly one of \"chirotope\" and \"matrix\"");

  if (doc.format == "chirotope") {
    if (!j.contains("chirotope") || !j.at("chirotope").is_object()) throw Error("\"chirotope\" must be an object");
    if (doc.rank < 0 || doc.rank > n) throw Error("rank out of range");
    std::vector<std::int8_t> values(static_cast<std::size_t>(binomial(n, doc.rank)), 0);
    std::vector<bool> seen(values.size(), false);
    for (const auto& [key, val] : j.at("chirotope").items()) {
      if (!val.is_string()) throw Error("chirotope value for '" + key + "' must be \"+\", \"-\" or \"0\"");
      const std::string s = val.get<std::string>();
      const int sign = s == "+" ? 1 : (s == "-" ? -1 : (s == "0" ? 0 : 2));
      if (sign == 2) throw Error("chirotope value for '" + key + "' must be \"+\", \"-\" or \"0\"");
      std::vector<int> tuple;
      for (const auto& lab : split_commas(key)) tuple.push_back(label_position(doc.elements, lab));
      if (static_cast<int>(tuple.size()) != doc.rank) throw Error("chirotope key '" + key + "' has the wrong length");
      const int parity = sort_sign(tuple);
      if (parity == 0) throw Error("chirotope key '" + key + "' repeats an element");
      const std::size_t idx = colex_rank(mask_of(tuple));
      if (seen[idx]) throw Error("chirotope key '" + key + "' given twice");
      seen[idx] = true;
      values[idx] = static_cast<std::int8_t>(parity * sign);
    }
    doc.chirotope = Chirotope(doc.rank, n, std::move(values));
  } else if (doc.format == "matrix") {
    if (!j.contains("matrix") || !j.at("matrix").is_array()) throw Error("\"matrix\" must be an array of rows");
    const auto& rows = j.at("matrix");
    const int r = static_cast<int>(rows.size());
    if (j.contains("rank") && doc.rank != r) throw Error("rank does not match the number of matrix rows");
    doc.rank = r;
    Matrix m(r, n);
    for (int i = 0; i < r; ++i) {
      const auto& row = rows.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw Error("matrix row " + std::to_string(i) + " must have one entry per element");
      for (int c = 0; c < n; ++c) m(i, c) = parse_rational(rational_text(row.at(static_cast<std::size_t>(c))));
    }
    doc.matrix = std::move(m);
    doc.chirotope = chirotope_from_matrix(*doc.matrix);
  } else {
    throw Error("format must be \"chirotope\" or \"matrix\"");
  }
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

OrientedMatroid to_oriented_matroid(const InputDocument& doc, bool validate) {
  const Chirotope& chi = *doc.chirotope;
  if (validate) {
    if (auto d = validate_chirotope(chi)) {
      std::string msg = "invalid chirotope: " + d->message;
      if (!d->tuple.empty()) {
        msg += " at (";
        for (std::size_t i = 0; i < d->tuple.size(); ++i)
          msg += (i ? "," : "") + doc.elements[static_cast<std::size_t>(d->tuple[i])];
        msg += ")";
      }
      throw Error(msg);
    }
  } else if (std::all_of(chi.values().begin(), chi.values().end(), [](auto v) { return v == 0; })) {
    throw Error("invalid chirotope: chirotope is identically zero");
  }
  std::vector<int> ids;
  for (int i = 0; i < chi.size(); ++i) ids.push_back(i);
  return OrientedMatroid(chi, ids, doc.elements);
}

Json os_element_to_json(const OSAlgebra& a, const OrientedMatroid& om, const OSElement& x) {
  Json terms = Json::object();
  for (const auto& [s, v] : a.terms(x)) {
    std::string key;
    for (int atom : bits_of(s)) {
      if (!key.empty()) key += ",";
      const int pos = om.position_of(a.matroid().ids()[static_cast<std::size_t>(a.nbc().representative(atom))]);
      key += om.labels()[static_cast<std::size_t>(pos)];
    }
    terms[key] = format_rational(v);
  }
  Json out;
  out["grade"] = x.grade;
  out["terms"] = std::move(terms);
  return out;
}

OSElement os_element_from_json(const OSAlgebra& a, const OrientedMatroid& om, const Json& doc) {
  const int k = doc.at("grade").get<int>();
  std::vector<std::pair<Mask, Rational>> terms;
  for (const auto& [key, val] : doc.at("terms").items()) {
    Mask s = 0;
    for (const auto& lab : split_commas(key)) {
      const int pos = om.position_of_label(lab);
      if (pos < 0) throw Error("unknown element '" + lab + "'");
      const int ap = a.matroid().position_of(om.ids()[static_cast<std::size_t>(pos)]);
      s |= bit(a.matroid().atom_of(ap));
    }
    const Rational v = parse_rational(val.get<std::string>());
    if (sgn(v) == 0) throw Error("zero coefficient for '" + key + "'");
    terms.emplace_back(s, v);
  }
  return a.from_terms(k, terms);
}

}  // namespace omc
