#include "classdoc.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

namespace abelcone::doc {

using canring::Monomial;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte, const std::string& msg) {
  auto [line, col] = line_col(text, byte);
  fail(ErrorCode::Parse,
       msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")");
}

// Best-effort location of a token for error messages.
std::size_t locate(const std::string& text, const std::string& token, int occurrence = 1) {
  std::size_t pos = 0;
  for (int i = 0; i < occurrence; ++i) {
    pos = text.find(token, i == 0 ? 0 : pos + 1);
    if (pos == std::string::npos) return 0;
  }
  return pos;
}

Monomial parse_monomial_key(const std::string& text, const std::string& key, int degree) {
  auto bad = [&](const std::string& why) {
    parse_fail(text, locate(text, "\"" + key + "\""), "bad monomial key '" + key + "': " + why);
  };
  Monomial m;
  if (key == "1") {
    if (degree != 0) bad("the empty monomial needs degree 0");
    return m;
  }
  int last_rank = 0;  // factors must appear in the order t1, t2, l
  std::size_t pos = 0;
  while (pos < key.size()) {
    int* slot = nullptr;
    int rank = 0;
    if (key.compare(pos, 2, "t1") == 0) {
      rank = 1;
      slot = &m.i;
      pos += 2;
    } else if (key.compare(pos, 2, "t2") == 0) {
      rank = 2;
      slot = &m.j;
      pos += 2;
    } else if (key.compare(pos, 1, "l") == 0) {
      rank = 3;
      slot = &m.k;
      pos += 1;
    } else {
      bad("expected t1, t2 or l");
    }
    if (rank <= last_rank) bad("factors must appear once, in the order t1, t2, l");
    last_rank = rank;
    int exponent = 1;
    if (pos < key.size() && key[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
      if (pos == start) bad("missing exponent");
      exponent = std::stoi(key.substr(start, pos - start));
    }
    *slot = exponent;
    if (pos < key.size()) {
      if (key[pos] != '*') bad("expected '*'");
      ++pos;
      if (pos == key.size()) bad("trailing '*'");
    }
  }
  if (m.degree() != degree) bad("monomial degree does not match the document degree");
  return m;
}

}  // namespace

ClassDocument parse_class_document(const std::string& text) {
  // Duplicate-key detection through the parser callback.
  std::vector<std::set<std::string>> key_stack;
  std::string duplicate_key;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        key_stack.emplace_back();
        break;
      case json::parse_event_t::object_end:
        key_stack.pop_back();
        break;
      case json::parse_event_t::key: {
        auto key = parsed.get<std::string>();
        if (!key_stack.empty() && !key_stack.back().insert(key).second &&
            duplicate_key.empty())
          duplicate_key = key;
        break;
      }
      default:
        break;
    }
    return true;
  };

  json root;
  try {
    root = json::parse(text, callback);
  } catch (const json::parse_error& e) {
    parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  if (!duplicate_key.empty())
    parse_fail(text, locate(text, "\"" + duplicate_key + "\"", 2),
               "duplicate key '" + duplicate_key + "'");
  if (!root.is_object()) parse_fail(text, 0, "expected a JSON object");
  for (const auto& [key, value] : root.items())
    if (key != "g" && key != "degree" && key != "coeffs")
      parse_fail(text, locate(text, "\"" + key + "\""), "unknown field '" + key + "'");
  if (!root.contains("g") || !root["g"].is_number_integer())
    parse_fail(text, 0, "missing integer field 'g'");
  if (!root.contains("degree") || !root["degree"].is_number_integer())
    parse_fail(text, 0, "missing integer field 'degree'");

  ClassDocument d;
  d.g = root["g"].get<int>();
  d.degree = root["degree"].get<int>();
  if (d.g < 1 || d.g > 4)
    parse_fail(text, locate(text, "\"g\""), "g must be between 1 and 4");
  if (d.degree < 0 || d.degree > 2 * d.g)
    parse_fail(text, locate(text, "\"degree\""), "degree must be between 0 and 2g");

  if (root.contains("coeffs")) {
    if (!root["coeffs"].is_object())
      parse_fail(text, locate(text, "\"coeffs\""), "'coeffs' must be an object");
    for (const auto& [key, value] : root["coeffs"].items()) {
      Monomial m = parse_monomial_key(text, key, d.degree);
      Rat r;
      if (value.is_string()) {
        try {
          r = rat_parse(value.get<std::string>());
        } catch (const Error&) {
          parse_fail(text, locate(text, "\"" + key + "\""),
                     "bad rational value for key '" + key + "'");
        }
      } else if (value.is_number_integer()) {
        r = rat(value.get<long>());
      } else {
        parse_fail(text, locate(text, "\"" + key + "\""),
                   "coefficient for '" + key + "' must be a rational string");
      }
      for (const auto& [prev, pc] : d.coeffs)
        if (prev == m)
          parse_fail(text, locate(text, "\"" + key + "\""),
                     "duplicate monomial '" + key + "'");
      if (r != 0) d.coeffs.emplace_back(m, r);
    }
  }
  // Canonical listing order, independent of the input key order.
  std::vector<std::pair<Monomial, Rat>> ordered;
  for (const Monomial& m : canring::monomials_of_degree(d.degree))
    for (auto& [mono, c] : d.coeffs)
      if (mono == m) ordered.emplace_back(mono, c);
  d.coeffs = std::move(ordered);
  return d;
}

std::string serialize(const ClassDocument& d) {
  ordered_json coeffs = ordered_json::object();
  // Canonical listing order.
  for (const Monomial& m : canring::monomials_of_degree(d.degree)) {
    for (const auto& [mono, c] : d.coeffs)
      if (mono == m && c != 0) coeffs[m.str()] = rat_str(c);
  }
  ordered_json root{{"g", d.g}, {"degree", d.degree}, {"coeffs", coeffs}};
  return root.dump();
}

canring::CanonicalClass to_class(const ClassDocument& d) {
  canring::CanonicalClass out(d.g, d.degree);
  for (const auto& [m, c] : d.coeffs)
    out = out + canring::CanonicalClass::monomial(d.g, m, c);
  return out;
}

ClassDocument from_class(const canring::CanonicalClass& x) {
  if (x.beyond_top_degree())
    fail(ErrorCode::Degree, "beyond-top classes have no document form");
  ClassDocument d;
  d.g = x.g();
  d.degree = x.degree();
  const canring::Basis& basis = canring::Basis::get(x.g(), x.degree());
  for (int e = 0; e < basis.dim(); ++e) {
    Rat c = x.coeffs()[e] * basis.scale(e);
    if (c != 0) d.coeffs.emplace_back(basis.monomials()[e], c);
  }
  return d;
}

}  // namespace abelcone::doc
