#pragma once

#include <string>
#include <utility>
#include <vector>

#include "canring.hpp"

namespace abelcone::doc {

// Exchange format for canonical classes: {"g": 2, "degree": 2,
// "coeffs": {"t1*t2": "4", "l^2": "-1/2"}}. Monomial keys follow the grammar
// t1^<i>*t2^<j>*l^<k> with zero-exponent factors omitted and "^1" optional;
// the empty monomial is "1". Rationals are strings (or JSON integers).
struct ClassDocument {
  int g = 1;
  int degree = 0;
  std::vector<std::pair<canring::Monomial, Rat>> coeffs;
};

// Strict parse: malformed JSON, duplicate keys, unknown keys, degree
// mismatches and bad rationals raise a parse error carrying line/column.
ClassDocument parse_class_document(const std::string& text);

// Canonical serialization: monomials in the canonical listing order, rational
// values as strings. parse(serialize(d)) == d for valid documents.
std::string serialize(const ClassDocument& d);

canring::CanonicalClass to_class(const ClassDocument& d);
ClassDocument from_class(const canring::CanonicalClass& x);

}  // namespace abelcone::doc
