#include "classdoc.hpp"
#include "doctest.h"
#include "rng.hpp"

using namespace abelcone;
using doc::ClassDocument;

namespace {

std::string error_message(const std::string& text) {
  try {
    doc::parse_class_document(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a simple document") {
  auto d = doc::parse_class_document(
      R"({"g": 2, "degree": 2, "coeffs": {"t1*t2": "4", "l^2": "-1/2"}})");
  CHECK(d.g == 2);
  CHECK(d.degree == 2);
  REQUIRE(d.coeffs.size() == 2);
  CHECK(d.coeffs[0].first == canring::Monomial{1, 1, 0});
  CHECK(d.coeffs[0].second == Rat(4));
  CHECK(d.coeffs[1].first == canring::Monomial{0, 0, 2});
  CHECK(d.coeffs[1].second == rat(-1, 2));
}

TEST_CASE("grammar variants") {
  auto d = doc::parse_class_document(R"({"g": 2, "degree": 2, "coeffs": {"t1*l": "1"}})");
  CHECK(d.coeffs[0].first == canring::Monomial{1, 0, 1});
  auto d2 = doc::parse_class_document(R"({"g": 2, "degree": 3, "coeffs": {"t1^2*l": "2"}})");
  CHECK(d2.coeffs[0].first == canring::Monomial{2, 0, 1});
  auto d0 = doc::parse_class_document(R"({"g": 1, "degree": 0, "coeffs": {"1": "7"}})");
  CHECK(d0.coeffs[0].first == canring::Monomial{0, 0, 0});
  // Integer coefficient values are accepted.
  auto di = doc::parse_class_document(R"({"g": 2, "degree": 1, "coeffs": {"l": 3}})");
  CHECK(di.coeffs[0].second == Rat(3));
}

TEST_CASE("rejections carry line/column information") {
  CHECK(error_message("{\n  \"g\": 2,,\n}").find("line 2") != std::string::npos);
  CHECK(error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1*x": "1"}})").find("t1*x") !=
        std::string::npos);
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1": "1"}})").empty());  // degree
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1*t1": "1"}})").empty());
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1*t2": "1", "t1*t2": "2"}})")
             .empty());
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t2*t1": "1"}})")
             .empty());  // factors out of order
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1*t2": "1.5"}})").empty());
  CHECK(!error_message(R"({"g": 2, "degree": 2, "coeffs": {"t1*t2": 1.5}})").empty());
  CHECK(!error_message(R"({"g": 0, "degree": 0})").empty());
  CHECK(!error_message(R"({"g": 2, "degree": 5})").empty());
  CHECK(!error_message(R"({"g": 2, "degree": 2, "extra": 1})").empty());
  CHECK(!error_message(R"([1,2])").empty());
}

TEST_CASE("round trip document -> class -> document") {
  Rng rng(61);
  for (int g = 1; g <= 3; ++g)
    for (int degree = 0; degree <= 2 * g; ++degree)
      for (int trial = 0; trial < 4; ++trial) {
        const canring::Basis& basis = canring::Basis::get(g, degree);
        std::vector<Rat> coeffs(basis.dim());
        for (auto& c : coeffs) c = rng.rational(5, 3);
        canring::CanonicalClass x(g, degree, coeffs);
        ClassDocument d = doc::from_class(x);
        std::string text = doc::serialize(d);
        ClassDocument d2 = doc::parse_class_document(text);
        CHECK(doc::serialize(d2) == text);  // parse -> serialize is stable
        CHECK(doc::to_class(d2) == x);
      }
}

TEST_CASE("documents with dependent monomials reduce through the ring") {
  // theta1^3 = 0 at g = 2: a degree-3 document may mention it; the class is 0.
  auto d = doc::parse_class_document(R"({"g": 2, "degree": 3, "coeffs": {"t1^3": "5"}})");
  CHECK(doc::to_class(d).is_zero());
}
