#include <string>

#include "abelcone.h"
#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  abel_string_free(s);
  return out;
}

abel_class* parse(const std::string& text) {
  abel_class* cls = nullptr;
  REQUIRE(abel_class_parse(text.c_str(), &cls) == ABEL_OK);
  return cls;
}

}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::string(abel_version()).find("abelcone") == 0);
  abel_class* cls = nullptr;
  CHECK(abel_class_parse("{not json", &cls) == ABEL_E_PARSE);
  CHECK(std::string(abel_last_error()).find("line") != std::string::npos);
}

TEST_CASE("class round trip") {
  abel_class* x = parse(R"({"g":2,"degree":2,"coeffs":{"t1*t2":"4","l^2":"1"}})");
  CHECK(abel_class_g(x) == 2);
  CHECK(abel_class_degree(x) == 2);
  char* out = nullptr;
  REQUIRE(abel_class_to_json(x, &out) == ABEL_OK);
  std::string text = take(out);
  abel_class* y = parse(text);
  char* out2 = nullptr;
  REQUIRE(abel_class_to_json(y, &out2) == ABEL_OK);
  CHECK(take(out2) == text);
  abel_class_free(x);
  abel_class_free(y);
}

TEST_CASE("products through the api") {
  abel_class* x = parse(R"({"g":2,"degree":2,"coeffs":{"t1*t2":"4","l^2":"1"}})");
  abel_class* y = parse(R"({"g":2,"degree":2,"coeffs":{"t1^2":"2","t2^2":"2","l^2":"-1"}})");
  abel_class* prod = nullptr;
  char* scalar = nullptr;
  int degree = 0;
  REQUIRE(abel_product(x, y, &prod, &scalar, &degree) == ABEL_OK);
  CHECK(degree == 4);
  CHECK(prod == nullptr);
  CHECK(take(scalar) == "-8");
  abel_class_free(x);
  abel_class_free(y);

  // g=1: theta1 * theta1 lands in the top degree with value 0.
  abel_class* t1 = parse(R"({"g":1,"degree":1,"coeffs":{"t1":"1"}})");
  REQUIRE(abel_product(t1, t1, &prod, &scalar, &degree) == ABEL_OK);
  CHECK(degree == 2);
  CHECK(take(scalar) == "0");

  // Beyond the top degree.
  abel_class* d2 = parse(R"({"g":1,"degree":2,"coeffs":{"t1*t2":"1"}})");
  REQUIRE(abel_product(d2, d2, &prod, &scalar, &degree) == ABEL_OK);
  CHECK(degree == 4);
  CHECK(take(scalar) == "0");
  abel_class_free(t1);
  abel_class_free(d2);

  // Lower-degree products come back as classes.
  abel_class* a = parse(R"({"g":2,"degree":1,"coeffs":{"t1":"1"}})");
  abel_class* b = parse(R"({"g":2,"degree":1,"coeffs":{"t2":"1"}})");
  REQUIRE(abel_product(a, b, &prod, &scalar, &degree) == ABEL_OK);
  CHECK(scalar == nullptr);
  REQUIRE(prod != nullptr);
  char* doc = nullptr;
  REQUIRE(abel_class_to_json(prod, &doc) == ABEL_OK);
  CHECK(take(doc).find("t1*t2") != std::string::npos);
  abel_class_free(prod);
  abel_class_free(a);
  abel_class_free(b);
}

TEST_CASE("membership queries and exit statuses") {
  abel_query_opts opts;
  abel_query_opts_default(&opts);
  opts.seed = 7;

  abel_class* mu32 = parse(R"({"g":2,"degree":2,"coeffs":{"t1*t2":"4","l^2":"3/2"}})");
  abel_verdict* v = nullptr;
  REQUIRE(abel_member(mu32, "nef", 0, &opts, &v) == ABEL_OK);
  CHECK(abel_verdict_status(v) == ABEL_MEMBER);
  abel_verdict_free(v);

  REQUIRE(abel_member(mu32, "semi", 0, &opts, &v) == ABEL_OK);
  CHECK(abel_verdict_status(v) == ABEL_NONMEMBER);
  char* vj = nullptr;
  REQUIRE(abel_verdict_json(v, &vj) == ABEL_OK);
  CHECK(take(vj).find("negative-vector") != std::string::npos);
  abel_verdict_free(v);

  // Weak query twice with the same seed: byte-identical JSON.
  abel_class* mu11 = parse(R"({"g":2,"degree":2,"coeffs":{"t1*t2":"4","l^2":"11/10"}})");
  std::string first, second;
  for (std::string* slot : {&first, &second}) {
    REQUIRE(abel_member(mu11, "weak", 0, &opts, &v) == ABEL_OK);
    CHECK(abel_verdict_status(v) == ABEL_NONMEMBER);
    char* j = nullptr;
    REQUIRE(abel_verdict_json(v, &j) == ABEL_OK);
    *slot = take(j);
    abel_verdict_free(v);
  }
  CHECK(first == second);

  // Wrong degree for the chosen cone.
  REQUIRE(abel_member(mu32, "psef1", 0, &opts, &v) == ABEL_E_DEGREE);
  CHECK(abel_member(mu32, "no-such-cone", 0, &opts, &v) == ABEL_E_ARGUMENT);

  // sym2 with a custom grid.
  abel_class* t1t2 = parse(R"({"g":2,"degree":2,"coeffs":{"t1*t2":"1"}})");
  opts.grid = "-1,0,1";
  REQUIRE(abel_member(t1t2, "sym2", 0, &opts, &v) == ABEL_OK);
  CHECK(abel_verdict_status(v) == ABEL_MEMBER);
  abel_verdict_free(v);

  abel_class_free(mu32);
  abel_class_free(mu11);
  abel_class_free(t1t2);
}

TEST_CASE("verify filter runs a single item") {
  char* report = nullptr;
  int all_pass = 0;
  REQUIRE(abel_verify(1, 2, "product-table", 7, 0, &report, &all_pass) == ABEL_OK);
  std::string text = take(report);
  CHECK(all_pass == 1);
  CHECK(text.find("product-table") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("fourier check and cm witness through the api") {
  char* report = nullptr;
  int all_pass = 0;
  REQUIRE(abel_fourier_check(2, 3, 11, &report, &all_pass) == ABEL_OK);
  CHECK(all_pass == 1);
  take(report);

  char* cert = nullptr;
  REQUIRE(abel_cm_witness(4, 2, &cert) == ABEL_OK);
  std::string text = take(cert);
  CHECK(text.find("\"pairing\": \"-4\"") != std::string::npos);
  CHECK(abel_cm_witness(4, 3, &cert) == ABEL_E_ARGUMENT);
}
