#include "abelcone.h"

#include <cstring>
#include <sstream>
#include <string>

#include "classdoc.hpp"
#include "cm.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "positivity.hpp"
#include "rng.hpp"
#include "verify.hpp"

using abelcone::Error;
using abelcone::ErrorCode;
using abelcone::Rat;

struct abel_class {
  abelcone::canring::CanonicalClass value;
};

struct abel_verdict {
  abelcone::positivity::ConeVerdict value;
  int g = 2;
};

namespace {

thread_local std::string g_last_error;

int code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Dimension: return ABEL_E_DIMENSION;
    case ErrorCode::Degree: return ABEL_E_DEGREE;
    case ErrorCode::Parse: return ABEL_E_PARSE;
    case ErrorCode::Argument: return ABEL_E_ARGUMENT;
    case ErrorCode::Representation: return ABEL_E_REPRESENTATION;
    case ErrorCode::Unsupported: return ABEL_E_UNSUPPORTED;
    default: return ABEL_E_INTERNAL;
  }
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ABEL_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Rat> parse_grid(const char* text) {
  if (text == nullptr) return abelcone::positivity::default_grid();
  std::vector<Rat> grid;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) grid.push_back(abelcone::rat_parse(part));
  }
  if (grid.empty()) abelcone::fail(ErrorCode::Argument, "empty grid");
  return grid;
}

}  // namespace

extern "C" {

const char* abel_version(void) { return "abelcone 1.0.0"; }

const char* abel_last_error(void) { return g_last_error.c_str(); }

void abel_string_free(char* s) { delete[] s; }

int abel_class_parse(const char* json_text, abel_class** out) {
  return guarded([&]() {
    if (json_text == nullptr || out == nullptr)
      abelcone::fail(ErrorCode::Argument, "null argument");
    auto doc = abelcone::doc::parse_class_document(json_text);
    *out = new abel_class{abelcone::doc::to_class(doc)};
    return ABEL_OK;
  });
}

int abel_class_to_json(const abel_class* x, char** out) {
  return guarded([&]() {
    if (x == nullptr || out == nullptr) abelcone::fail(ErrorCode::Argument, "null argument");
    *out = dup_string(abelcone::doc::serialize(abelcone::doc::from_class(x->value)));
    return ABEL_OK;
  });
}

int abel_class_g(const abel_class* x) { return x ? x->value.g() : 0; }

int abel_class_degree(const abel_class* x) { return x ? x->value.degree() : -1; }

void abel_class_free(abel_class* x) { delete x; }

int abel_product(const abel_class* x, const abel_class* y, abel_class** out, char** scalar_out,
                 int* degree_out) {
  return guarded([&]() {
    if (!x || !y) abelcone::fail(ErrorCode::Argument, "null argument");
    auto prod = abelcone::canring::mul(x->value, y->value);
    if (degree_out) *degree_out = prod.degree();
    if (prod.beyond_top_degree()) {
      if (out) *out = nullptr;
      if (scalar_out) *scalar_out = dup_string("0");
      return ABEL_OK;
    }
    if (prod.degree() == 2 * prod.g()) {
      if (out) *out = nullptr;
      if (scalar_out) *scalar_out = dup_string(abelcone::rat_str(prod.top_value()));
      return ABEL_OK;
    }
    if (scalar_out) *scalar_out = nullptr;
    if (out) *out = new abel_class{std::move(prod)};
    return ABEL_OK;
  });
}

void abel_query_opts_default(abel_query_opts* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->restarts = 64;
  opts->tol = 1e-9;
  opts->grid = nullptr;
  opts->lp_float_first = 0;
}

int abel_member(const abel_class* x, const char* cone, int g, const abel_query_opts* opts,
                abel_verdict** out) {
  return guarded([&]() {
    namespace pos = abelcone::positivity;
    if (!x || !cone || !out) abelcone::fail(ErrorCode::Argument, "null argument");
    abel_query_opts defaults;
    abel_query_opts_default(&defaults);
    const abel_query_opts& o = opts ? *opts : defaults;
    int gg = g > 0 ? g : x->value.g();
    std::string which = cone;
    pos::ConeVerdict v;
    if (which == "semi") {
      v = pos::is_semipositive(x->value, gg);
    } else if (which == "nef") {
      v = pos::is_nef_canonical(x->value);
    } else if (which == "weak") {
      pos::WeakOptions w;
      w.restarts = o.restarts;
      w.seed = o.seed;
      w.tol = o.tol;
      v = pos::weak_positivity_oracle(x->value, gg, w);
    } else if (which == "psef1") {
      v = pos::psef_divisor_test(x->value);
    } else if (which == "psef-curve") {
      v = pos::psef_curve_test(x->value, gg);
    } else if (which == "sym2") {
      v = pos::decompose_sym2(x->value, gg, parse_grid(o.grid),
                              o.lp_float_first ? pos::LpMode::FloatFirst : pos::LpMode::Exact);
    } else {
      abelcone::fail(ErrorCode::Argument, "unknown cone '" + which + "'");
    }
    *out = new abel_verdict{std::move(v), gg};
    return ABEL_OK;
  });
}

int abel_verdict_status(const abel_verdict* v) {
  if (!v) return ABEL_UNKNOWN;
  switch (v->value.status) {
    case abelcone::positivity::Status::Member: return ABEL_MEMBER;
    case abelcone::positivity::Status::NonMember: return ABEL_NONMEMBER;
    default: return ABEL_UNKNOWN;
  }
}

int abel_verdict_json(const abel_verdict* v, char** out) {
  return guarded([&]() {
    if (!v || !out) abelcone::fail(ErrorCode::Argument, "null argument");
    *out = dup_string(abelcone::positivity::to_json(v->value).dump());
    return ABEL_OK;
  });
}

void abel_verdict_free(abel_verdict* v) { delete v; }

int abel_verify(int g_min, int g_max, const char* only, uint64_t seed, int as_json, char** report,
                int* all_pass) {
  return guarded([&]() {
    if (!report) abelcone::fail(ErrorCode::Argument, "null report pointer");
    abelcone::verify::Options opts;
    opts.g_min = g_min;
    opts.g_max = g_max;
    opts.only = only ? only : "";
    opts.seed = seed;
    auto rep = abelcone::verify::run(opts);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    *report = dup_string(as_json ? abelcone::verify::report_json(rep).dump(2)
                                 : abelcone::verify::report_text(rep));
    return ABEL_OK;
  });
}

int abel_fourier_check(int n, int samples, uint64_t seed, char** report, int* all_pass) {
  return guarded([&]() {
    if (!report) abelcone::fail(ErrorCode::Argument, "null report pointer");
    if (n < 1 || n > 4) abelcone::fail(ErrorCode::Unsupported, "n must be between 1 and 4");
    if (samples < 1) abelcone::fail(ErrorCode::Argument, "samples must be positive");
    abelcone::Rng rng(seed);
    std::ostringstream out;
    bool ok = true;
    for (int trial = 0; trial < samples; ++trial) {
      abelcone::fourier::CohClass a(n);
      for (auto mask : abelcone::exterior::subsets_lex(2 * n, 2))
        a = a + abelcone::fourier::CohClass::monomial(n, mask, rng.rational(4, 2));
      for (int k = 0; k <= n; ++k) {
        bool pass = abelcone::fourier::check_prodform(n, k, a);
        ok = ok && pass;
        out << (pass ? "PASS" : "FAIL") << "  n=" << n << " k=" << k << " sample=" << trial
            << "\n";
      }
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
    *report = dup_string(out.str());
    return ABEL_OK;
  });
}

int abel_cm_witness(int n, int k, char** certificate_json) {
  return guarded([&]() {
    if (!certificate_json) abelcone::fail(ErrorCode::Argument, "null output pointer");
    auto w = abelcone::cm::semi_not_strong_witness(n, k);
    if (!w) abelcone::fail(ErrorCode::Internal, "witness search exhausted");
    if (!abelcone::cm::revalidate_witness(*w))
      abelcone::fail(ErrorCode::Internal, "witness failed revalidation");
    *certificate_json = dup_string(abelcone::cm::witness_json(*w).dump(2));
    return ABEL_OK;
  });
}

}  // extern "C"
