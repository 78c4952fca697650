// Command-line front end for the abelcone shared library. All computation is
// behind the C API in abelcone.h; this translation unit only handles argument
// parsing, file I/O and presentation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abelcone.h"
#include "json.hpp"

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(kExitError);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* msg = abel_last_error();
  if (msg != nullptr && msg[0] != '\0') std::cerr << ": " << msg;
  std::cerr << "\n";
  std::exit(kExitError);
}

abel_class* parse_class_or_die(const std::string& path) {
  std::string text = read_input(path);
  abel_class* cls = nullptr;
  if (abel_class_parse(text.c_str(), &cls) != ABEL_OK) die("parsing '" + path + "'");
  return cls;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  abel_string_free(s);
  return out;
}

double rational_to_double(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return std::strtod(s.c_str(), nullptr);
  return std::strtod(s.substr(0, slash).c_str(), nullptr) /
         std::strtod(s.substr(slash + 1).c_str(), nullptr);
}

uint64_t env_seed() {
  const char* s = std::getenv("ABELCONE_SEED");
  if (s == nullptr || s[0] == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

int run_member(const std::string& cone, const std::string& path, int g,
               const abel_query_opts& opts, bool as_json, bool as_float) {
  abel_class* cls = parse_class_or_die(path);
  abel_verdict* verdict = nullptr;
  if (abel_member(cls, cone.c_str(), g, &opts, &verdict) != ABEL_OK) {
    abel_class_free(cls);
    die("membership query");
  }
  char* vj = nullptr;
  if (abel_verdict_json(verdict, &vj) != ABEL_OK) die("serializing verdict");
  std::string verdict_json = take_string(vj);
  int status = abel_verdict_status(verdict);
  abel_verdict_free(verdict);
  abel_class_free(cls);

  if (as_json) {
    std::cout << verdict_json << "\n";
  } else {
    auto parsed = nlohmann::json::parse(verdict_json);
    std::cout << parsed["status"].get<std::string>() << " (" << cone
              << ", rule: " << parsed["rule"].get<std::string>() << ")\n";
    const auto& cert = parsed["certificate"];
    if (cert.contains("value")) {
      std::string value = cert["value"].get<std::string>();
      std::cout << "  witness value: " << value;
      if (as_float) std::cout << " ~ " << rational_to_double(value);
      std::cout << "\n";
    }
    if (cert.contains("terms")) std::cout << "  decomposition terms: " << cert["terms"].size() << "\n";
    if (cert.contains("min_objective"))
      std::cout << "  min objective: " << cert["min_objective"].get<std::string>() << "\n";
  }
  if (status == ABEL_MEMBER) return kExitMember;
  if (status == ABEL_NONMEMBER) return kExitNonMember;
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positivity-cone computations on the self-product of a "
               "principally polarized abelian variety"};
  app.set_version_flag("--version", abel_version());
  app.require_subcommand(1);

  uint64_t seed = env_seed();
  int restarts = 64;
  double tol = 1e-9;
  std::string grid;
  bool as_json = false;
  bool as_float = false;
  bool lp_float = false;

  // product
  std::string file_x, file_y;
  auto* product = app.add_subcommand("product", "exact ring product of two classes");
  product->add_option("x", file_x, "class document (path or -)")->required();
  product->add_option("y", file_y, "class document (path or -)")->required();
  product->add_flag("--json", as_json, "JSON output");
  product->add_flag("--float", as_float, "also print a decimal rendering");

  // member
  std::string cone, member_file;
  int member_g = 0;
  auto* member = app.add_subcommand("member", "cone membership with certificate");
  member->add_option("cone", cone, "semi|nef|weak|psef1|psef-curve|sym2")->required();
  member->add_option("x", member_file, "class document (path or -)")->required();
  member->add_option("--g", member_g, "ambient dimension override (semi/weak/sym2)");
  member->add_option("--seed", seed, "descent seed");
  member->add_option("--restarts", restarts, "weak-oracle restarts");
  member->add_option("--tol", tol, "weak-oracle tolerance");
  member->add_option("--grid", grid, "comma-separated rational grid for sym2");
  member->add_flag("--float", lp_float, "probe the LP support in doubles first");
  member->add_flag("--json", as_json, "JSON output");

  // decompose (alias for member sym2)
  std::string dec_file;
  int dec_g = 0;
  auto* decompose = app.add_subcommand("decompose", "decomposition into squares of divisor classes");
  decompose->add_option("x", dec_file, "class document (path or -)")->required();
  decompose->add_option("--g", dec_g, "ambient dimension override");
  decompose->add_option("--grid", grid, "comma-separated rational grid");
  decompose->add_flag("--float", lp_float, "probe the LP support in doubles first");
  decompose->add_flag("--json", as_json, "JSON output");

  // verify-paper
  int g_min = 1, g_max = 4;
  std::string only;
  auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
  verify->add_option("--g-min", g_min, "smallest dimension for the graded checks");
  verify->add_option("--g-max", g_max, "largest dimension for the graded checks");
  verify->add_option("--g", g_max, "largest dimension (shorthand for --g-max)");
  verify->add_option("--only", only, "substring filter on item ids");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_flag("--json", as_json, "JSON report");

  // fourier-check
  int fn = 2, fsamples = 20;
  auto* fourier = app.add_subcommand("fourier-check", "duality product-formula checks");
  fourier->add_option("--n", fn, "variety dimension (1..4)");
  fourier->add_option("--samples", fsamples, "random classes per check");
  fourier->add_option("--seed", seed, "sampling seed");

  // cm-witness
  int wn = 4, wk = 2;
  auto* cmw = app.add_subcommand("cm-witness", "nef-not-pseudoeffective separation certificate");
  cmw->add_option("--n", wn, "number of curve factors");
  cmw->add_option("--k", wk, "codimension (2 <= k <= n-2)");

  CLI11_PARSE(app, argc, argv);

  if (product->parsed()) {
    abel_class* x = parse_class_or_die(file_x);
    abel_class* y = parse_class_or_die(file_y);
    int top_degree = 2 * abel_class_g(x);
    abel_class* prod = nullptr;
    char* scalar = nullptr;
    int degree = 0;
    if (abel_product(x, y, &prod, &scalar, &degree) != ABEL_OK) die("product");
    abel_class_free(x);
    abel_class_free(y);
    if (scalar != nullptr) {
      std::string value = take_string(scalar);
      if (as_json) {
        nlohmann::json out{{"degree", degree}, {"scalar", value}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << value;
        if (as_float) std::cout << " ~ " << rational_to_double(value);
        if (degree > top_degree) std::cout << "  (degree " << degree << " exceeds 2g; product is zero)";
        std::cout << "\n";
      }
    } else {
      char* doc = nullptr;
      if (abel_class_to_json(prod, &doc) != ABEL_OK) die("serializing product");
      std::cout << take_string(doc) << "\n";
      abel_class_free(prod);
    }
    return 0;
  }

  abel_query_opts opts;
  abel_query_opts_default(&opts);
  opts.seed = seed;
  opts.restarts = restarts;
  opts.tol = tol;
  opts.grid = grid.empty() ? nullptr : grid.c_str();
  opts.lp_float_first = lp_float ? 1 : 0;

  if (member->parsed()) return run_member(cone, member_file, member_g, opts, as_json, as_float);
  if (decompose->parsed()) return run_member("sym2", dec_file, dec_g, opts, as_json, as_float);

  if (verify->parsed()) {
    char* report = nullptr;
    int all_pass = 0;
    if (abel_verify(g_min, g_max, only.empty() ? nullptr : only.c_str(), seed,
                    as_json ? 1 : 0, &report, &all_pass) != ABEL_OK)
      die("verify-paper");
    std::cout << take_string(report);
    if (as_json) std::cout << "\n";
    return all_pass ? 0 : 1;
  }

  if (fourier->parsed()) {
    char* report = nullptr;
    int all_pass = 0;
    if (abel_fourier_check(fn, fsamples, seed, &report, &all_pass) != ABEL_OK)
      die("fourier-check");
    std::cout << take_string(report);
    return all_pass ? 0 : 1;
  }

  if (cmw->parsed()) {
    char* cert = nullptr;
    if (abel_cm_witness(wn, wk, &cert) != ABEL_OK) die("cm-witness");
    std::cout << take_string(cert) << "\n";
    return 0;
  }

  return kExitError;
}
