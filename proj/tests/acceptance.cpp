// Acceptance suite: one line per criterion, exact values and stated
// tolerances pinned in code. Returns nonzero when any criterion fails.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* item_id;  // id in the verification engine, or nullptr
  const char* description;
};

constexpr Criterion kCriteria[] = {
    {1, "product-table", "degree-4 product table (4, -4, 24, rest 0), exact"},
    {2, "lambda-powers", "lambda^(2g) = (-1)^g (2g)! for g = 1..4, exact"},
    {3, "ring-relations", "defining relations, top identities and dimensions, exact"},
    {4, "hermitian-matrices", "the six Hermitian matrices, entry for entry"},
    {5, "nef-product", "nef x nef with product -8, both factors accepted"},
    {6, "nef-boundary", "mu_t nef exactly for -1 <= t <= 3/2, rational refuters outside"},
    {7, "semi-weak-family", "mu_t semipositive only at 0; weak refuted at |t| = 11/10, "
                            "supported at |t| <= 1 (>= 64 restarts, tol 1e-9)"},
    {8, "interior-decomposition", "200 semipositive samples; >= 95% of interior ones decompose "
                                  "on the denominator-3 grid; certificates re-expand"},
    {9, "pontryagin-product-formula", "product formula for 0 <= k <= n <= 3 (20 samples) and "
                                      "n = 4 (5 samples), exact"},
    {10, "psd-inequalities-equivalence", "PSD <=> closed-form inequalities on 1000 samples"},
    {11, "chain-stability", "cone chain and GL2 stability sampling, zero violations"},
    {12, "quartic-sampler-agreement", "nonnegativity oracle vs 10^4-point sampler on 500 quartics"},
    {13, "cm-separation", "archived (eta, phi) pair: eta PSD rank one, exact negative pairing"},
};

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(ABELCONE_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  abelcone::verify::Options opts;
  opts.g_min = 1;
  opts.g_max = 4;
  opts.seed = 7;
  abelcone::verify::Report report = abelcone::verify::run(opts);

  int failures = 0;
  auto line = [&failures](int number, bool pass, const std::string& description,
                          const std::string& detail) {
    std::printf("%s  [%2d] %s%s%s\n", pass ? "PASS" : "FAIL", number, description.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
  };

  for (const Criterion& c : kCriteria) {
    bool found = false;
    for (const auto& item : report.items) {
      if (item.id != c.item_id) continue;
      bool pass = item.pass;
      std::string detail = item.detail;
      if (c.number == 13) {
        // The certificate shipped with the repository must be the live one.
        std::ifstream shipped(ABELCONE_WITNESS_PATH);
        std::ostringstream text;
        text << shipped.rdbuf();
        std::string recomputed = run_cli("cm-witness --n 4 --k 2");
        if (!shipped || text.str() != recomputed) {
          pass = false;
          detail += "; shipped certificate differs from recomputation";
        } else {
          detail += "; shipped certificate matches recomputation";
        }
      }
      line(c.number, pass, c.description, detail);
      found = true;
      break;
    }
    if (!found) line(c.number, false, c.description, "item missing from the report");
  }

  // Criterion 14: byte-identical repeated runs of the reproduction command.
  {
    std::string first = run_cli("verify-paper --seed 7 --json");
    std::string second = run_cli("verify-paper --seed 7 --json");
    bool pass = !first.empty() && first == second &&
                first.find("\"all_pass\": true") != std::string::npos;
    line(14, pass, "two runs of verify-paper --seed 7 --json are byte-identical",
         pass ? "" : "outputs differ or suite failed");
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
