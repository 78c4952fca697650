#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace abelcone {

Rat rat_parse(const std::string& text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty rational literal");
  std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);

  auto is_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_integer(num, true) || !is_integer(den, false))
    fail(ErrorCode::Parse, "bad rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat rationalize(double x, unsigned long max_den) {
  if (!std::isfinite(x)) fail(ErrorCode::Argument, "cannot rationalize non-finite value");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued-fraction convergents p/q until q would exceed max_den.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a(static_cast<unsigned long>(fl));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > mpz_class(max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) { p1 = 0; q1 = 1; }
  Rat r(p1, q1);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace abelcone
