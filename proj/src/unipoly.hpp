#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace abelcone::poly {

// Univariate polynomial with exact rational coefficients, stored ascending.
// The zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const Rat& c) { return UniPoly({c}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const;
  Rat coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }

  Rat eval(const Rat& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rat& s) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  // Field division: q, r with *this == q*o + r, deg r < deg o.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& o) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

// Yun's algorithm: factors[e-1] holds the (monic, squarefree) product of the
// irreducible factors of multiplicity exactly e, so
// p = lead * prod factors[e-1]^e.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

UniPoly squarefree_part(const UniPoly& p);

// All real roots lie in (-bound, bound).
Rat cauchy_root_bound(const UniPoly& p);

// Number of distinct real roots (whole line, or half-open interval (a, b]).
int count_real_roots(const UniPoly& p);
int count_real_roots(const UniPoly& p, const Rat& a, const Rat& b);

// Disjoint isolating intervals (a, b] for the real roots of a squarefree
// polynomial, ordered left to right.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& squarefree);

// Independent existence check used to revalidate Sturm verdicts: counts the
// real roots of a squarefree polynomial by Descartes/bisection.
int descartes_count_roots(const UniPoly& squarefree);

// Data needed to recheck a nonnegativity verdict.
struct SturmTranscript {
  std::vector<Rat> square_part;  // S with p = lead_sign * S^2 * O * |content|
  std::vector<Rat> odd_part;     // O: product of odd-multiplicity factors (monic)
  Rat content;                   // p == content * S^2 * O exactly
  int odd_part_real_roots = 0;
  bool nonneg = false;
};

struct NonnegResult {
  bool nonneg = false;
  std::optional<Rat> witness;  // exact point with p(witness) < 0 when !nonneg
  SturmTranscript transcript;
};

// Exact decision of "p(x) >= 0 for all real x" with a rational counterexample
// on failure.
NonnegResult poly_nonneg(const UniPoly& p);

// Recheck a transcript against the original polynomial: the factorization
// identity must re-expand, and for accepted polynomials the odd part must
// again have no real roots, counted by the Descartes route.
bool revalidate_nonneg(const UniPoly& p, const SturmTranscript& t);

}  // namespace abelcone::poly
