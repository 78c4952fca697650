#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rational.hpp"

namespace abelcone::fourier {

// Element of the rational exterior algebra on e_1..e_{2n}, modeling the
// cohomology of an n-dimensional abelian variety. Monomials are subsets in
// sorted normal form (bitmasks).
class CohClass {
 public:
  explicit CohClass(int n);

  static CohClass zero(int n) { return CohClass(n); }
  static CohClass unit(int n);                                  // 1 in degree 0
  static CohClass point(int n);                                 // top monomial
  static CohClass monomial(int n, std::uint32_t mask, const Rat& c = Rat(1));

  int n() const { return n_; }                                  // dim of the variety
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, Rat>& terms() const { return terms_; }
  Rat coeff(std::uint32_t mask) const;

  // True when every monomial has exactly d factors.
  bool is_homogeneous(int d) const;
  int degree() const;  // of a nonzero homogeneous class

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass scaled(const Rat& c) const;
  CohClass wedge(const CohClass& o) const;
  CohClass wedge_pow(int e) const;

  friend bool operator==(const CohClass& a, const CohClass& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(std::uint32_t mask, const Rat& c);

  int n_;
  std::map<std::uint32_t, Rat> terms_;
};

// Contraction against the top monomial: e_I -> sign * e_{I^c} where
// e_I ∧ e_{I^c} = sign * e_{1..2n}.
CohClass poincare_dual(const CohClass& x);

// Inverse of poincare_dual.
CohClass poincare_dual_inv(const CohClass& x);

// The degree-reversing linear bijection realized as the composition of
// Poincaré duality with the identity identification of the dual basis,
// extended as an algebra map on monomials.
CohClass fourier_d(const CohClass& x);
CohClass fourier_d_inv(const CohClass& x);

// x * y = d^{-1}(d(x) ∧ d(y)); degree deg x + deg y - 2n.
CohClass pontryagin(const CohClass& x, const CohClass& y);

// m-fold Pontryagin power; the 0-fold power is the Pontryagin unit (point).
CohClass pontryagin_pow(const CohClass& x, int m);

// Exact verification of the product formulas for a degree-2 class at (n, k):
// (a) (alpha^{n-1})^{*(n-k)} == (n-k)! (n-1)!^{n-k} ((alpha^n/n!))^{n-k-1} alpha^k / k!
// (b) the dual statement for beta = alpha^{n-1} with Pontryagin powers of beta.
// When alpha^n = 0 the k = n instance is vacuous (the scalar is inverted).
bool check_prodform(int n, int k, const CohClass& alpha);

}  // namespace abelcone::fourier
