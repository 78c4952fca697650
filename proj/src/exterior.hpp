#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gaussian.hpp"

namespace abelcone::exterior {

// Coordinate subset of {1,...,n} as a bitmask; bit j-1 set means dz_j (or
// dzbar_j) is present. Masks are inherently sorted-ascending, which is the
// canonical normal form for monomials.
using Mask = std::uint32_t;

inline int card(Mask m) { return __builtin_popcount(m); }

// Sign of sorting the concatenation (a ascending, then b ascending) into one
// ascending block. Returns 0 when the blocks overlap.
int merge_sign(Mask a, Mask b);

// A monomial dz_I ∧ dzbar_J in normal form: holomorphic block first, both
// blocks ascending.
struct MultiIndex {
  Mask holo = 0;
  Mask anti = 0;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return a.holo != b.holo ? a.holo < b.holo : a.anti < b.anti;
  }
};

// Element of the complexified exterior algebra on C^n with exact Gaussian
// rational coefficients. Immutable value semantics; all operations are pure.
// Mixed total degrees are allowed; queries can filter by bidegree.
class Form {
 public:
  explicit Form(int n) : n_(n) {
    if (n < 1 || n > 16) fail(ErrorCode::Dimension, "ambient dimension out of range");
  }

  static Form zero(int n) { return Form(n); }
  static Form monomial(int n, MultiIndex idx, GaussianRational c);

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, GaussianRational>& terms() const { return terms_; }
  GaussianRational coeff(MultiIndex idx) const;

  // True when every term has bidegree (p,q).
  bool is_homogeneous(int p, int q) const;
  Form component(int p, int q) const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form scaled(const GaussianRational& c) const;
  Form scaled(const Rat& c) const { return scaled(GaussianRational(c)); }

  Form wedge(const Form& o) const;

  // Complex conjugate form.
  Form conjugate() const;

  // Linear substitution dz_j -> sum_k m[j][k] dz_k (and conjugates on dzbar).
  // m is dim x dim.
  Form pullback(const std::vector<std::vector<GaussianRational>>& m) const;

  // Real (k,k)-form test: supported in bidegree (k,k) with
  // coeff(J,I) == (-1)^k * conj(coeff(I,J)).
  bool is_real_kk(int k) const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(MultiIndex idx, const GaussianRational& c);

  int n_;
  std::map<MultiIndex, GaussianRational> terms_;
};

inline Form wedge(const Form& f, const Form& h) { return f.wedge(h); }

Form wedge_pow(const Form& f, int e);

// The orientation form (i dz_1∧dzbar_1)∧...∧(i dz_n∧dzbar_n).
Form omega0(int n);

// For f supported on the top monomial (or zero), the rational c with
// f = c * omega0. Non-top-degree input raises a degree error.
Rat top_scalar(const Form& f);

enum class CanonicalKind { Theta1, Theta2, Lambda };

// The coordinate expressions of the three distinguished (1,1)-classes on the
// self-product: theta1 = i dz_1∧dzbar_1 + ... + i dz_g∧dzbar_g, theta2 the
// same on the second block, lambda the cross terms.
Form canonical_form(int g, CanonicalKind kind);

// k-subsets of {1..n} in tuple-lexicographic order: (1,2) < (1,3) < ... .
std::vector<Mask> subsets_lex(int n, int k);

}  // namespace abelcone::exterior
