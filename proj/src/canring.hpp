#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exterior.hpp"

namespace abelcone::canring {

using exterior::Form;

// theta1^i * theta2^j * lambda^k.
struct Monomial {
  int i = 0, j = 0, k = 0;
  int degree() const { return i + j + k; }
  std::string str() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical listing order: by lambda-exponent ascending, then theta1-exponent
// descending. Degree 2 reproduces the order theta1^2, theta1*theta2, theta2^2,
// theta1*lambda, theta2*lambda, lambda^2 that fixes coefficient slots a1..a6.
std::vector<Monomial> monomials_of_degree(int r);

// Fixed basis of the degree-r piece of the canonical ring at a given g: the
// first monomials (in the canonical order) whose expansions in the exterior
// model are linearly independent. Cached per (g, r). For r = 2g the single
// basis element is rescaled so its top_scalar is 1.
class Basis {
 public:
  static const Basis& get(int g, int r);

  int g() const { return g_; }
  int degree() const { return r_; }
  int dim() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Rat& scale(int e) const { return scales_[e]; }
  const Form& form(int e) const { return forms_[e]; }

  // Coordinates of f in this basis; empty when f is outside the span or has
  // non-rational coordinates. Exact.
  std::optional<std::vector<Rat>> extract(const Form& f) const;

 private:
  Basis(int g, int r);

  int g_, r_;
  std::vector<Monomial> monomials_;
  std::vector<Rat> scales_;
  std::vector<Form> forms_;
  // Solving data: pivot multi-indices and the inverse of the pivot submatrix.
  std::vector<exterior::MultiIndex> pivots_;
  std::vector<std::vector<GaussianRational>> pivot_inverse_;
};

// Element of the canonical ring, stored as exact coordinates over
// Basis::get(g, degree). A product that would exceed the top degree is
// represented by the beyond-top sentinel (zero with degree > 2g).
class CanonicalClass {
 public:
  CanonicalClass(int g, int degree);
  CanonicalClass(int g, int degree, std::vector<Rat> coeffs);

  static CanonicalClass zero(int g, int degree) { return CanonicalClass(g, degree); }
  static CanonicalClass beyond_top(int g, int degree);
  static CanonicalClass from_form(int g, int degree, const Form& f);
  static CanonicalClass monomial(int g, const Monomial& m, const Rat& c = Rat(1));

  int g() const { return g_; }
  int degree() const { return degree_; }
  bool beyond_top_degree() const { return degree_ > 2 * g_; }
  bool is_zero() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const Monomial& m) const;

  // Scalar value of a top-degree class (coefficient of the normalized
  // generator, whose top_scalar is 1).
  Rat top_value() const;

  Form to_form() const;

  CanonicalClass operator+(const CanonicalClass& o) const;
  CanonicalClass operator-(const CanonicalClass& o) const;
  CanonicalClass scaled(const Rat& c) const;

  friend bool operator==(const CanonicalClass& a, const CanonicalClass& b);

 private:
  int g_, degree_;
  std::vector<Rat> coeffs_;
};

struct Gl2Matrix {
  Rat a, b, c, d;
  Rat det() const { return a * d - b * c; }
};

// Exact ring product; degrees add. Beyond the top degree the product is zero
// and the result carries the beyond-top sentinel.
CanonicalClass mul(const CanonicalClass& x, const CanonicalClass& y);

// Pullback action of the 2x2 matrix, a ring homomorphism extending the 3x3
// action on degree 1.
CanonicalClass gl2_act(const Gl2Matrix& m, const CanonicalClass& x);

// a^2 theta1 + b^2 theta2 + ab lambda (degree 1).
CanonicalClass theta_ab(int g, const Rat& a, const Rat& b);

CanonicalClass theta1(int g);
CanonicalClass theta2(int g);
CanonicalClass lambda(int g);
// 4 theta1 theta2 + t lambda^2 (degree 2); mu is t = -1.
CanonicalClass mu_t(int g, const Rat& t);

struct RelationReport {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const;
};

// Exact verification of the defining relations at a given g: vanishing of
// theta1^{g+1}, theta2^{g+1}, theta1^g lambda, theta2^g lambda; vanishing of
// (a^2 theta1 + b^2 theta2 + ab lambda)^{g+1} at random rational (a,b); the
// five top-degree identities mu^{g-1} * {theta1^2, theta2^2, theta1 lambda,
// theta2 lambda, lambda^2 + 2 theta1 theta2} = 0; lambda^{2g} = (-1)^g (2g)!;
// and the dimension count of every graded piece.
RelationReport verify_relations(int g);

// Expected dimension of the degree-r piece.
int expected_dim(int g, int r);

// Matrix of the top-degree pairing between degrees r and 2g-r in the chosen
// bases (values of products against the normalized generator).
std::vector<std::vector<Rat>> pairing_matrix(int g, int r);

}  // namespace abelcone::canring
