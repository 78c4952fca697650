#pragma once

#include <optional>
#include <vector>

#include "exterior.hpp"

namespace abelcone::herm {

using exterior::Form;

// Hermitian matrix over Q(i): entries[j][i] == conj(entries[i][j]).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::vector<std::vector<GaussianRational>> entries);

  int dim() const { return static_cast<int>(a_.size()); }
  const GaussianRational& at(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<GaussianRational>>& entries() const { return a_; }

  // v* H v; the result is always real for Hermitian H.
  Rat quad_form(const std::vector<GaussianRational>& v) const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  std::vector<std::vector<GaussianRational>> a_;
};

// The Hermitian form on wedge^k C^n attached to a real (k,k)-form, in the
// tuple-lexicographic k-subset basis. With monomials normalized as
// dz_I ∧ dzbar_J this is i^{-k^2} times the coefficient matrix.
HermitianMatrix hermitian_of_form(const Form& f, int k);

// Coefficients of det(tI - H), ascending degree, exact. Faddeev-LeVerrier.
std::vector<Rat> char_poly(const HermitianMatrix& h);

// Independent route for certificate revalidation (Berkowitz, division-free).
std::vector<Rat> char_poly_berkowitz(const HermitianMatrix& h);

struct PsdDecision {
  bool psd = false;
  // e_m with det(tI-H) = sum_m (-1)^m e_m t^{n-m}; all nonnegative iff PSD.
  std::vector<Rat> sym_coeffs;
  // For non-PSD matrices: exact v with v* H v < 0.
  std::optional<std::vector<GaussianRational>> witness;
  Rat witness_value;
};

PsdDecision decide_psd(const HermitianMatrix& h);

}  // namespace abelcone::herm
