#pragma once

#include <cstdint>

#include "canring.hpp"
#include "hermitian.hpp"
#include "simplex.hpp"
#include "verdict.hpp"

namespace abelcone::positivity {

using canring::CanonicalClass;

// Rebuild a class on A x A of dimension g_new; valid when the monomial basis
// of its degree agrees at both dimensions (always true in degree <= 2 for
// g >= 2, where the six canonical coordinates are independent of g).
CanonicalClass transfer(const CanonicalClass& x, int g_new);

// The Hermitian form on wedge^2 C^{2g} attached to a degree-2 class, in the
// lexicographic bivector basis.
herm::HermitianMatrix hermitian_matrix(const CanonicalClass& x, int g);

// Exact PSD decision of the attached Hermitian form. Member carries the
// characteristic-coefficient certificate, NonMember an exact vector with
// negative value.
ConeVerdict is_semipositive(const CanonicalClass& x, int g);

// The closed-form semipositivity inequalities on the six coordinates (g = 2).
InequalityCertificate semi_inequalities(const CanonicalClass& x);
bool all_hold(const InequalityCertificate& c);

// x . theta_{a,1} . theta_{b,1} / 4 as an exact rational (g = 2); equals the
// sextic a3 a^2 b^2 - a5 ab(a+b) + (a2-a6)(a^2+b^2) - (a2-6a6) ab - a4(a+b) + a1.
Rat pair_with_divisors(const CanonicalClass& x, const Rat& a, const Rat& b);

// The same sextic evaluated directly from the coordinates (test oracle).
Rat divisor_pairing_polynomial(const CanonicalClass& x, const Rat& a, const Rat& b);

// The quartic Q(b) = 4(a3 b^2 - a5 b + a2-a6)((a2-a6) b^2 - a4 b + a1)
//                    - (a5 b^2 + (a2-6a6) b + a4)^2, ascending coefficients.
poly::UniPoly nef_quartic(const CanonicalClass& x);

// Exact nef decision at g = 2: the four closed-form inequalities plus
// nonnegativity of Q on the whole line. NonMember carries rational (a, b)
// with pair_with_divisors < 0.
ConeVerdict is_nef_canonical(const CanonicalClass& x);

struct WeakOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-9;  // on the normalized objective
};

// Multi-start descent over covector pairs; exact refutation when a candidate
// rounds to a rational pair with negative value, supported membership when
// every restart stays above -tol. Deterministic for a fixed seed.
ConeVerdict weak_positivity_oracle(const CanonicalClass& x, int g, const WeakOptions& opts);

// Exact objective of the weak oracle at rational covectors: the top scalar of
// x ∧ i l1∧conj(l1) ∧ i l2∧conj(l2) for g = 2, equivalently the attached
// Hermitian form on the decomposable bivector l1∧l2 at any g.
Rat weak_objective_exact(const CanonicalClass& x, int g,
                         const std::vector<GaussianRational>& l1,
                         const std::vector<GaussianRational>& l2);

enum class LpMode { Exact, FloatFirst };

// |p| <= 4, 1 <= q <= 3, reduced and deduplicated.
std::vector<Rat> default_grid();

// Search for x = c0 theta2^2 + c1 theta1^2 + sum c_ab (theta1 + a^2 theta2 + a lambda)
// (theta1 + b^2 theta2 + b lambda) with nonnegative rational weights over
// grid x grid, by exact LP feasibility. Member certificates re-expand exactly;
// an infeasible grid yields Unknown; NonMember only via the PSD refutation.
ConeVerdict decompose_sym2(const CanonicalClass& x, int g, const std::vector<Rat>& grid,
                           LpMode mode = LpMode::Exact);

// Degree-1 cone test: a1 >= 0, a2 >= 0, a1 a2 >= a3^2.
ConeVerdict psef_divisor_test(const CanonicalClass& x);

// Degree-(2g-1) cone test in the basis (mu^{g-1} theta1, mu^{g-1} theta2,
// mu^{g-1} lambda).
ConeVerdict psef_curve_test(const CanonicalClass& x, int g);

// PSD decision at dimension g combined with the grid decomposition on the
// same six coordinates.
ConeVerdict general_g_semi_decomposition(const CanonicalClass& x, int g);

// Independent re-validation of a verdict's certificate (recomputations avoid
// the code paths that produced it where possible).
bool revalidate(const CanonicalClass& x, int g, const ConeVerdict& v);

// The six coordinates a1..a6 of a degree-2 class.
std::vector<Rat> coords6(const CanonicalClass& x);

}  // namespace abelcone::positivity
