#include "doctest.h"
#include "exterior.hpp"
#include "fourier.hpp"
#include "rng.hpp"

using namespace abelcone;
using fourier::CohClass;

namespace {

CohClass random_class(Rng& rng, int n, int degree) {
  CohClass out(n);
  for (auto mask : exterior::subsets_lex(2 * n, degree))
    out = out + CohClass::monomial(n, mask, rng.rational(3, 2));
  return out;
}

CohClass random_alpha(Rng& rng, int n) { return random_class(rng, n, 2); }

}  // namespace

TEST_CASE("poincare duality on monomials") {
  int n = 2;
  CHECK(fourier::poincare_dual(CohClass::point(n)) == CohClass::unit(n));
  CHECK(fourier::poincare_dual(CohClass::unit(n)) == CohClass::point(n));
  // e1∧e2 -> +e3∧e4 (no inversions in the merge).
  CohClass e12 = CohClass::monomial(n, 0b0011u);
  CHECK(fourier::poincare_dual(e12) == CohClass::monomial(n, 0b1100u));
}

TEST_CASE("poincare duality inverts with sign bookkeeping") {
  Rng rng(55);
  for (int n = 1; n <= 3; ++n)
    for (int degree = 0; degree <= 2 * n; ++degree)
      for (int trial = 0; trial < 3; ++trial) {
        CohClass x = random_class(rng, n, degree);
        CHECK(fourier::poincare_dual_inv(fourier::poincare_dual(x)) == x);
        CHECK(fourier::fourier_d_inv(fourier::fourier_d(x)) == x);
        // PD ∘ PD = (-1)^{l(2n-l)} on degree l.
        CohClass twice = fourier::poincare_dual(fourier::poincare_dual(x));
        int sign = (degree * (2 * n - degree)) % 2 == 0 ? 1 : -1;
        CHECK(twice == x.scaled(rat(sign)));
      }
}

TEST_CASE("fourier map is a degree-reversing bijection") {
  for (int n = 1; n <= 3; ++n)
    for (int degree = 0; degree <= 2 * n; ++degree) {
      // On monomials d is a signed bijection onto the complementary degree.
      for (auto mask : exterior::subsets_lex(2 * n, degree)) {
        CohClass image = fourier::fourier_d(CohClass::monomial(n, mask));
        REQUIRE(image.terms().size() == 1);
        CHECK(image.is_homogeneous(2 * n - degree));
        CHECK(rat_abs(image.terms().begin()->second) == Rat(1));
      }
    }
}

TEST_CASE("pontryagin unit and degree bookkeeping") {
  Rng rng(7);
  for (int n = 1; n <= 3; ++n) {
    CohClass x = random_alpha(rng, n);
    CHECK(fourier::pontryagin(x, CohClass::point(n)) == x);
    // Degree underflow collapses to zero.
    if (n >= 2) {
      CohClass low = CohClass::unit(n);
      CHECK(fourier::pontryagin(low, low).is_zero());
    }
  }
}

TEST_CASE("d exchanges the two products") {
  Rng rng(13);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      CohClass x = random_class(rng, n, 2 * n - 2);
      CohClass y = random_class(rng, n, 2 * n - 1);
      CohClass lhs = fourier::fourier_d(fourier::pontryagin(x, y));
      CohClass rhs = fourier::fourier_d(x).wedge(fourier::fourier_d(y));
      CHECK(lhs == rhs);
      // Structural form on decomposables: d^{-1}(u ∧ v) = d^{-1}u * d^{-1}v.
      CohClass u = random_class(rng, n, 1);
      CohClass v = random_class(rng, n, 1);
      CHECK(fourier::fourier_d_inv(u.wedge(v)) ==
            fourier::pontryagin(fourier::fourier_d_inv(u), fourier::fourier_d_inv(v)));
    }
}

TEST_CASE("pontryagin is commutative and associative") {
  Rng rng(19);
  int n = 3;
  for (int trial = 0; trial < 8; ++trial) {
    CohClass x = random_class(rng, n, 4);
    CohClass y = random_class(rng, n, 5);
    CohClass z = random_class(rng, n, 4);
    CHECK(fourier::pontryagin(x, y) == fourier::pontryagin(y, x));
    CHECK(fourier::pontryagin(fourier::pontryagin(x, y), z) ==
          fourier::pontryagin(x, fourier::pontryagin(y, z)));
  }
}

TEST_CASE("named product-formula instances") {
  // n=2, k=1: the one-fold power is the identity.
  CohClass a(2);
  a = a + CohClass::monomial(2, 0b0101u);  // e1∧e3
  a = a + CohClass::monomial(2, 0b1010u);  // e2∧e4
  CHECK(fourier::check_prodform(2, 1, a));

  // n=2, k=0 for alpha = e1∧e2 + e3∧e4: alpha^{*(2)} = 2 * unit.
  CohClass b(2);
  b = b + CohClass::monomial(2, 0b0011u) + CohClass::monomial(2, 0b1100u);
  CHECK(fourier::pontryagin(b, b) == CohClass::unit(2).scaled(Rat(2)));
  CHECK(fourier::check_prodform(2, 0, b));

  // k = n degenerates to the unit convention.
  Rng rng(23);
  CHECK(fourier::check_prodform(3, 3, random_alpha(rng, 3)));
}

TEST_CASE("product formula holds on random classes") {
  Rng rng(29);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      CohClass a = random_alpha(rng, n);
      for (int k = 0; k <= n; ++k) {
        INFO("n=", n, " k=", k, " trial=", trial);
        CHECK(fourier::check_prodform(n, k, a));
      }
    }
  for (int trial = 0; trial < 5; ++trial) {
    CohClass a = random_alpha(rng, 4);
    for (int k = 0; k <= 4; ++k) {
      INFO("n=4 k=", k, " trial=", trial);
      CHECK(fourier::check_prodform(4, k, a));
    }
  }
}
