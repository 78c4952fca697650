#include <thread>

#include "canring.hpp"
#include "doctest.h"
#include "rng.hpp"

using namespace abelcone;
using namespace abelcone::canring;

namespace {

CanonicalClass random_class(Rng& rng, int g, int degree) {
  const Basis& basis = Basis::get(g, degree);
  std::vector<Rat> coeffs(basis.dim());
  for (auto& c : coeffs) c = rng.rational(5, 3);
  return CanonicalClass(g, degree, std::move(coeffs));
}

Gl2Matrix random_invertible(Rng& rng) {
  for (;;) {
    Gl2Matrix m{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
    if (m.det() != 0) return m;
  }
}

}  // namespace

TEST_CASE("degree-2 basis is the six monomials in slot order") {
  const Basis& basis = Basis::get(2, 2);
  REQUIRE(basis.dim() == 6);
  CHECK(basis.monomials()[0] == Monomial{2, 0, 0});
  CHECK(basis.monomials()[1] == Monomial{1, 1, 0});
  CHECK(basis.monomials()[2] == Monomial{0, 2, 0});
  CHECK(basis.monomials()[3] == Monomial{1, 0, 1});
  CHECK(basis.monomials()[4] == Monomial{0, 1, 1});
  CHECK(basis.monomials()[5] == Monomial{0, 0, 2});
}

TEST_CASE("graded dimensions match the structure count") {
  for (int g = 1; g <= 3; ++g)
    for (int r = 0; r <= 2 * g; ++r) CHECK(Basis::get(g, r).dim() == expected_dim(g, r));
}

TEST_CASE("mul reproduces the top products") {
  int g = 2;
  CanonicalClass t1t2 = CanonicalClass::monomial(g, {1, 1, 0});
  CanonicalClass l2 = CanonicalClass::monomial(g, {0, 0, 2});
  CHECK(mul(t1t2, l2).top_value() == Rat(-4));
  CHECK(mul(l2, l2).top_value() == Rat(24));

  // 4*theta1*theta2 + lambda^2 times 2*theta1^2 + 2*theta2^2 - lambda^2.
  CanonicalClass x = mu_t(g, Rat(1));
  CanonicalClass y = CanonicalClass::monomial(g, {2, 0, 0}, Rat(2)) +
                     CanonicalClass::monomial(g, {0, 2, 0}, Rat(2)) +
                     CanonicalClass::monomial(g, {0, 0, 2}, Rat(-1));
  CHECK(mul(x, y).top_value() == Rat(-8));

  // mu * mu: 16*4 - 8*(-4) + 24.
  CanonicalClass mu = mu_t(g, Rat(-1));
  CHECK(mul(mu, mu).top_value() == Rat(120));
}

TEST_CASE("mul beyond the top degree is flagged zero") {
  int g = 1;
  CanonicalClass t1 = theta1(g);
  CanonicalClass sq = mul(t1, t1);
  CHECK(sq.degree() == 2);
  CHECK(sq.is_zero());  // theta1^2 = 0 at g=1
  CanonicalClass over = mul(sq, t1);
  CHECK(over.beyond_top_degree());
}

TEST_CASE("round trip through the exterior model is the identity") {
  Rng rng(11);
  for (int g = 1; g <= 3; ++g)
    for (int r = 0; r <= 2 * g; ++r)
      for (int trial = 0; trial < 3; ++trial) {
        CanonicalClass x = random_class(rng, g, r);
        CHECK(CanonicalClass::from_form(g, r, x.to_form()) == x);
      }
}

TEST_CASE("theta_ab specializations") {
  int g = 2;
  CHECK(theta_ab(g, Rat(1), Rat(0)) == theta1(g));
  CHECK(theta_ab(g, Rat(0), Rat(1)) == theta2(g));
  CHECK(theta_ab(g, Rat(1), Rat(1)) == theta1(g) + theta2(g) + lambda(g));
}

TEST_CASE("gl2 action on generators") {
  int g = 2;
  Gl2Matrix identity{Rat(1), Rat(0), Rat(0), Rat(1)};
  Rng rng(3);
  for (int r = 0; r <= 2 * g; ++r) {
    CanonicalClass x = random_class(rng, g, r);
    CHECK(gl2_act(identity, x) == x);
  }

  // Row [[a,b],[0,0]] sends theta1 to a^2 theta1 + b^2 theta2 + ab lambda.
  Gl2Matrix m{Rat(3), Rat(-2), Rat(0), Rat(0)};
  CHECK(gl2_act(m, theta1(g)) == theta_ab(g, Rat(3), Rat(-2)));

  Gl2Matrix swap{Rat(0), Rat(1), Rat(1), Rat(0)};
  CHECK(gl2_act(swap, lambda(g)) == lambda(g));
  CHECK(gl2_act(swap, theta1(g)) == theta2(g));
}

TEST_CASE("gl2 action is a ring homomorphism") {
  Rng rng(19);
  int g = 2;
  for (int trial = 0; trial < 8; ++trial) {
    Gl2Matrix m{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
    CanonicalClass x = random_class(rng, g, 1);
    CanonicalClass y = random_class(rng, g, 2);
    CHECK(gl2_act(m, mul(x, y)) == mul(gl2_act(m, x), gl2_act(m, y)));
  }
  int g3 = 3;
  for (int trial = 0; trial < 3; ++trial) {
    Gl2Matrix m{rng.rational(2, 2), rng.rational(2, 2), rng.rational(2, 2), rng.rational(2, 2)};
    CanonicalClass x = random_class(rng, g3, 1);
    CanonicalClass y = random_class(rng, g3, 1);
    CHECK(gl2_act(m, mul(x, y)) == mul(gl2_act(m, x), gl2_act(m, y)));
  }
}

TEST_CASE("mu rescales by the squared determinant") {
  Rng rng(23);
  for (int g = 2; g <= 3; ++g) {
    CanonicalClass mu = mu_t(g, Rat(-1));
    for (int trial = 0; trial < 6; ++trial) {
      Gl2Matrix m{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
      Rat d = m.det();
      CHECK(gl2_act(m, mu) == mu.scaled(d * d));
    }
  }
}

TEST_CASE("gl2 action respects composition") {
  Rng rng(29);
  int g = 2;
  for (int trial = 0; trial < 6; ++trial) {
    Gl2Matrix m1 = random_invertible(rng);
    Gl2Matrix m2 = random_invertible(rng);
    // Pullback actions compose contravariantly: acting by M2 then M1 equals
    // acting by the product M2*M1.
    Gl2Matrix prod{m2.a * m1.a + m2.b * m1.c, m2.a * m1.b + m2.b * m1.d,
                   m2.c * m1.a + m2.d * m1.c, m2.c * m1.b + m2.d * m1.d};
    CanonicalClass x = random_class(rng, g, 2);
    CHECK(gl2_act(prod, x) == gl2_act(m1, gl2_act(m2, x)));
  }
}

TEST_CASE("pairing between complementary degrees is nondegenerate") {
  for (int g = 1; g <= 3; ++g) {
    for (int r = 0; r <= 2 * g; ++r) {
      auto m = pairing_matrix(g, r);
      int d = static_cast<int>(m.size());
      REQUIRE(d == static_cast<int>(m[0].size()));
      // Rank by Gaussian elimination.
      int rank = 0;
      for (int col = 0; col < d && rank < d; ++col) {
        int pivot = -1;
        for (int row = rank; row < d; ++row)
          if (m[row][col] != 0) {
            pivot = row;
            break;
          }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int row = 0; row < d; ++row) {
          if (row == rank || m[row][col] == 0) continue;
          Rat f = m[row][col] / m[rank][col];
          for (int t = 0; t < d; ++t) m[row][t] -= f * m[rank][t];
        }
        ++rank;
      }
      CHECK(rank == d);
    }
  }
}

TEST_CASE("verify_relations passes for g = 1..3") {
  for (int g = 1; g <= 3; ++g) {
    RelationReport report = verify_relations(g);
    for (const auto& item : report.items) {
      INFO("g=", g, " item=", item.name);
      CHECK(item.pass);
    }
  }
}

TEST_CASE("verify_relations rejects out-of-range g") {
  CHECK_THROWS_AS(verify_relations(0), Error);
  CHECK_THROWS_AS(verify_relations(5), Error);
}

TEST_CASE("concurrent callers share the cached bases safely") {
  // Pure-value semantics: parallel products must agree with the serial ones.
  Rng rng(99);
  std::vector<std::pair<CanonicalClass, CanonicalClass>> inputs;
  std::vector<Rat> expected;
  for (int i = 0; i < 16; ++i) {
    inputs.emplace_back(random_class(rng, 2, 2), random_class(rng, 2, 2));
    expected.push_back(mul(inputs.back().first, inputs.back().second).top_value());
  }
  std::vector<Rat> got(inputs.size());
  {
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
      workers.emplace_back([&, t]() {
        for (std::size_t i = t; i < inputs.size(); i += 4)
          got[i] = mul(inputs[i].first, inputs[i].second).top_value();
      });
    for (auto& w : workers) w.join();
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("lambda^6 at g=3 is -720 times the generator") {
  CanonicalClass l = lambda(3);
  CanonicalClass p = mul(mul(l, l), mul(l, mul(l, mul(l, l))));
  CHECK(p.top_value() == Rat(-720));
}
