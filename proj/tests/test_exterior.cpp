#include "doctest.h"
#include "exterior.hpp"
#include "rng.hpp"

using namespace abelcone;
using namespace abelcone::exterior;

namespace {

Form dz(int n, int j) { return Form::monomial(n, {Mask(1u << (j - 1)), 0}, GaussianRational(Rat(1))); }
Form dzbar(int n, int j) { return Form::monomial(n, {0, Mask(1u << (j - 1))}, GaussianRational(Rat(1))); }

// Random form with bounded term count for property tests.
Form random_form(Rng& rng, int n, int max_terms) {
  Form f(n);
  int terms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
  for (int t = 0; t < terms; ++t) {
    MultiIndex idx{static_cast<Mask>(rng.below(1u << n)), static_cast<Mask>(rng.below(1u << n))};
    GaussianRational c(rng.rational(4, 2), rng.rational(4, 2));
    f = f + Form::monomial(n, idx, c);
  }
  return f;
}

int total_degree_of_first_term(const Form& f) {
  const auto& [idx, c] = *f.terms().begin();
  return card(idx.holo) + card(idx.anti);
}

}  // namespace

TEST_CASE("wedge kills repeated covectors") {
  int n = 4;
  Form a = dz(n, 1).wedge(dzbar(n, 1));           // dz1∧dzbar1
  Form b = dz(n, 1).wedge(dzbar(n, 2));           // dz1∧dzbar2
  CHECK(a.wedge(b).is_zero());
}

TEST_CASE("theta1 squared at g=2 is the doubled mixed product") {
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  Form sq = t1.wedge(t1);
  Form expected =
      dz(4, 1).wedge(dzbar(4, 1)).scaled(GaussianRational::i())
          .wedge(dz(4, 2).wedge(dzbar(4, 2)).scaled(GaussianRational::i()))
          .scaled(Rat(2));
  CHECK(sq == expected);
}

TEST_CASE("lambda^4 = 24 omega0 at g=2") {
  Form la = canonical_form(2, CanonicalKind::Lambda);
  Form p = wedge_pow(la, 4);
  CHECK(top_scalar(p) == Rat(24));
}

TEST_CASE("top products of the distinguished classes at g=2") {
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  Form t2 = canonical_form(2, CanonicalKind::Theta2);
  Form la = canonical_form(2, CanonicalKind::Lambda);
  CHECK(top_scalar(omega0(4)) == Rat(1));
  CHECK(top_scalar(t1.wedge(t1).wedge(t2).wedge(t2)) == Rat(4));
  CHECK(top_scalar(t1.wedge(t2).wedge(la).wedge(la)) == Rat(-4));
}

TEST_CASE("canonical forms and their coordinate expressions") {
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  Form expected = dz(4, 1).wedge(dzbar(4, 1)).scaled(GaussianRational::i()) +
                  dz(4, 2).wedge(dzbar(4, 2)).scaled(GaussianRational::i());
  CHECK(t1 == expected);

  Form la1 = canonical_form(1, CanonicalKind::Lambda);
  Form expected_la = dz(2, 1).wedge(dzbar(2, 2)).scaled(GaussianRational::i()) +
                     dz(2, 2).wedge(dzbar(2, 1)).scaled(GaussianRational::i());
  CHECK(la1 == expected_la);
}

TEST_CASE("sum of the three classes cubes to zero at g=1") {
  // The degree-(g+1) relation with a=b=1, checked by brute-force expansion.
  Form s = canonical_form(1, CanonicalKind::Theta1) + canonical_form(1, CanonicalKind::Theta2) +
           canonical_form(1, CanonicalKind::Lambda);
  CHECK(wedge_pow(s, 3).is_zero());
}

TEST_CASE("canonical forms are real (1,1) at every g <= 4") {
  for (int g = 1; g <= 4; ++g)
    for (auto kind : {CanonicalKind::Theta1, CanonicalKind::Theta2, CanonicalKind::Lambda}) {
      Form f = canonical_form(g, kind);
      CHECK(f.is_real_kk(1));
    }
}

TEST_CASE("g=2 relations hold exactly") {
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  Form t2 = canonical_form(2, CanonicalKind::Theta2);
  Form la = canonical_form(2, CanonicalKind::Lambda);
  CHECK(wedge_pow(t1, 3).is_zero());
  CHECK(wedge_pow(t2, 3).is_zero());
  CHECK(t1.wedge(t1).wedge(la).is_zero());
  CHECK(t2.wedge(t2).wedge(la).is_zero());
  CHECK((t1.wedge(t2).wedge(t2) + t2.wedge(la).wedge(la)).is_zero());
  CHECK((t1.wedge(t1).wedge(t2) + t1.wedge(la).wedge(la)).is_zero());
  CHECK((t1.wedge(t2).wedge(la).scaled(Rat(6)) + wedge_pow(la, 3)).is_zero());
}

TEST_CASE("lambda^2g top scalar for g = 1..4") {
  Rat fact(1);
  for (int g = 1; g <= 4; ++g) {
    Form la = canonical_form(g, CanonicalKind::Lambda);
    fact = 1;
    for (int m = 2; m <= 2 * g; ++m) fact *= m;
    Rat expected = (g % 2 == 0) ? fact : Rat(-fact);
    CHECK(top_scalar(wedge_pow(la, 2 * g)) == expected);
  }
}

TEST_CASE("wedge is associative and graded-commutative on random forms") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));  // up to C^6
    Form f = random_form(rng, n, 4);
    Form h = random_form(rng, n, 4);
    Form k = random_form(rng, n, 4);
    CHECK(f.wedge(h).wedge(k) == f.wedge(h.wedge(k)));
  }
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    // Homogeneous single-monomial forms exercise the sign rule sharply.
    Form f = random_form(rng, n, 1);
    Form h = random_form(rng, n, 1);
    if (f.is_zero() || h.is_zero()) continue;
    int df = total_degree_of_first_term(f);
    int dh = total_degree_of_first_term(h);
    Form rhs = h.wedge(f);
    if ((df * dh) % 2 == 1) rhs = -rhs;
    CHECK(f.wedge(h) == rhs);
  }
}

TEST_CASE("conjugation is involutive and fixes real forms") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    Form f = random_form(rng, n, 5);
    CHECK(f.conjugate().conjugate() == f);
  }
  for (int g = 1; g <= 3; ++g) {
    Form la = canonical_form(g, CanonicalKind::Lambda);
    CHECK(la.conjugate() == la);
  }
}

TEST_CASE("pullback by linear substitution") {
  // Swapping the two coordinate blocks exchanges theta1 and theta2 and fixes
  // lambda.
  int n = 4;
  std::vector<std::vector<GaussianRational>> swap(n, std::vector<GaussianRational>(n));
  swap[0][2] = swap[1][3] = swap[2][0] = swap[3][1] = GaussianRational(Rat(1));
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  Form t2 = canonical_form(2, CanonicalKind::Theta2);
  Form la = canonical_form(2, CanonicalKind::Lambda);
  CHECK(t1.pullback(swap) == t2);
  CHECK(t2.pullback(swap) == t1);
  CHECK(la.pullback(swap) == la);

  // Pullback is multiplicative.
  Rng rng(71);
  std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
  for (auto& row : m)
    for (auto& v : row) v = GaussianRational(rng.rational(2, 1), rng.rational(2, 1));
  for (int trial = 0; trial < 10; ++trial) {
    Form f = random_form(rng, n, 3);
    Form h = random_form(rng, n, 3);
    CHECK(f.wedge(h).pullback(m) == f.pullback(m).wedge(h.pullback(m)));
  }
}

TEST_CASE("top_scalar rejects non-top input") {
  Form t1 = canonical_form(2, CanonicalKind::Theta1);
  CHECK_THROWS_AS(top_scalar(t1), Error);
  CHECK(top_scalar(Form::zero(4)) == Rat(0));
}

TEST_CASE("wedge rejects mismatched dimensions") {
  Form a(4), b(6);
  CHECK_THROWS_AS(a.wedge(b), Error);
}
