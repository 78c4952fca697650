#include "doctest.h"
#include "hermitian.hpp"
#include "rng.hpp"

using namespace abelcone;
using herm::HermitianMatrix;

namespace {

GaussianRational gr(long re, long im = 0) { return {rat(re), rat(im)}; }

HermitianMatrix random_hermitian(Rng& rng, int n) {
  std::vector<std::vector<GaussianRational>> a(n, std::vector<GaussianRational>(n));
  for (int i = 0; i < n; ++i) {
    a[i][i] = GaussianRational(rng.rational(4, 2));
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = GaussianRational(rng.rational(4, 2), rng.rational(4, 2));
      a[j][i] = a[i][j].conj();
    }
  }
  return HermitianMatrix(std::move(a));
}

}  // namespace

TEST_CASE("constructor rejects non-hermitian input") {
  // Both off-diagonal entries i: the mirror entry must be the conjugate.
  CHECK_THROWS_AS(HermitianMatrix({{gr(0), gr(0, 1)}, {gr(0, 1), gr(0)}}), Error);
  // Imaginary diagonal.
  CHECK_THROWS_AS(HermitianMatrix({{gr(0, 1), gr(0)}, {gr(0), gr(0)}}), Error);
  CHECK_NOTHROW(HermitianMatrix({{gr(0), gr(0, 1)}, {gr(0, -1), gr(0)}}));
}

TEST_CASE("characteristic polynomial on a known matrix") {
  // [[2, i], [-i, 1]]: det(tI-H) = t^2 - 3t + 1.
  HermitianMatrix h({{gr(2), gr(0, 1)}, {gr(0, -1), gr(1)}});
  auto c = herm::char_poly(h);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Rat(1));
  CHECK(c[1] == Rat(-3));
  CHECK(c[2] == Rat(1));
  CHECK(herm::char_poly_berkowitz(h) == c);
}

TEST_CASE("both characteristic polynomial routes agree on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    HermitianMatrix h = random_hermitian(rng, n);
    CHECK(herm::char_poly(h) == herm::char_poly_berkowitz(h));
  }
}

TEST_CASE("psd decisions with certificates") {
  // Positive definite.
  HermitianMatrix pd({{gr(2), gr(0, 1)}, {gr(0, -1), gr(1)}});
  auto d1 = herm::decide_psd(pd);
  CHECK(d1.psd);
  for (const auto& e : d1.sym_coeffs) CHECK(e >= 0);

  // Indefinite: the witness must certify exactly.
  HermitianMatrix in({{gr(1), gr(0, 2)}, {gr(0, -2), gr(1)}});
  auto d2 = herm::decide_psd(in);
  CHECK(!d2.psd);
  REQUIRE(d2.witness.has_value());
  CHECK(in.quad_form(*d2.witness) == d2.witness_value);
  CHECK(d2.witness_value < 0);

  // Singular PSD: leading minors alone would be fooled by diag(0, ...).
  HermitianMatrix sing({{gr(0), gr(0)}, {gr(0), gr(3)}});
  CHECK(herm::decide_psd(sing).psd);
  HermitianMatrix singneg({{gr(0), gr(0)}, {gr(0), gr(-3)}});
  auto d3 = herm::decide_psd(singneg);
  CHECK(!d3.psd);
  CHECK(singneg.quad_form(*d3.witness) < 0);

  // Zero diagonal with off-diagonal coupling is indefinite.
  HermitianMatrix offd({{gr(0), gr(1)}, {gr(1), gr(0)}});
  auto d4 = herm::decide_psd(offd);
  CHECK(!d4.psd);
  CHECK(offd.quad_form(*d4.witness) < 0);
}

TEST_CASE("gram matrices are accepted, their shifts refuted") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    // H = sum of two rank-one squares.
    std::vector<std::vector<GaussianRational>> a(n, std::vector<GaussianRational>(n));
    for (int rank = 0; rank < 2; ++rank) {
      std::vector<GaussianRational> v(n);
      for (auto& z : v) z = GaussianRational(rng.rational(3, 2), rng.rational(3, 2));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] += v[i] * v[j].conj();
    }
    HermitianMatrix h(a);
    CHECK(herm::decide_psd(h).psd);

    for (int i = 0; i < n; ++i) a[i][i] -= GaussianRational(rat(1, 7));
    auto d = herm::decide_psd(HermitianMatrix(a));
    if (!d.psd) {
      REQUIRE(d.witness.has_value());
      CHECK(HermitianMatrix(a).quad_form(*d.witness) < 0);
    }
  }
}

TEST_CASE("quad_form matches a direct expansion") {
  HermitianMatrix h({{gr(1), gr(2, 1)}, {gr(2, -1), gr(-3)}});
  std::vector<GaussianRational> v{gr(1, 1), gr(0, 2)};
  // conj(v1) h11 v1 + conj(v1) h12 v2 + conj(v2) h21 v1 + conj(v2) h22 v2
  GaussianRational acc = v[0].conj() * h.at(0, 0) * v[0] + v[0].conj() * h.at(0, 1) * v[1] +
                         v[1].conj() * h.at(1, 0) * v[0] + v[1].conj() * h.at(1, 1) * v[1];
  CHECK(acc.is_real());
  CHECK(h.quad_form(v) == acc.re);
}
