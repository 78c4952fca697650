#include "doctest.h"
#include "rng.hpp"
#include "unipoly.hpp"

using namespace abelcone;
using poly::UniPoly;

namespace {
UniPoly make(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long v : ascending) c.push_back(rat(v));
  return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("arithmetic and division") {
  UniPoly p = make({-1, 0, 1});  // x^2 - 1
  UniPoly q = make({1, 1});      // x + 1
  auto [quot, rem] = p.divmod(q);
  CHECK(quot == make({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(p.eval(rat(3)) == Rat(8));
  CHECK((p * q).degree() == 3);
  CHECK(poly::gcd(p, q) == q.monic());
}

TEST_CASE("sturm root counting") {
  // (x^2-1)(x^2-4) has four real roots.
  UniPoly p = make({-1, 0, 1}) * make({-4, 0, 1});
  CHECK(poly::count_real_roots(p) == 4);
  CHECK(poly::count_real_roots(p, rat(0), rat(3)) == 2);
  CHECK(poly::count_real_roots(make({1, 0, 1})) == 0);  // x^2 + 1
  // Repeated roots are counted once.
  UniPoly sq = make({1, 1}) * make({1, 1});
  CHECK(poly::count_real_roots(sq) == 1);
}

TEST_CASE("isolation produces disjoint intervals") {
  UniPoly p = make({-1, 0, 1}) * make({-4, 0, 1});
  auto intervals = poly::isolate_real_roots(p);
  REQUIRE(intervals.size() == 4);
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i)
    CHECK(intervals[i].second <= intervals[i + 1].first);
}

TEST_CASE("nonnegativity: basic verdicts") {
  auto t = poly::poly_nonneg(make({1, 0, 1}));  // b^2 + 1
  CHECK(t.nonneg);
  CHECK(poly::revalidate_nonneg(make({1, 0, 1}), t.transcript));

  auto f = poly::poly_nonneg(make({-1, 0, 1}));  // b^2 - 1
  CHECK(!f.nonneg);
  REQUIRE(f.witness.has_value());
  CHECK(make({-1, 0, 1}).eval(*f.witness) < 0);

  CHECK(poly::poly_nonneg(UniPoly()).nonneg);            // zero polynomial
  CHECK(poly::poly_nonneg(make({3})).nonneg);            // positive constant
  CHECK(!poly::poly_nonneg(make({-3})).nonneg);          // negative constant
  CHECK(!poly::poly_nonneg(make({0, 1})).nonneg);        // odd degree
  CHECK(!poly::poly_nonneg(make({0, 0, 0, 0, -1})).nonneg);  // negative lead
}

TEST_CASE("nonnegativity with even-multiplicity roots") {
  // (x-1)^2 (x^2+1) >= 0 everywhere.
  UniPoly p = make({1, -1}) * make({1, -1}) * make({1, 0, 1});
  auto r = poly::poly_nonneg(p);
  CHECK(r.nonneg);
  CHECK(poly::revalidate_nonneg(p, r.transcript));

  // (x-1)^2 (x^2-4) dips negative away from the double root.
  UniPoly q = make({1, -1}) * make({1, -1}) * make({-4, 0, 1});
  auto rq = poly::poly_nonneg(q);
  CHECK(!rq.nonneg);
  REQUIRE(rq.witness.has_value());
  CHECK(q.eval(*rq.witness) < 0);
}

TEST_CASE("nef quartic of the mu family at the boundary") {
  // For 4 theta1 theta2 + t lambda^2 the quartic reduces to
  // b^2 (4(4-t)^2 - (4-6t)^2); at t = 3/2 it vanishes identically.
  auto q_of = [](const Rat& t) {
    Rat c = 4 * (4 - t) * (4 - t) - (4 - 6 * t) * (4 - 6 * t);
    return UniPoly({Rat(0), Rat(0), c});
  };
  auto boundary = poly::poly_nonneg(q_of(rat(3, 2)));
  CHECK(boundary.nonneg);
  // Independent dense-sampling check at the boundary value.
  UniPoly qb = q_of(rat(3, 2));
  for (int j = 0; j < 10000; ++j) CHECK(qb.eval(rat(j - 5000, 100)) >= 0);
  CHECK(poly::poly_nonneg(q_of(Rat(1))).nonneg);
  auto beyond = poly::poly_nonneg(q_of(rat(151, 100)));
  CHECK(!beyond.nonneg);
  REQUIRE(beyond.witness.has_value());
  CHECK(q_of(rat(151, 100)).eval(*beyond.witness) < 0);
}

TEST_CASE("descartes counter agrees with sturm on random polynomials") {
  Rng rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Rat> c(1 + rng.below(6));
    for (auto& v : c) v = rng.rational(5, 2);
    UniPoly p(std::move(c));
    if (p.degree() <= 0) continue;
    UniPoly sf = poly::squarefree_part(p);
    CHECK(poly::descartes_count_roots(sf) == poly::count_real_roots(sf));
  }
}

TEST_CASE("nonnegativity fuzz: constructed multiplicity patterns") {
  // Products of linear and irreducible quadratic factors with multiplicities
  // 1..3, checked against a dense exact sampler plus witness validation.
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    UniPoly p = UniPoly::constant(rng.nonzero_rational(2, 1));
    int factors = 1 + static_cast<int>(rng.below(3));
    for (int f = 0; f < factors; ++f) {
      UniPoly base;
      if (rng.below(2) == 0) {
        base = UniPoly({rng.rational(3, 2), rng.nonzero_rational(2, 1)});
      } else {
        // x^2 + bx + c, c shifted up so some are positive definite.
        base = UniPoly({rng.rational(3, 1) + 2, rng.rational(2, 1), Rat(1)});
      }
      int mult = 1 + static_cast<int>(rng.below(3));
      for (int m = 0; m < mult; ++m) p = p * base;
    }
    auto res = poly::poly_nonneg(p);
    if (res.nonneg) {
      CHECK(poly::revalidate_nonneg(p, res.transcript));
      bool sampler_refutes = false;
      for (int j = -1000; j <= 1000; ++j)
        if (p.eval(rat(j, 10)) < 0) {
          sampler_refutes = true;
          break;
        }
      CHECK(!sampler_refutes);
    } else {
      REQUIRE(res.witness.has_value());
      CHECK(p.eval(*res.witness) < 0);
    }
  }
}

TEST_CASE("squarefree decomposition reassembles") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    UniPoly p = UniPoly::constant(rng.nonzero_rational(3, 2));
    int factors = 1 + static_cast<int>(rng.below(3));
    for (int f = 0; f < factors; ++f) {
      UniPoly lin({rng.rational(3, 2), rng.nonzero_rational(3, 2)});
      int mult = 1 + static_cast<int>(rng.below(3));
      for (int m = 0; m < mult; ++m) p = p * lin;
    }
    auto dec = poly::squarefree_decomposition(p);
    UniPoly rebuilt = UniPoly::constant(p.lead());
    for (std::size_t e = 0; e < dec.size(); ++e)
      for (std::size_t m = 0; m <= e; ++m) rebuilt = rebuilt * dec[e];
    CHECK(rebuilt.monic() == p.monic());
  }
}
