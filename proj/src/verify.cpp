#include "verify.hpp"

#include <sstream>

#include "classdoc.hpp"
#include "cm.hpp"
#include "fourier.hpp"
#include "positivity.hpp"
#include "rng.hpp"

namespace abelcone::verify {

using canring::CanonicalClass;
using canring::Monomial;
using exterior::CanonicalKind;
using exterior::Form;
using positivity::ConeVerdict;
using positivity::Status;

bool Report::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

namespace {

std::uint64_t item_seed(const Options& opts, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ (opts.seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
}

CanonicalClass random_class(Rng& rng, int g, int degree, long max_num = 5, long max_den = 3) {
  const canring::Basis& basis = canring::Basis::get(g, degree);
  std::vector<Rat> coeffs(basis.dim());
  for (auto& c : coeffs) c = rng.rational(max_num, max_den);
  return CanonicalClass(g, degree, std::move(coeffs));
}

struct Runner {
  const Options& opts;
  Report& report;

  bool wants(const std::string& id) const {
    return opts.only.empty() || id.find(opts.only) != std::string::npos;
  }

  template <typename F>
  void item(const std::string& id, F&& body) {
    if (!wants(id)) return;
    Item it;
    it.id = id;
    try {
      std::ostringstream detail;
      it.pass = body(detail);
      it.detail = detail.str();
    } catch (const std::exception& e) {
      it.pass = false;
      it.detail = std::string("exception: ") + e.what();
    }
    report.items.push_back(std::move(it));
  }
};

// ---- item bodies ---------------------------------------------------------

bool product_table(std::ostream& detail) {
  using exterior::top_scalar;
  using exterior::wedge_pow;
  Form t1 = exterior::canonical_form(2, CanonicalKind::Theta1);
  Form t2 = exterior::canonical_form(2, CanonicalKind::Theta2);
  Form la = exterior::canonical_form(2, CanonicalKind::Lambda);
  int checked = 0, good = 0;
  for (const Monomial& m : canring::monomials_of_degree(4)) {
    Form p = wedge_pow(t1, m.i).wedge(wedge_pow(t2, m.j)).wedge(wedge_pow(la, m.k));
    Rat expected(0);
    if (m == Monomial{2, 2, 0}) expected = 4;
    if (m == Monomial{1, 1, 2}) expected = -4;
    if (m == Monomial{0, 0, 4}) expected = 24;
    Rat got = p.is_zero() ? Rat(0) : top_scalar(p);
    ++checked;
    if (got == expected)
      ++good;
    else
      detail << m.str() << " = " << rat_str(got) << " (expected " << rat_str(expected) << "); ";
    // Cross-check through the ring product as well.
    CanonicalClass cm1 = canring::mul(canring::CanonicalClass::monomial(2, {m.i, 0, 0}),
                                      canring::CanonicalClass::monomial(2, {0, m.j, m.k}));
    if (cm1.top_value() != expected) {
      detail << m.str() << " ring product mismatch; ";
      return false;
    }
  }
  detail << good << "/" << checked << " degree-4 products match";
  return good == checked;
}

bool lambda_powers(std::ostream& detail, int g_min, int g_max) {
  bool ok = true;
  for (int g = std::max(1, g_min); g <= std::min(4, g_max); ++g) {
    Form la = exterior::canonical_form(g, CanonicalKind::Lambda);
    Rat fact(1);
    for (int m = 2; m <= 2 * g; ++m) fact *= m;
    Rat expected = (g % 2 == 0) ? fact : Rat(-fact);
    Rat got = exterior::top_scalar(exterior::wedge_pow(la, 2 * g));
    detail << "g=" << g << ": " << rat_str(got) << "; ";
    ok = ok && got == expected;
  }
  return ok;
}

bool ring_relations(std::ostream& detail, int g_min, int g_max) {
  bool ok = true;
  for (int g = std::max(1, g_min); g <= std::min(4, g_max); ++g) {
    auto rep = canring::verify_relations(g);
    for (const auto& it : rep.items)
      if (!it.pass) {
        detail << "g=" << g << " fails " << it.name << "; ";
        ok = false;
      }
    Rat top = exterior::top_scalar(
        exterior::wedge_pow(exterior::canonical_form(g, CanonicalKind::Lambda), 2 * g));
    detail << "g=" << g << ": " << rep.items.size() << " checks, lambda^" << 2 * g << " = "
           << rat_str(top) << "; ";
  }
  return ok;
}

bool hermitian_matrices(std::ostream& detail) {
  // The six matrices attached to the degree-2 basis monomials, row by row.
  auto mat = [](std::vector<std::vector<long>> re,
                long scale) -> std::vector<std::vector<GaussianRational>> {
    std::vector<std::vector<GaussianRational>> out(6, std::vector<GaussianRational>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out[i][j] = GaussianRational(rat(scale * re[i][j]));
    return out;
  };
  struct Expected {
    Monomial m;
    std::vector<std::vector<GaussianRational>> h;
  };
  std::vector<Expected> table;
  table.push_back({{1, 1, 0}, mat({{0, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 0}},
                                  1)});
  table.push_back({{0, 0, 2}, mat({{0, 0, 0, 0, 0, 1},
                                   {0, -1, 0, 0, 0, 0},
                                   {0, 0, 0, -1, 0, 0},
                                   {0, 0, -1, 0, 0, 0},
                                   {0, 0, 0, 0, -1, 0},
                                   {1, 0, 0, 0, 0, 0}},
                                  2)});
  table.push_back({{2, 0, 0}, mat({{1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0}},
                                  2)});
  table.push_back({{0, 2, 0}, mat({{0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1}},
                                  2)});
  table.push_back({{1, 0, 1}, mat({{0, 0, 1, -1, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {1, 0, 0, 0, 0, 0},
                                   {-1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0}},
                                  1)});
  table.push_back({{0, 1, 1}, mat({{0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1},
                                   {0, 0, 0, 0, 0, -1},
                                   {0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, -1, 0, 0}},
                                  1)});
  int good = 0;
  for (const auto& e : table) {
    auto h = positivity::hermitian_matrix(CanonicalClass::monomial(2, e.m), 2);
    if (h.entries() == e.h)
      ++good;
    else
      detail << "mismatch at " << e.m.str() << "; ";
  }
  detail << good << "/6 matrices match";

  // The general six-coordinate matrix against its closed form.
  Rng rng(0xabc123);
  for (int trial = 0; trial < 20; ++trial) {
    CanonicalClass x = random_class(rng, 2, 2);
    auto a = positivity::coords6(x);
    auto h = positivity::hermitian_matrix(x, 2);
    const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5];
    std::vector<std::vector<Rat>> want = {
        {2 * a1, Rat(0), a4, -a4, Rat(0), 2 * a6},
        {Rat(0), a2 - 2 * a6, Rat(0), Rat(0), Rat(0), Rat(0)},
        {a4, Rat(0), a2, -2 * a6, Rat(0), a5},
        {-a4, Rat(0), -2 * a6, a2, Rat(0), -a5},
        {Rat(0), Rat(0), Rat(0), Rat(0), a2 - 2 * a6, Rat(0)},
        {2 * a6, Rat(0), a5, -a5, Rat(0), 2 * a3}};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (h.at(i, j) != GaussianRational(want[i][j])) {
          detail << "; general matrix mismatch at (" << i << "," << j << ")";
          return false;
        }
  }
  detail << "; general form matches on 20 samples";
  return good == 6;
}

bool nef_product(std::ostream& detail) {
  CanonicalClass x = canring::mu_t(2, Rat(1));
  CanonicalClass y = CanonicalClass::monomial(2, {2, 0, 0}, Rat(2)) +
                     CanonicalClass::monomial(2, {0, 2, 0}, Rat(2)) +
                     CanonicalClass::monomial(2, {0, 0, 2}, Rat(-1));
  Rat prod = canring::mul(x, y).top_value();
  detail << "product = " << rat_str(prod);
  bool ok = prod == Rat(-8);
  ConeVerdict vx = positivity::is_nef_canonical(x);
  ConeVerdict vy = positivity::is_nef_canonical(y);
  detail << "; factors nef: " << positivity::status_str(vx.status) << "/"
         << positivity::status_str(vy.status);
  ok = ok && vx.status == Status::Member && vy.status == Status::Member;
  ok = ok && positivity::revalidate(x, 2, vx) && positivity::revalidate(y, 2, vy);
  return ok;
}

bool nef_boundary(std::ostream& detail) {
  bool ok = true;
  for (const Rat& t : {Rat(-1), Rat(0), Rat(1), rat(3, 2)}) {
    ConeVerdict v = positivity::is_nef_canonical(canring::mu_t(2, t));
    detail << "t=" << rat_str(t) << ":" << positivity::status_str(v.status) << " ";
    ok = ok && v.status == Status::Member && positivity::revalidate(canring::mu_t(2, t), 2, v);
  }
  for (const Rat& t : {rat(-101, 100), rat(151, 100)}) {
    CanonicalClass x = canring::mu_t(2, t);
    ConeVerdict v = positivity::is_nef_canonical(x);
    detail << "t=" << rat_str(t) << ":" << positivity::status_str(v.status);
    ok = ok && v.status == Status::NonMember;
    if (auto* w = std::get_if<positivity::DivisorPairWitness>(&v.certificate)) {
      detail << "(pair " << rat_str(w->a) << "," << rat_str(w->b) << " -> " << rat_str(w->value)
             << ") ";
      ok = ok && positivity::revalidate(x, 2, v);
    } else {
      ok = false;
    }
  }
  return ok;
}

bool semi_weak_family(std::ostream& detail, std::uint64_t seed) {
  bool ok = true;
  for (const Rat& t : {rat(-1, 2), rat(1, 2), Rat(-1), Rat(1)}) {
    ConeVerdict v = positivity::is_semipositive(canring::mu_t(2, t), 2);
    ok = ok && v.status == Status::NonMember &&
         positivity::revalidate(canring::mu_t(2, t), 2, v);
  }
  {
    ConeVerdict v = positivity::is_semipositive(canring::mu_t(2, Rat(0)), 2);
    ok = ok && v.status == Status::Member;
  }
  detail << "semi verdicts ok=" << ok;

  positivity::WeakOptions wopts;
  wopts.restarts = 64;
  wopts.seed = seed;
  for (const Rat& t : {rat(11, 10), rat(-11, 10)}) {
    CanonicalClass x = canring::mu_t(2, t);
    ConeVerdict v = positivity::weak_positivity_oracle(x, 2, wopts);
    bool good = v.status == Status::NonMember && positivity::revalidate(x, 2, v);
    if (auto* w = std::get_if<positivity::WeakCounterexample>(&v.certificate))
      detail << "; t=" << rat_str(t) << " refuted exactly, value " << rat_str(w->value);
    else
      good = false;
    ok = ok && good;
  }
  for (const Rat& t : {Rat(0), Rat(1), Rat(-1)}) {
    CanonicalClass x = canring::mu_t(2, t);
    ConeVerdict v = positivity::weak_positivity_oracle(x, 2, wopts);
    bool good = v.status == Status::Member;
    if (auto* w = std::get_if<positivity::WeakSupported>(&v.certificate)) {
      detail << "; t=" << rat_str(t) << " min=" << positivity::double_str(w->min_objective);
      good = good && w->min_objective >= -wopts.tol;
    } else {
      good = false;
    }
    ok = ok && good;
  }
  return ok;
}

bool interior_decomposition(std::ostream& detail, std::uint64_t seed) {
  Rng rng(seed);
  auto grid = positivity::default_grid();
  // Interior margin (theta1 + theta2)^2.
  CanonicalClass margin = CanonicalClass::monomial(2, {2, 0, 0}) +
                          CanonicalClass::monomial(2, {1, 1, 0}, Rat(2)) +
                          CanonicalClass::monomial(2, {0, 2, 0});

  int accepted = 0, interior = 0, decomposed = 0, draws = 0;
  while (accepted < 200 && draws < 2000000) {
    ++draws;
    CanonicalClass x = random_class(rng, 2, 2, 4, 2);
    ConeVerdict semi = positivity::is_semipositive(x, 2);
    if (semi.status != Status::Member) continue;
    ++accepted;
    CanonicalClass shifted = x - margin.scaled(rat(1, 1000));
    bool is_interior = positivity::is_semipositive(shifted, 2).status == Status::Member;
    if (!is_interior) continue;
    ++interior;
    ConeVerdict dec = positivity::decompose_sym2(x, 2, grid);
    if (dec.status == Status::Member) {
      if (!positivity::revalidate(x, 2, dec)) {
        detail << "certificate failed to re-expand; ";
        return false;
      }
      ++decomposed;
    }
  }
  detail << accepted << " accepted, " << interior << " interior, " << decomposed
         << " decomposed";
  if (accepted < 200) return false;
  return interior == 0 || 100 * decomposed >= 95 * interior;
}

bool pontryagin_product_formula(std::ostream& detail, std::uint64_t seed) {
  Rng rng(seed);
  bool ok = true;
  auto random_alpha = [&rng](int n) {
    fourier::CohClass a(n);
    for (auto mask : exterior::subsets_lex(2 * n, 2))
      a = a + fourier::CohClass::monomial(n, mask, rng.rational(4, 2));
    return a;
  };
  for (int n = 1; n <= 3; ++n) {
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
      fourier::CohClass a = random_alpha(n);
      for (int k = 0; k <= n; ++k) {
        if (!fourier::check_prodform(n, k, a)) {
          detail << "fails at n=" << n << " k=" << k << "; ";
          ok = false;
        }
        ++checked;
      }
    }
    detail << "n=" << n << ": " << checked << " checks; ";
  }
  for (int trial = 0; trial < 5; ++trial) {
    fourier::CohClass a = random_alpha(4);
    for (int k = 0; k <= 4; ++k)
      if (!fourier::check_prodform(4, k, a)) {
        detail << "fails at n=4 k=" << k << "; ";
        ok = false;
      }
  }
  detail << "n=4: 25 checks";
  return ok;
}

bool psd_inequalities_equivalence(std::ostream& detail, std::uint64_t seed) {
  Rng rng(seed);
  int agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    CanonicalClass x = random_class(rng, 2, 2, 4, 2);
    bool psd = positivity::is_semipositive(x, 2).status == Status::Member;
    bool ineq = positivity::all_hold(positivity::semi_inequalities(x));
    if (psd == ineq)
      ++agree;
    else
      detail << "disagreement at trial " << trial << "; ";
  }
  detail << agree << "/1000 agree";
  return agree == 1000;
}

bool chain_stability(std::ostream& detail, std::uint64_t seed) {
  Rng rng(seed);
  auto grid = positivity::default_grid();
  int trials = 0, violations = 0;
  int weak_checked = 0;

  auto random_unimodular = [&rng]() {
    // Random integer matrix with determinant +-1 (product of elementary ones).
    long a = 1, b = 0, c = 0, d = 1;
    for (int step = 0; step < 4; ++step) {
      long t = rng.int_in(-3, 3);
      if (rng.below(2) == 0) {
        a += t * c;
        b += t * d;
      } else {
        c += t * a;
        d += t * b;
      }
    }
    if (rng.below(2) == 0) std::swap(a, c), std::swap(b, d);
    return canring::Gl2Matrix{rat(a), rat(b), rat(c), rat(d)};
  };

  for (int round = 0; round < 170; ++round) {
    // Degree-2 chain: decomposition -> semi -> nef, with a GL2 transform.
    CanonicalClass x = random_class(rng, 2, 2, 4, 2);
    bool semi = positivity::is_semipositive(x, 2).status == Status::Member;
    ++trials;
    if (semi) {
      if (positivity::is_nef_canonical(x).status != Status::Member) {
        detail << "semi member not nef; ";
        ++violations;
      }
      auto m = random_unimodular();
      if (positivity::is_semipositive(canring::gl2_act(m, x), 2).status != Status::Member) {
        detail << "semi not GL2-stable; ";
        ++violations;
      }
      ConeVerdict dec = positivity::decompose_sym2(x, 2, grid);
      if (dec.status == Status::Member && !positivity::revalidate(x, 2, dec)) {
        detail << "decomposition failed revalidation; ";
        ++violations;
      }
      if (weak_checked < 12) {
        positivity::WeakOptions wopts;
        wopts.restarts = 8;
        wopts.seed = rng.next();
        ++weak_checked;
        if (positivity::weak_positivity_oracle(x, 2, wopts).status != Status::Member) {
          detail << "semi member not weak-supported; ";
          ++violations;
        }
      }
    }

    // Divisor cone: boundary classes and GL2 stability.
    ++trials;
    Rat a = rng.rational(4, 2), b = rng.rational(4, 2);
    CanonicalClass boundary = canring::theta_ab(2, a, b);
    if (positivity::psef_divisor_test(boundary).status != Status::Member) {
      detail << "theta_ab not psef; ";
      ++violations;
    }
    CanonicalClass d1 = random_class(rng, 2, 1, 4, 2);
    if (positivity::psef_divisor_test(d1).status == Status::Member) {
      auto m = random_unimodular();
      if (positivity::psef_divisor_test(canring::gl2_act(m, d1)).status != Status::Member) {
        detail << "divisor cone not GL2-stable; ";
        ++violations;
      }
    }

    // Curve cone at g=2: mu * psef divisor classes are members; stability.
    ++trials;
    CanonicalClass mu = canring::mu_t(2, Rat(-1));
    CanonicalClass curve = canring::mul(mu, canring::theta_ab(2, a, b));
    if (positivity::psef_curve_test(curve, 2).status != Status::Member) {
      detail << "mu*theta_ab not psef curve; ";
      ++violations;
    }
    CanonicalClass c3 = random_class(rng, 2, 3, 4, 2);
    if (positivity::psef_curve_test(c3, 2).status == Status::Member) {
      auto m = random_unimodular();
      if (positivity::psef_curve_test(canring::gl2_act(m, c3), 2).status != Status::Member) {
        detail << "curve cone not GL2-stable; ";
        ++violations;
      }
    }
  }

  // Divisor pairing identity against the closed-form sextic.
  for (int round = 0; round < 100; ++round) {
    ++trials;
    CanonicalClass x = random_class(rng, 2, 2, 4, 2);
    Rat a = rng.rational(4, 2), b = rng.rational(4, 2);
    if (positivity::pair_with_divisors(x, a, b) != positivity::divisor_pairing_polynomial(x, a, b)) {
      detail << "pairing polynomial mismatch; ";
      ++violations;
    }
  }

  // Duality sampling: strongly positive products against the weak family.
  for (int round = 0; round < 1000; ++round) {
    ++trials;
    std::vector<GaussianRational> l1(4), l2(4);
    for (int i = 0; i < 4; ++i) {
      l1[i] = GaussianRational(rng.rational(3, 2), rng.rational(3, 2));
      l2[i] = GaussianRational(rng.rational(3, 2), rng.rational(3, 2));
    }
    Rat t = rng.rational(4, 4);
    if (rat_abs(t) > 1) t = Rat(1) / t;
    CanonicalClass w = canring::mu_t(2, t);
    Rat value = positivity::weak_objective_exact(w, 2, l1, l2);
    if (value < 0) {
      detail << "duality pairing negative for |t|<=1; ";
      ++violations;
    }
  }

  detail << trials << " trials, " << violations << " violations";
  return violations == 0;
}

bool quartic_sampler_agreement(std::ostream& detail, std::uint64_t seed) {
  Rng rng(seed);
  int checked = 0, bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rat> coeffs(5);
    for (auto& c : coeffs) c = rng.rational(6, 3);
    poly::UniPoly p(std::move(coeffs));
    auto res = poly::poly_nonneg(p);
    ++checked;
    if (res.nonneg) {
      // 10^4 rational sample points; none may evaluate negative.
      for (int j = 0; j < 10000; ++j) {
        Rat x = rat(j - 5000, 100);
        if (p.eval(x) < 0) {
          detail << "sampler refuted an accepted quartic (trial " << trial << "); ";
          ++bad;
          break;
        }
      }
      if (!poly::revalidate_nonneg(p, res.transcript)) {
        detail << "transcript failed revalidation (trial " << trial << "); ";
        ++bad;
      }
    } else {
      if (!res.witness || !(p.eval(*res.witness) < 0)) {
        detail << "missing or invalid witness (trial " << trial << "); ";
        ++bad;
      }
    }
  }
  detail << checked << " quartics, " << bad << " failures";
  return bad == 0;
}

bool cm_separation(std::ostream& detail) {
  auto w = cm::semi_not_strong_witness(4, 2);
  if (!w) {
    detail << "no witness found";
    return false;
  }
  detail << "pairing = " << rat_str(w->pairing) << ", t = " << rat_str(w->t);
  if (!(w->pairing < 0)) return false;
  if (!cm::revalidate_witness(*w)) {
    detail << "; revalidation failed";
    return false;
  }
  detail << "; revalidated (alpha non-decomposable, eta PSD rank 1, phi in family)";
  return true;
}

}  // namespace

Report run(const Options& opts) {
  Report report;
  Runner r{opts, report};

  r.item("product-table", [](std::ostream& d) { return product_table(d); });
  r.item("lambda-powers",
         [&](std::ostream& d) { return lambda_powers(d, opts.g_min, opts.g_max); });
  r.item("ring-relations",
         [&](std::ostream& d) { return ring_relations(d, opts.g_min, opts.g_max); });
  r.item("hermitian-matrices", [](std::ostream& d) { return hermitian_matrices(d); });
  r.item("nef-product", [](std::ostream& d) { return nef_product(d); });
  r.item("nef-boundary", [](std::ostream& d) { return nef_boundary(d); });
  r.item("semi-weak-family",
         [&](std::ostream& d) { return semi_weak_family(d, item_seed(opts, "semi-weak-family")); });
  r.item("interior-decomposition", [&](std::ostream& d) {
    return interior_decomposition(d, item_seed(opts, "interior-decomposition"));
  });
  r.item("pontryagin-product-formula", [&](std::ostream& d) {
    return pontryagin_product_formula(d, item_seed(opts, "pontryagin-product-formula"));
  });
  r.item("psd-inequalities-equivalence", [&](std::ostream& d) {
    return psd_inequalities_equivalence(d, item_seed(opts, "psd-inequalities-equivalence"));
  });
  r.item("chain-stability",
         [&](std::ostream& d) { return chain_stability(d, item_seed(opts, "chain-stability")); });
  r.item("quartic-sampler-agreement", [&](std::ostream& d) {
    return quartic_sampler_agreement(d, item_seed(opts, "quartic-sampler-agreement"));
  });
  r.item("cm-separation", [](std::ostream& d) { return cm_separation(d); });

  return report;
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& it : r.items)
    items.push_back(
        nlohmann::ordered_json{{"id", it.id}, {"pass", it.pass}, {"detail", it.detail}});
  return nlohmann::ordered_json{{"all_pass", r.all_pass()}, {"items", items}};
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  for (const auto& it : r.items)
    out << (it.pass ? "PASS" : "FAIL") << "  " << it.id
        << (it.detail.empty() ? "" : "  [" + it.detail + "]") << "\n";
  out << (r.all_pass() ? "all items pass" : "FAILURES present") << "\n";
  return out.str();
}

}  // namespace abelcone::verify
