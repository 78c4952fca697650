#include "positivity.hpp"

#include <algorithm>
#include <complex>

#include "rng.hpp"

namespace abelcone::positivity {

using canring::Basis;
using canring::Monomial;
using exterior::Form;
using herm::HermitianMatrix;
using poly::UniPoly;

CanonicalClass transfer(const CanonicalClass& x, int g_new) {
  if (x.g() == g_new) return x;
  const Basis& from = Basis::get(x.g(), x.degree());
  const Basis& to = Basis::get(g_new, x.degree());
  if (from.monomials() != to.monomials())
    fail(ErrorCode::Representation, "class does not transfer between these dimensions");
  return CanonicalClass(g_new, x.degree(), x.coeffs());
}

std::vector<Rat> coords6(const CanonicalClass& x) {
  if (x.degree() != 2) fail(ErrorCode::Degree, "expected a degree-2 class");
  if (x.g() < 2) fail(ErrorCode::Dimension, "expected g >= 2");
  return x.coeffs();
}

HermitianMatrix hermitian_matrix(const CanonicalClass& x, int g) {
  if (x.degree() != 2) fail(ErrorCode::Degree, "hermitian_matrix requires degree 2");
  if (g < 2) fail(ErrorCode::Dimension, "hermitian_matrix requires g >= 2");
  Form f = transfer(x, g).to_form();
  return herm::hermitian_of_form(f, 2);
}

ConeVerdict is_semipositive(const CanonicalClass& x, int g) {
  HermitianMatrix h = hermitian_matrix(x, g);
  herm::PsdDecision d = herm::decide_psd(h);
  ConeVerdict v;
  v.rule = "psd-char-poly";
  if (d.psd) {
    v.status = Status::Member;
    v.certificate = PsdCertificate{std::move(d.sym_coeffs)};
  } else {
    v.status = Status::NonMember;
    v.certificate = NegativeVectorCertificate{std::move(*d.witness), d.witness_value,
                                              "wedge2(g=" + std::to_string(g) + ")"};
  }
  return v;
}

InequalityCertificate semi_inequalities(const CanonicalClass& x) {
  if (x.g() != 2) fail(ErrorCode::Dimension, "semi_inequalities is a g=2 operation");
  auto a = coords6(x);
  const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5];
  InequalityCertificate c;
  auto item = [&c](const char* name, const Rat& margin) {
    c.items.push_back({name, margin >= 0, margin});
  };
  item("a1 >= 0", a1);
  item("a2 >= 0", a2);
  item("a3 >= 0", a3);
  item("a2 >= 2|a6|", a2 - 2 * rat_abs(a6));
  item("a1(a2+2a6) >= a4^2", a1 * (a2 + 2 * a6) - a4 * a4);
  item("a3(a2+2a6) >= a5^2", a3 * (a2 + 2 * a6) - a5 * a5);
  item("a1 a3 >= a6^2", a1 * a3 - a6 * a6);
  item("(a1 a3 - a6^2)(a2+2a6) + 2 a4 a5 a6 >= a3 a4^2 + a1 a5^2",
       (a1 * a3 - a6 * a6) * (a2 + 2 * a6) + 2 * a4 * a5 * a6 - a3 * a4 * a4 - a1 * a5 * a5);
  return c;
}

bool all_hold(const InequalityCertificate& c) {
  for (const auto& item : c.items)
    if (!item.holds) return false;
  return true;
}

Rat pair_with_divisors(const CanonicalClass& x, const Rat& a, const Rat& b) {
  if (x.g() != 2 || x.degree() != 2)
    fail(ErrorCode::Degree, "pair_with_divisors requires a g=2 degree-2 class");
  CanonicalClass p = canring::mul(canring::mul(x, canring::theta_ab(2, a, Rat(1))),
                                  canring::theta_ab(2, b, Rat(1)));
  return p.top_value() / 4;
}

Rat divisor_pairing_polynomial(const CanonicalClass& x, const Rat& a, const Rat& b) {
  auto c = coords6(x);
  const Rat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a5 = c[4], &a6 = c[5];
  return a3 * a * a * b * b - a5 * a * b * (a + b) + (a2 - a6) * (a * a + b * b) -
         (a2 - 6 * a6) * a * b - a4 * (a + b) + a1;
}

UniPoly nef_quartic(const CanonicalClass& x) {
  auto c = coords6(x);
  const Rat &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &a5 = c[4], &a6 = c[5];
  UniPoly alpha({a2 - a6, -a5, a3});
  UniPoly gamma({a1, -a4, a2 - a6});
  UniPoly beta({a4, a2 - 6 * a6, a5});
  return (alpha * gamma).scaled(Rat(4)) - beta * beta;
}

namespace {

// Grow a parameter until the pairing goes negative; the leading behavior
// guarantees termination.
Rat grow_until_negative(const CanonicalClass& x, bool diagonal, const Rat& fixed_b) {
  Rat m(1);
  for (int iter = 0; iter < 512; ++iter) {
    Rat value = diagonal ? pair_with_divisors(x, m, m) : pair_with_divisors(x, m, fixed_b);
    if (value < 0) return m;
    m *= 2;
  }
  fail(ErrorCode::Internal, "expected divergence to a negative pairing");
}

DivisorPairWitness nef_witness(const CanonicalClass& x, const std::vector<Rat>& a,
                               const std::optional<Rat>& quartic_witness) {
  const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4], &a6 = a[5];
  auto finish = [&x](const Rat& pa, const Rat& pb) {
    Rat value = pair_with_divisors(x, pa, pb);
    if (!(value < 0)) fail(ErrorCode::Internal, "nef witness failed to certify");
    return DivisorPairWitness{pa, pb, value};
  };

  if (a1 < 0) return finish(Rat(0), Rat(0));
  if (a3 < 0) {
    Rat m = grow_until_negative(x, true, Rat(0));
    return finish(m, m);
  }
  if (a2 - a6 < 0) {
    // P(0,b) = (a2-a6) b^2 - a4 b + a1 goes negative for large b of either sign.
    Rat m(1);
    for (int iter = 0; iter < 512; ++iter) {
      if (pair_with_divisors(x, Rat(0), m) < 0) return finish(Rat(0), m);
      if (pair_with_divisors(x, Rat(0), -m) < 0) return finish(Rat(0), -m);
      m *= 2;
    }
    fail(ErrorCode::Internal, "expected negative pairing at large b");
  }
  // gamma(b) = (a2-a6) b^2 - a4 b + a1 dips negative when (e4) fails.
  if (4 * a1 * (a2 - a6) < a4 * a4) {
    Rat b = (a2 - a6 > 0) ? Rat(a4 / (2 * (a2 - a6))) : Rat((a1 + 1) / a4);
    return finish(Rat(0), b);
  }
  // alpha(b) = a3 b^2 - a5 b + (a2-a6) dips negative when (e5) fails; then
  // P(a, b) tends to -inf in a.
  if (4 * a3 * (a2 - a6) < a5 * a5) {
    Rat b = (a3 > 0) ? Rat(a5 / (2 * a3)) : Rat((a2 - a6 + 1) / a5);
    Rat m = grow_until_negative(x, false, b);
    return finish(m, b);
  }
  // Remaining case: the quartic is negative at the provided b0.
  if (!quartic_witness) fail(ErrorCode::Internal, "missing quartic witness");
  Rat b0 = *quartic_witness;
  Rat alpha = a3 * b0 * b0 - a5 * b0 + (a2 - a6);
  Rat beta = a5 * b0 * b0 + (a2 - 6 * a6) * b0 + a4;   // P's a-coefficient is -beta
  Rat gamma = (a2 - a6) * b0 * b0 - a4 * b0 + a1;
  if (alpha > 0) return finish(beta / (2 * alpha), b0);
  if (alpha == 0) return finish((gamma + 1) / beta, b0);
  Rat m = grow_until_negative(x, false, b0);
  return finish(m, b0);
}

}  // namespace

ConeVerdict is_nef_canonical(const CanonicalClass& x) {
  auto a = coords6(x);
  if (x.g() != 2) fail(ErrorCode::Dimension, "is_nef_canonical is a g=2 operation");
  const Rat &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a5 = a[4];
  const Rat& a6 = a[5];

  std::vector<InequalityItem> items;
  auto item = [&items](const char* name, const Rat& margin) {
    items.push_back({name, margin >= 0, margin});
  };
  item("a1 >= 0", a1);
  item("a3 >= 0", a3);
  item("a2 >= a6", a2 - a6);
  item("4a1(a2-a6) >= a4^2", 4 * a1 * (a2 - a6) - a4 * a4);
  item("4a3(a2-a6) >= a5^2", 4 * a3 * (a2 - a6) - a5 * a5);

  UniPoly q = nef_quartic(x);
  poly::NonnegResult nn = poly::poly_nonneg(q);

  bool closed_form_ok = true;
  for (const auto& it : items) closed_form_ok = closed_form_ok && it.holds;

  ConeVerdict v;
  v.rule = "nef-divisor-pairings";
  if (closed_form_ok && nn.nonneg) {
    v.status = Status::Member;
    v.certificate = NefCertificate{std::move(items), q.coeffs(), std::move(nn.transcript)};
  } else {
    v.status = Status::NonMember;
    v.certificate = nef_witness(x, a, nn.witness);
  }
  return v;
}

std::vector<Rat> default_grid() {
  std::vector<Rat> grid;
  for (int q = 1; q <= 3; ++q)
    for (int p = -4; p <= 4; ++p) grid.push_back(rat(p, q));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

// Column of the LP for the generator (theta1 + a^2 theta2 + a lambda)
// (theta1 + b^2 theta2 + b lambda), in the six coordinates.
std::vector<Rat> pair_column(const Rat& a, const Rat& b) {
  return {Rat(1),         a * a + b * b, a * a * b * b,
          a + b,          a * b * (a + b), a * b};
}

// Degenerate product (theta1 + a^2 theta2 + a lambda) * theta2, the
// b -> infinity limit of pair columns; without these the boundary class
// theta1 theta2 has no finite decomposition.
std::vector<Rat> mixed_column(const Rat& a) {
  return {Rat(0), Rat(1), a * a, Rat(0), a, Rat(0)};
}

std::vector<Rat> decomposition_column(DecompositionCertificate::Kind kind, const Rat& a,
                                      const Rat& b) {
  switch (kind) {
    case DecompositionCertificate::Kind::Theta1Squared:
      return {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    case DecompositionCertificate::Kind::Theta2Squared:
      return {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
    case DecompositionCertificate::Kind::MixedPair:
      return mixed_column(a);
    default:
      return pair_column(a, b);
  }
}

}  // namespace

ConeVerdict decompose_sym2(const CanonicalClass& x, int g, const std::vector<Rat>& grid,
                           LpMode mode) {
  if (x.degree() != 2) fail(ErrorCode::Degree, "decompose_sym2 requires degree 2");
  if (grid.empty()) fail(ErrorCode::Argument, "empty grid");

  // The cone is closed under the PSD characterization; refute through it.
  ConeVerdict semi = is_semipositive(x, g);
  if (semi.status == Status::NonMember) {
    semi.rule = "sym2-psd-refutation";
    return semi;
  }

  std::vector<Rat> values = grid;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  struct Column {
    DecompositionCertificate::Kind kind;
    Rat a, b;
  };
  std::vector<Column> columns;
  columns.push_back({DecompositionCertificate::Kind::Theta1Squared, Rat(0), Rat(0)});
  columns.push_back({DecompositionCertificate::Kind::Theta2Squared, Rat(0), Rat(0)});
  for (std::size_t i = 0; i < values.size(); ++i) {
    columns.push_back({DecompositionCertificate::Kind::MixedPair, values[i], Rat(0)});
    for (std::size_t j = i; j < values.size(); ++j)
      columns.push_back({DecompositionCertificate::Kind::Pair, values[i], values[j]});
  }

  std::vector<std::vector<Rat>> rows(6, std::vector<Rat>(columns.size(), Rat(0)));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    std::vector<Rat> col = decomposition_column(columns[c].kind, columns[c].a, columns[c].b);
    for (int r = 0; r < 6; ++r) rows[r][c] = col[r];
  }

  std::vector<Rat> target = coords6(x);
  auto solution = (mode == LpMode::Exact) ? lp::feasible_point(rows, target)
                                          : lp::feasible_point_float_first(rows, target);

  ConeVerdict v;
  v.rule = "sym2-lp-grid";
  if (!solution) {
    v.status = Status::Unknown;
    return v;
  }

  DecompositionCertificate cert;
  std::vector<Rat> rebuilt(6, Rat(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Rat& w = (*solution)[c];
    if (w == 0) continue;
    if (w < 0) fail(ErrorCode::Internal, "negative LP weight");
    cert.terms.push_back({w, columns[c].kind, columns[c].a, columns[c].b});
    for (int r = 0; r < 6; ++r) rebuilt[r] += w * rows[r][c];
  }
  if (rebuilt != target) fail(ErrorCode::Internal, "decomposition does not re-expand to input");
  v.status = Status::Member;
  v.certificate = std::move(cert);
  return v;
}

ConeVerdict psef_divisor_test(const CanonicalClass& x) {
  if (x.degree() != 1) fail(ErrorCode::Degree, "psef_divisor_test requires degree 1");
  const Rat &a1 = x.coeffs()[0], &a2 = x.coeffs()[1], &a3 = x.coeffs()[2];
  InequalityCertificate c;
  c.items.push_back({"a1 >= 0", a1 >= 0, a1});
  c.items.push_back({"a2 >= 0", a2 >= 0, a2});
  c.items.push_back({"a1 a2 >= a3^2", a1 * a2 >= a3 * a3, a1 * a2 - a3 * a3});
  ConeVerdict v;
  v.rule = "divisor-cone-inequalities";
  v.status = all_hold(c) ? Status::Member : Status::NonMember;
  v.certificate = std::move(c);
  return v;
}

ConeVerdict psef_curve_test(const CanonicalClass& x, int g) {
  if (x.g() != g) fail(ErrorCode::Dimension, "class dimension mismatch");
  if (x.degree() != 2 * g - 1) fail(ErrorCode::Degree, "psef_curve_test requires degree 2g-1");

  // Coordinates of x in the basis (mu^{g-1} theta1, mu^{g-1} theta2,
  // mu^{g-1} lambda), solved exactly.
  CanonicalClass mu = canring::mu_t(g, Rat(-1));
  CanonicalClass mug = CanonicalClass::monomial(g, Monomial{0, 0, 0});
  for (int t = 0; t < g - 1; ++t) mug = canring::mul(mug, mu);
  std::vector<CanonicalClass> basis = {canring::mul(mug, canring::theta1(g)),
                                       canring::mul(mug, canring::theta2(g)),
                                       canring::mul(mug, canring::lambda(g))};

  int d = Basis::get(g, 2 * g - 1).dim();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(4, Rat(0)));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < 3; ++c) m[r][c] = basis[c].coeffs()[r];
    m[r][3] = x.coeffs()[r];
  }
  // Gaussian elimination on the d x 3 system with right-hand side.
  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int c = 0; c < 3; ++c) {
    int pr = -1;
    for (int r = rank; r < d; ++r)
      if (m[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    for (int r = 0; r < d; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int t = 0; t < 4; ++t) m[r][t] -= f * m[rank][t];
    }
    pivot_col_of_row.push_back(c);
    ++rank;
  }
  std::vector<Rat> a(3, Rat(0));
  for (int r = 0; r < rank; ++r) a[pivot_col_of_row[r]] = m[r][3] / m[r][pivot_col_of_row[r]];
  for (int r = rank; r < d; ++r)
    if (m[r][3] != 0)
      fail(ErrorCode::Representation, "class is outside the mu-basis span");

  InequalityCertificate c;
  c.items.push_back({"a1 >= 0", a[0] >= 0, a[0]});
  c.items.push_back({"a2 >= 0", a[1] >= 0, a[1]});
  c.items.push_back({"a1 a2 >= a3^2", a[0] * a[1] >= a[2] * a[2], a[0] * a[1] - a[2] * a[2]});
  ConeVerdict v;
  v.rule = "curve-cone-inequalities";
  v.status = all_hold(c) ? Status::Member : Status::NonMember;
  v.certificate = std::move(c);
  return v;
}

ConeVerdict general_g_semi_decomposition(const CanonicalClass& x, int g) {
  if (g < 2) fail(ErrorCode::Dimension, "requires g >= 2");
  ConeVerdict semi = is_semipositive(x, g);
  if (semi.status == Status::NonMember) return semi;
  ConeVerdict decomp = decompose_sym2(x, g, default_grid(), LpMode::Exact);
  if (decomp.status == Status::Member) return decomp;
  // The PSD certificate is already exact membership; the grid simply produced
  // no decomposition witness.
  return semi;
}

// ---------------------------------------------------------------------------
// Weak positivity oracle: numeric descent + exact certification.

namespace {

using cd = std::complex<double>;

struct NumericHermitian {
  int n = 0;
  std::vector<std::vector<cd>> a;
};

NumericHermitian to_numeric(const HermitianMatrix& h) {
  NumericHermitian out;
  out.n = h.dim();
  out.a.assign(out.n, std::vector<cd>(out.n));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j)
      out.a[i][j] = cd(rat_to_double(h.at(i, j).re), rat_to_double(h.at(i, j).im));
  return out;
}

// Pairs (p,q), p<q, in the order of subsets_lex(n, 2).
std::vector<std::pair<int, int>> bivector_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (auto m : exterior::subsets_lex(n, 2)) {
    int p = __builtin_ctz(m);
    int q = __builtin_ctz(m & (m - 1));
    out.emplace_back(p, q);
  }
  return out;
}

std::vector<cd> plucker(const std::vector<cd>& l1, const std::vector<cd>& l2,
                        const std::vector<std::pair<int, int>>& pairs) {
  std::vector<cd> u(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [p, q] = pairs[t];
    u[t] = l1[p] * l2[q] - l1[q] * l2[p];
  }
  return u;
}

cd hermitian_value(const NumericHermitian& h, const std::vector<cd>& u) {
  cd acc = 0;
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j) acc += std::conj(u[i]) * h.a[i][j] * u[j];
  return acc;
}

// Smallest eigenpair of a Hermitian matrix via cyclic Jacobi on the real
// symmetric embedding [[Re, -Im], [Im, Re]].
std::vector<cd> smallest_eigvec(const std::vector<std::vector<cd>>& a) {
  int n = static_cast<int>(a.size());
  int m = 2 * n;
  std::vector<std::vector<double>> s(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s[i][j] = a[i][j].real();
      s[i][j + n] = -a[i][j].imag();
      s[i + n][j] = a[i][j].imag();
      s[i + n][j + n] = a[i][j].real();
    }
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 40; ++sweep) {
    double off = 0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += s[p][q] * s[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        if (std::abs(s[p][q]) < 1e-18) continue;
        double theta = (s[q][q] - s[p][p]) / (2 * s[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int k = 0; k < m; ++k) {
          double skp = s[k][p], skq = s[k][q];
          s[k][p] = c * skp - sn * skq;
          s[k][q] = sn * skp + c * skq;
        }
        for (int k = 0; k < m; ++k) {
          double spk = s[p][k], sqk = s[q][k];
          s[p][k] = c * spk - sn * sqk;
          s[q][k] = sn * spk + c * sqk;
        }
        for (int k = 0; k < m; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - sn * vkq;
          v[k][q] = sn * vkp + c * vkq;
        }
      }
  }
  int best = 0;
  for (int i = 1; i < m; ++i)
    if (s[i][i] < s[best][best]) best = i;
  std::vector<cd> out(n);
  for (int i = 0; i < n; ++i) out[i] = cd(v[i][best], v[i + n][best]);
  double norm = 0;
  for (const auto& z : out) norm += std::norm(z);
  norm = std::sqrt(norm);
  if (norm < 1e-12) {
    out.assign(n, cd(0, 0));
    out[0] = 1;
    return out;
  }
  for (auto& z : out) z /= norm;
  return out;
}

// Minimize u* H u over unit l ⊥ fixed, where u = plucker(l, fixed) (or the
// transposed role). The matrix of the quadratic form in l is M* H M.
std::vector<cd> best_partner(const NumericHermitian& h, const std::vector<cd>& fixed,
                             bool fixed_is_second, const std::vector<std::pair<int, int>>& pairs) {
  int n = static_cast<int>(fixed.size());
  // Columns of M: image of basis vector e_i.
  std::vector<std::vector<cd>> mcols(n, std::vector<cd>(pairs.size(), cd(0, 0)));
  for (int i = 0; i < n; ++i) {
    std::vector<cd> e(n, cd(0, 0));
    e[i] = 1;
    mcols[i] = fixed_is_second ? plucker(e, fixed, pairs) : plucker(fixed, e, pairs);
  }
  std::vector<std::vector<cd>> a(n, std::vector<cd>(n, cd(0, 0)));
  for (int i = 0; i < n; ++i) {
    std::vector<cd> hmi(pairs.size(), cd(0, 0));
    for (std::size_t r = 0; r < pairs.size(); ++r)
      for (std::size_t c = 0; c < pairs.size(); ++c) hmi[r] += h.a[r][c] * mcols[i][c];
    for (int j = 0; j < n; ++j) {
      cd acc = 0;
      for (std::size_t r = 0; r < pairs.size(); ++r) acc += std::conj(mcols[j][r]) * hmi[r];
      a[j][i] = acc;
    }
  }
  // Push the fixed direction far up: candidates parallel to it have u = 0.
  double shift = 1.0;
  for (int i = 0; i < n; ++i) shift += std::abs(a[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] += 4.0 * shift * fixed[i] * std::conj(fixed[j]);
  return smallest_eigvec(a);
}

std::vector<GaussianRational> round_vector(const std::vector<cd>& v, unsigned long max_den) {
  std::vector<GaussianRational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = GaussianRational(rationalize(v[i].real(), max_den), rationalize(v[i].imag(), max_den));
  return out;
}

}  // namespace

Rat weak_objective_exact(const CanonicalClass& x, int g,
                         const std::vector<GaussianRational>& l1,
                         const std::vector<GaussianRational>& l2) {
  int n = 2 * g;
  if (static_cast<int>(l1.size()) != n || static_cast<int>(l2.size()) != n)
    fail(ErrorCode::Dimension, "covector length mismatch");
  if (g == 2) {
    // Direct wedge route: x ∧ i l1∧conj(l1) ∧ i l2∧conj(l2) against omega0.
    Form f = transfer(x, g).to_form();
    auto covector = [n](const std::vector<GaussianRational>& l) {
      Form out(n);
      for (int j = 0; j < n; ++j)
        out = out + Form::monomial(n, {exterior::Mask(1u << j), 0}, l[j]);
      return out;
    };
    Form f1 = covector(l1);
    Form f2 = covector(l2);
    Form prod = f.wedge(f1.wedge(f1.conjugate()).scaled(GaussianRational::i()))
                    .wedge(f2.wedge(f2.conjugate()).scaled(GaussianRational::i()));
    return exterior::top_scalar(prod);
  }
  // General g: the attached Hermitian form on the decomposable bivector.
  HermitianMatrix h = hermitian_matrix(x, g);
  auto pairs = bivector_pairs(n);
  std::vector<GaussianRational> u(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto [p, q] = pairs[t];
    u[t] = l1[p] * l2[q] - l1[q] * l2[p];
  }
  return h.quad_form(u);
}

ConeVerdict weak_positivity_oracle(const CanonicalClass& x, int g, const WeakOptions& opts) {
  if (x.degree() != 2) fail(ErrorCode::Degree, "weak oracle requires degree 2");
  if (opts.restarts < 1) fail(ErrorCode::Argument, "restarts must be positive");
  int n = 2 * g;

  HermitianMatrix hx = hermitian_matrix(x, g);
  NumericHermitian h = to_numeric(hx);
  auto pairs = bivector_pairs(n);
  Rng rng(opts.seed);

  double min_norm_value = 0.0;
  bool have_value = false;

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::vector<cd> l1(n), l2(n);
    for (int i = 0; i < n; ++i) {
      l1[i] = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
      l2[i] = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    }
    double prev = 1e300;
    for (int iter = 0; iter < 24; ++iter) {
      l1 = best_partner(h, l2, true, pairs);
      l2 = best_partner(h, l1, false, pairs);
      auto u = plucker(l1, l2, pairs);
      double un = 0;
      for (const auto& z : u) un += std::norm(z);
      if (un < 1e-18) break;
      double val = hermitian_value(h, u).real() / un;
      if (prev - val < 1e-13) {
        prev = val;
        break;
      }
      prev = val;
    }
    auto u = plucker(l1, l2, pairs);
    double un = 0;
    for (const auto& z : u) un += std::norm(z);
    if (un < 1e-18) continue;
    double value = hermitian_value(h, u).real() / un;
    if (!have_value || value < min_norm_value) {
      min_norm_value = value;
      have_value = true;
    }

    if (value < -opts.tol) {
      // Candidate refutation: rationalize and confirm exactly.
      for (unsigned long den : {16UL, 256UL, 65536UL, 100000000UL, 1000000000000UL}) {
        auto r1 = round_vector(l1, den);
        auto r2 = round_vector(l2, den);
        Rat exact = weak_objective_exact(x, g, r1, r2);
        if (exact < 0) {
          ConeVerdict v;
          v.status = Status::NonMember;
          v.rule = "weak-descent";
          v.certificate = WeakCounterexample{{std::move(r1), std::move(r2)}, exact};
          return v;
        }
      }
      // Numeric negative that failed to certify: keep looking.
    }
  }

  ConeVerdict v;
  v.rule = "weak-descent";
  if (have_value && min_norm_value >= -opts.tol) {
    v.status = Status::Member;  // supported, not certified
    v.certificate = WeakSupported{min_norm_value, opts.restarts, opts.tol};
  } else {
    v.status = Status::Unknown;
    v.certificate = WeakSupported{have_value ? min_norm_value : 0.0, opts.restarts, opts.tol};
  }
  return v;
}

// ---------------------------------------------------------------------------

bool revalidate(const CanonicalClass& x, int g, const ConeVerdict& v) {
  struct Checker {
    const CanonicalClass& x;
    int g;
    Status status;

    bool operator()(const std::monostate&) const { return status == Status::Unknown; }
    bool operator()(const PsdCertificate& c) const {
      // Independent characteristic polynomial route.
      auto coeffs = herm::char_poly_berkowitz(hermitian_matrix(x, g));
      int n = static_cast<int>(coeffs.size()) - 1;
      if (static_cast<int>(c.sym_coeffs.size()) != n + 1) return false;
      for (int m = 0; m <= n; ++m) {
        Rat e = (m % 2 == 0) ? coeffs[n - m] : Rat(-coeffs[n - m]);
        if (e != c.sym_coeffs[m]) return false;
        if (e < 0) return false;
      }
      return status == Status::Member;
    }
    bool operator()(const NegativeVectorCertificate& c) const {
      Rat value = hermitian_matrix(x, g).quad_form(c.vec);
      return status == Status::NonMember && value == c.value && value < 0;
    }
    bool operator()(const DivisorPairWitness& c) const {
      Rat value = pair_with_divisors(x, c.a, c.b);
      return status == Status::NonMember && value == c.value && value < 0;
    }
    bool operator()(const WeakCounterexample& c) const {
      if (c.covectors.size() != 2) return false;
      Rat value = weak_objective_exact(x, g, c.covectors[0], c.covectors[1]);
      return status == Status::NonMember && value == c.value && value < 0;
    }
    bool operator()(const WeakSupported&) const { return status != Status::NonMember; }
    bool operator()(const DecompositionCertificate& c) const {
      std::vector<Rat> rebuilt(6, Rat(0));
      for (const auto& t : c.terms) {
        if (t.weight < 0) return false;
        std::vector<Rat> col = decomposition_column(t.kind, t.a, t.b);
        for (int r = 0; r < 6; ++r) rebuilt[r] += t.weight * col[r];
      }
      return status == Status::Member && rebuilt == coords6(x);
    }
    bool operator()(const InequalityCertificate& c) const {
      for (const auto& item : c.items)
        if (item.holds != (item.margin >= 0)) return false;
      bool member = all_hold(c);
      return (status == Status::Member) == member;
    }
    bool operator()(const NefCertificate& c) const {
      if (status != Status::Member) return false;
      for (const auto& item : c.inequalities)
        if (!item.holds || item.margin < 0) return false;
      UniPoly q(std::vector<Rat>(c.quartic));
      if (!(q == nef_quartic(x))) return false;
      return poly::revalidate_nonneg(q, c.sturm);
    }
  };
  return std::visit(Checker{x, g, v.status}, v.certificate);
}

}  // namespace abelcone::positivity
