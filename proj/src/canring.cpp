#include "canring.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "rng.hpp"

namespace abelcone::canring {

using exterior::CanonicalKind;
using exterior::MultiIndex;

std::string Monomial::str() const {
  if (i == 0 && j == 0 && k == 0) return "1";
  std::string s;
  auto factor = [&s](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("t1", i);
  factor("t2", j);
  factor("l", k);
  return s;
}

std::vector<Monomial> monomials_of_degree(int r) {
  std::vector<Monomial> out;
  for (int k = 0; k <= r; ++k)
    for (int i = r - k; i >= 0; --i) out.push_back({i, r - k - i, k});
  return out;
}

namespace {

Form expand_monomial(int g, const Monomial& m) {
  using exterior::wedge_pow;
  Form t1 = exterior::canonical_form(g, CanonicalKind::Theta1);
  Form t2 = exterior::canonical_form(g, CanonicalKind::Theta2);
  Form la = exterior::canonical_form(g, CanonicalKind::Lambda);
  return wedge_pow(t1, m.i).wedge(wedge_pow(t2, m.j)).wedge(wedge_pow(la, m.k));
}

// Dense coordinate vector of a form over a fixed key list.
std::vector<GaussianRational> densify(const Form& f, const std::vector<MultiIndex>& keys) {
  std::vector<GaussianRational> v(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) v[i] = f.coeff(keys[i]);
  return v;
}

}  // namespace

Basis::Basis(int g, int r) : g_(g), r_(r) {
  if (g < 1) fail(ErrorCode::Argument, "g must be >= 1");
  if (r < 0 || r > 2 * g) fail(ErrorCode::Degree, "degree out of range 0..2g");

  // Key list: all (r,r) multi-indices on C^{2g}.
  std::vector<MultiIndex> keys;
  auto hs = exterior::subsets_lex(2 * g, r);
  for (auto h : hs)
    for (auto a : hs) keys.push_back({h, a});

  // Greedy independent subset in canonical order, by incremental elimination.
  std::vector<std::vector<GaussianRational>> reduced;  // reduced vectors
  std::vector<std::size_t> pivot_idx;                  // pivot key per reduced vector
  for (const Monomial& m : monomials_of_degree(r)) {
    Form f = expand_monomial(g, m);
    if (f.is_zero()) continue;
    std::vector<GaussianRational> v = densify(f, keys);
    for (std::size_t e = 0; e < reduced.size(); ++e) {
      const auto& p = v[pivot_idx[e]];
      if (p.is_zero()) continue;
      GaussianRational factor = p / reduced[e][pivot_idx[e]];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= factor * reduced[e][t];
    }
    std::size_t piv = v.size();
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!v[t].is_zero()) {
        piv = t;
        break;
      }
    if (piv == v.size()) continue;  // dependent on earlier monomials
    monomials_.push_back(m);
    scales_.emplace_back(1);
    forms_.push_back(std::move(f));
    reduced.push_back(std::move(v));
    pivot_idx.push_back(piv);
  }

  // Normalize the top-degree generator so its top_scalar is 1.
  if (r == 2 * g && !forms_.empty()) {
    Rat ts = exterior::top_scalar(forms_[0]);
    scales_[0] = Rat(1) / ts;
    forms_[0] = forms_[0].scaled(scales_[0]);
  }

  for (std::size_t e = 0; e < pivot_idx.size(); ++e) pivots_.push_back(keys[pivot_idx[e]]);

  // Inverse of the pivot submatrix A with A[p][e] = coeff of basis form e at
  // pivot p, by Gauss-Jordan over Q(i).
  int d = dim();
  std::vector<std::vector<GaussianRational>> a(d), inv(d);
  for (int p = 0; p < d; ++p) {
    a[p].resize(d);
    inv[p].assign(d, GaussianRational());
    inv[p][p] = GaussianRational(Rat(1));
    for (int e = 0; e < d; ++e) a[p][e] = forms_[e].coeff(pivots_[p]);
  }
  for (int col = 0; col < d; ++col) {
    int pr = -1;
    for (int row = col; row < d; ++row)
      if (!a[row][col].is_zero()) {
        pr = row;
        break;
      }
    if (pr < 0) fail(ErrorCode::Internal, "singular pivot submatrix");
    std::swap(a[pr], a[col]);
    std::swap(inv[pr], inv[col]);
    GaussianRational lead = a[col][col].inverse();
    for (int t = 0; t < d; ++t) {
      a[col][t] *= lead;
      inv[col][t] *= lead;
    }
    for (int row = 0; row < d; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      GaussianRational f = a[row][col];
      for (int t = 0; t < d; ++t) {
        a[row][t] -= f * a[col][t];
        inv[row][t] -= f * inv[col][t];
      }
    }
  }
  pivot_inverse_ = std::move(inv);
}

const Basis& Basis::get(int g, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Basis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(g, r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Basis>(new Basis(g, r))).first;
  return *it->second;
}

std::optional<std::vector<Rat>> Basis::extract(const Form& f) const {
  int d = dim();
  std::vector<GaussianRational> rhs(d);
  for (int p = 0; p < d; ++p) rhs[p] = f.coeff(pivots_[p]);
  std::vector<GaussianRational> x(d);
  for (int e = 0; e < d; ++e) {
    GaussianRational acc;
    for (int p = 0; p < d; ++p) acc += pivot_inverse_[e][p] * rhs[p];
    x[e] = acc;
  }
  // Exact residual check: reject anything outside the span.
  Form rebuilt(f.dim());
  for (int e = 0; e < d; ++e) rebuilt = rebuilt + forms_[e].scaled(x[e]);
  if (!(rebuilt == f)) return std::nullopt;
  std::vector<Rat> out(d);
  for (int e = 0; e < d; ++e) {
    if (!x[e].is_real()) return std::nullopt;
    out[e] = x[e].re;
  }
  return out;
}

CanonicalClass::CanonicalClass(int g, int degree) : g_(g), degree_(degree) {
  if (degree <= 2 * g) coeffs_.assign(Basis::get(g, degree).dim(), Rat(0));
}

CanonicalClass::CanonicalClass(int g, int degree, std::vector<Rat> coeffs)
    : g_(g), degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree > 2 * g) fail(ErrorCode::Degree, "degree beyond top");
  if (static_cast<int>(coeffs_.size()) != Basis::get(g, degree).dim())
    fail(ErrorCode::Argument, "coefficient count does not match basis dimension");
}

CanonicalClass CanonicalClass::beyond_top(int g, int degree) {
  CanonicalClass c(g, 0);
  c.degree_ = degree;
  c.coeffs_.clear();
  return c;
}

CanonicalClass CanonicalClass::from_form(int g, int degree, const Form& f) {
  auto coords = Basis::get(g, degree).extract(f);
  if (!coords)
    fail(ErrorCode::Representation, "form is not in the canonical degree-" +
                                        std::to_string(degree) + " span");
  return CanonicalClass(g, degree, std::move(*coords));
}

CanonicalClass CanonicalClass::monomial(int g, const Monomial& m, const Rat& c) {
  const Basis& basis = Basis::get(g, m.degree());
  CanonicalClass out(g, m.degree());
  for (int e = 0; e < basis.dim(); ++e)
    if (basis.monomials()[e] == m) {
      // The basis element carries a scale (top degree): c * m = (c/scale) * element.
      out.coeffs_[e] = c / basis.scale(e);
      return out;
    }
  // Dependent monomial: expand through the exterior model.
  return from_form(g, m.degree(), expand_monomial(g, m).scaled(c));
}

bool CanonicalClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rat CanonicalClass::coeff(const Monomial& m) const {
  const Basis& basis = Basis::get(g_, degree_);
  for (int e = 0; e < basis.dim(); ++e)
    if (basis.monomials()[e] == m) return coeffs_[e];
  fail(ErrorCode::Argument, "monomial " + m.str() + " is not a basis element");
}

Rat CanonicalClass::top_value() const {
  if (degree_ != 2 * g_) fail(ErrorCode::Degree, "top_value requires degree 2g");
  return coeffs_[0];
}

Form CanonicalClass::to_form() const {
  const Basis& basis = Basis::get(g_, degree_);
  Form out(2 * g_);
  for (int e = 0; e < basis.dim(); ++e) out = out + basis.form(e).scaled(coeffs_[e]);
  return out;
}

CanonicalClass CanonicalClass::operator+(const CanonicalClass& o) const {
  if (g_ != o.g_) fail(ErrorCode::Dimension, "g mismatch");
  if (degree_ != o.degree_) fail(ErrorCode::Degree, "degree mismatch");
  CanonicalClass out = *this;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) out.coeffs_[e] += o.coeffs_[e];
  return out;
}

CanonicalClass CanonicalClass::operator-(const CanonicalClass& o) const {
  return *this + o.scaled(Rat(-1));
}

CanonicalClass CanonicalClass::scaled(const Rat& c) const {
  CanonicalClass out = *this;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

bool operator==(const CanonicalClass& a, const CanonicalClass& b) {
  return a.g_ == b.g_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

CanonicalClass mul(const CanonicalClass& x, const CanonicalClass& y) {
  if (x.g() != y.g()) fail(ErrorCode::Dimension, "g mismatch");
  int g = x.g();
  int degree = x.degree() + y.degree();
  if (x.beyond_top_degree() || y.beyond_top_degree() || degree > 2 * g)
    return CanonicalClass::beyond_top(g, degree);
  Form prod = x.to_form().wedge(y.to_form());
  return CanonicalClass::from_form(g, degree, prod);
}

CanonicalClass theta1(int g) { return CanonicalClass::monomial(g, {1, 0, 0}); }
CanonicalClass theta2(int g) { return CanonicalClass::monomial(g, {0, 1, 0}); }
CanonicalClass lambda(int g) { return CanonicalClass::monomial(g, {0, 0, 1}); }

CanonicalClass theta_ab(int g, const Rat& a, const Rat& b) {
  return theta1(g).scaled(a * a) + theta2(g).scaled(b * b) + lambda(g).scaled(a * b);
}

CanonicalClass mu_t(int g, const Rat& t) {
  return CanonicalClass::monomial(g, {1, 1, 0}, Rat(4)) + CanonicalClass::monomial(g, {0, 0, 2}, t);
}

CanonicalClass gl2_act(const Gl2Matrix& m, const CanonicalClass& x) {
  if (x.beyond_top_degree()) return x;
  int g = x.g();
  CanonicalClass img1 = theta1(g).scaled(m.a * m.a) + theta2(g).scaled(m.b * m.b) +
                        lambda(g).scaled(m.a * m.b);
  CanonicalClass img2 = theta1(g).scaled(m.c * m.c) + theta2(g).scaled(m.d * m.d) +
                        lambda(g).scaled(m.c * m.d);
  CanonicalClass imgl = theta1(g).scaled(2 * m.a * m.c) + theta2(g).scaled(2 * m.b * m.d) +
                        lambda(g).scaled(m.a * m.d + m.b * m.c);
  const Basis& basis = Basis::get(g, x.degree());
  CanonicalClass out(g, x.degree());
  for (int e = 0; e < basis.dim(); ++e) {
    const Rat& c = x.coeffs()[e];
    if (c == 0) continue;
    const Monomial& mono = basis.monomials()[e];
    CanonicalClass term(g, 0, {c * basis.scale(e)});
    for (int t = 0; t < mono.i; ++t) term = mul(term, img1);
    for (int t = 0; t < mono.j; ++t) term = mul(term, img2);
    for (int t = 0; t < mono.k; ++t) term = mul(term, imgl);
    out = out + term;
  }
  return out;
}

int expected_dim(int g, int r) {
  int s = r <= g ? r : 2 * g - r;
  return (s + 1) * (s + 2) / 2;
}

bool RelationReport::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

RelationReport verify_relations(int g) {
  if (g < 1 || g > 4) fail(ErrorCode::Unsupported, "verify_relations supports 1 <= g <= 4");
  using exterior::wedge_pow;
  RelationReport report;
  auto add = [&report](std::string name, bool pass) {
    report.items.push_back({std::move(name), pass});
  };

  Form t1 = exterior::canonical_form(g, CanonicalKind::Theta1);
  Form t2 = exterior::canonical_form(g, CanonicalKind::Theta2);
  Form la = exterior::canonical_form(g, CanonicalKind::Lambda);

  add("theta1^(g+1) = 0", wedge_pow(t1, g + 1).is_zero());
  add("theta2^(g+1) = 0", wedge_pow(t2, g + 1).is_zero());
  add("theta1^g*lambda = 0", wedge_pow(t1, g).wedge(la).is_zero());
  add("theta2^g*lambda = 0", wedge_pow(t2, g).wedge(la).is_zero());

  Rng rng(0x5eedULL + static_cast<std::uint64_t>(g));
  bool rel_ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    Rat a = rng.rational(6, 3), b = rng.rational(6, 3);
    Form tab = t1.scaled(a * a) + t2.scaled(b * b) + la.scaled(a * b);
    if (!wedge_pow(tab, g + 1).is_zero()) rel_ok = false;
  }
  add("(a^2*theta1+b^2*theta2+ab*lambda)^(g+1) = 0", rel_ok);

  Form mu = t1.wedge(t2).scaled(Rat(4)) - la.wedge(la);
  Form mug1 = wedge_pow(mu, g - 1);
  add("mu^(g-1)*theta1^2 = 0", mug1.wedge(t1).wedge(t1).is_zero());
  add("mu^(g-1)*theta2^2 = 0", mug1.wedge(t2).wedge(t2).is_zero());
  add("mu^(g-1)*theta1*lambda = 0", mug1.wedge(t1).wedge(la).is_zero());
  add("mu^(g-1)*theta2*lambda = 0", mug1.wedge(t2).wedge(la).is_zero());
  add("mu^(g-1)*(lambda^2+2*theta1*theta2) = 0",
      mug1.wedge(la.wedge(la) + t1.wedge(t2).scaled(Rat(2))).is_zero());

  Rat fact(1);
  for (int m = 2; m <= 2 * g; ++m) fact *= m;
  Rat expected = (g % 2 == 0) ? fact : Rat(-fact);
  add("lambda^(2g) = (-1)^g*(2g)!", exterior::top_scalar(wedge_pow(la, 2 * g)) == expected);

  bool dims_ok = true;
  for (int r = 0; r <= 2 * g; ++r)
    if (Basis::get(g, r).dim() != expected_dim(g, r)) dims_ok = false;
  add("graded dimensions", dims_ok);

  return report;
}

std::vector<std::vector<Rat>> pairing_matrix(int g, int r) {
  const Basis& br = Basis::get(g, r);
  const Basis& bc = Basis::get(g, 2 * g - r);
  std::vector<std::vector<Rat>> out(br.dim(), std::vector<Rat>(bc.dim()));
  for (int e = 0; e < br.dim(); ++e) {
    CanonicalClass x(g, r);
    {
      std::vector<Rat> coords(br.dim(), Rat(0));
      coords[e] = 1;
      x = CanonicalClass(g, r, std::move(coords));
    }
    for (int f = 0; f < bc.dim(); ++f) {
      std::vector<Rat> coords(bc.dim(), Rat(0));
      coords[f] = 1;
      CanonicalClass y(g, 2 * g - r, std::move(coords));
      out[e][f] = mul(x, y).top_value();
    }
  }
  return out;
}

}  // namespace abelcone::canring
