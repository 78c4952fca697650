#include "fourier.hpp"

#include "exterior.hpp"

namespace abelcone::fourier {

namespace {

Rat factorial(int m) {
  Rat f(1);
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

CohClass::CohClass(int n) : n_(n) {
  if (n < 1 || n > 8) fail(ErrorCode::Dimension, "variety dimension out of range");
}

CohClass CohClass::unit(int n) { return monomial(n, 0u); }

CohClass CohClass::point(int n) { return monomial(n, (1u << (2 * n)) - 1u); }

CohClass CohClass::monomial(int n, std::uint32_t mask, const Rat& c) {
  CohClass out(n);
  if (mask & ~((1u << (2 * n)) - 1u)) fail(ErrorCode::Dimension, "monomial out of range");
  if (c != 0) out.terms_.emplace(mask, c);
  return out;
}

Rat CohClass::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool CohClass::is_homogeneous(int d) const {
  for (const auto& [mask, c] : terms_)
    if (__builtin_popcount(mask) != d) return false;
  return true;
}

int CohClass::degree() const {
  if (terms_.empty()) fail(ErrorCode::Degree, "zero class has no degree");
  int d = __builtin_popcount(terms_.begin()->first);
  if (!is_homogeneous(d)) fail(ErrorCode::Degree, "class is not homogeneous");
  return d;
}

void CohClass::add_term(std::uint32_t mask, const Rat& c) {
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass CohClass::operator+(const CohClass& o) const {
  if (n_ != o.n_) fail(ErrorCode::Dimension, "dimension mismatch");
  CohClass out = *this;
  for (const auto& [mask, c] : o.terms_) out.add_term(mask, c);
  return out;
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + o.scaled(Rat(-1)); }

CohClass CohClass::scaled(const Rat& c) const {
  CohClass out(n_);
  if (c == 0) return out;
  for (const auto& [mask, v] : terms_) out.terms_.emplace(mask, v * c);
  return out;
}

CohClass CohClass::wedge(const CohClass& o) const {
  if (n_ != o.n_) fail(ErrorCode::Dimension, "dimension mismatch");
  CohClass out(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      int s = exterior::merge_sign(a, b);
      if (s == 0) continue;
      out.add_term(a | b, s > 0 ? Rat(ca * cb) : Rat(-ca * cb));
    }
  return out;
}

CohClass CohClass::wedge_pow(int e) const {
  if (e < 0) fail(ErrorCode::Argument, "negative power");
  CohClass out = unit(n_);
  for (int i = 0; i < e; ++i) out = out.wedge(*this);
  return out;
}

CohClass poincare_dual(const CohClass& x) {
  std::uint32_t full = (1u << (2 * x.n())) - 1u;
  CohClass out(x.n());
  for (const auto& [mask, c] : x.terms()) {
    std::uint32_t comp = full & ~mask;
    int s = exterior::merge_sign(mask, comp);
    out = out + CohClass::monomial(x.n(), comp, s > 0 ? c : Rat(-c));
  }
  return out;
}

CohClass poincare_dual_inv(const CohClass& x) {
  std::uint32_t full = (1u << (2 * x.n())) - 1u;
  CohClass out(x.n());
  for (const auto& [mask, c] : x.terms()) {
    std::uint32_t comp = full & ~mask;
    int s = exterior::merge_sign(comp, mask);
    out = out + CohClass::monomial(x.n(), comp, s > 0 ? c : Rat(-c));
  }
  return out;
}

CohClass fourier_d(const CohClass& x) { return poincare_dual(x); }

CohClass fourier_d_inv(const CohClass& x) { return poincare_dual_inv(x); }

CohClass pontryagin(const CohClass& x, const CohClass& y) {
  return fourier_d_inv(fourier_d(x).wedge(fourier_d(y)));
}

CohClass pontryagin_pow(const CohClass& x, int m) {
  if (m < 0) fail(ErrorCode::Argument, "negative power");
  CohClass out = CohClass::point(x.n());
  for (int i = 0; i < m; ++i) out = pontryagin(out, x);
  return out;
}

bool check_prodform(int n, int k, const CohClass& alpha) {
  if (k < 0 || k > n) fail(ErrorCode::Argument, "require 0 <= k <= n");
  if (n > 4) fail(ErrorCode::Unsupported, "supported up to n = 4");
  if (alpha.n() != n) fail(ErrorCode::Dimension, "class dimension mismatch");
  if (!alpha.is_homogeneous(2)) fail(ErrorCode::Degree, "alpha must be a degree-2 class");

  std::uint32_t full = (1u << (2 * n)) - 1u;
  Rat constant = factorial(n - k) / factorial(k);
  for (int i = 0; i < n - k; ++i) constant *= factorial(n - 1);

  // (a) with the cup power of alpha.
  {
    CohClass lhs = pontryagin_pow(alpha.wedge_pow(n - 1), n - k);
    Rat d_val = alpha.wedge_pow(n).coeff(full) / factorial(n);
    if (k == n) {
      if (d_val != 0 && !(lhs == CohClass::point(n))) return false;
    } else {
      Rat scale = constant;
      for (int i = 0; i < n - k - 1; ++i) scale *= d_val;
      if (!(lhs == alpha.wedge_pow(k).scaled(scale))) return false;
    }
  }

  // (b) for beta = alpha^{n-1}, with Pontryagin powers of beta.
  {
    CohClass beta = alpha.wedge_pow(n - 1);
    CohClass lhs = pontryagin_pow(beta, n - 1).wedge_pow(n - k);
    Rat d_val = pontryagin_pow(beta, n).coeff(0u) / factorial(n);
    if (k == n) {
      if (d_val != 0 && !(lhs == CohClass::unit(n))) return false;
    } else {
      Rat scale = constant;
      for (int i = 0; i < n - k - 1; ++i) scale *= d_val;
      if (!(lhs == pontryagin_pow(beta, k).scaled(scale))) return false;
    }
  }
  return true;
}

}  // namespace abelcone::fourier
