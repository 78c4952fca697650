#include "hermitian.hpp"

namespace abelcone::herm {

using exterior::Mask;

HermitianMatrix::HermitianMatrix(std::vector<std::vector<GaussianRational>> entries)
    : a_(std::move(entries)) {
  std::size_t n = a_.size();
  for (const auto& row : a_)
    if (row.size() != n) fail(ErrorCode::Argument, "matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a_[j][i] != a_[i][j].conj()) fail(ErrorCode::Argument, "matrix is not Hermitian");
}

Rat HermitianMatrix::quad_form(const std::vector<GaussianRational>& v) const {
  if (static_cast<int>(v.size()) != dim()) fail(ErrorCode::Dimension, "vector length mismatch");
  GaussianRational acc;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) acc += v[i].conj() * a_[i][j] * v[j];
  if (!acc.is_real()) fail(ErrorCode::Internal, "Hermitian quadratic form must be real");
  return acc.re;
}

HermitianMatrix hermitian_of_form(const Form& f, int k) {
  int n = f.dim();
  if (!f.is_homogeneous(k, k)) fail(ErrorCode::Degree, "form is not of bidegree (k,k)");
  auto basis = exterior::subsets_lex(n, k);
  GaussianRational phase = i_power(-static_cast<long>(k) * k);
  std::vector<std::vector<GaussianRational>> m(basis.size(),
                                               std::vector<GaussianRational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m[i][j] = phase * f.coeff({basis[i], basis[j]});
  return HermitianMatrix(std::move(m));
}

std::vector<Rat> char_poly(const HermitianMatrix& h) {
  int n = h.dim();
  // M_1 = H, c_{n-1} = -tr(M_1); M_{k+1} = H (M_k + c_{n-k} I).
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  std::vector<std::vector<GaussianRational>> m = h.entries();
  for (int step = 1; step <= n; ++step) {
    GaussianRational tr;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    if (!tr.is_real()) fail(ErrorCode::Internal, "characteristic polynomial must be real");
    c[n - step] = -tr.re / step;
    if (step == n) break;
    for (int i = 0; i < n; ++i) m[i][i] += GaussianRational(c[n - step]);
    std::vector<std::vector<GaussianRational>> next(n, std::vector<GaussianRational>(n));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (h.at(i, l).is_zero()) continue;
        for (int j = 0; j < n; ++j) next[i][j] += h.at(i, l) * m[l][j];
      }
    m = std::move(next);
  }
  return c;
}

std::vector<Rat> char_poly_berkowitz(const HermitianMatrix& h) {
  int n = h.dim();
  // Berkowitz vectors: iteratively combine principal submatrix data; entirely
  // division-free.
  std::vector<GaussianRational> v{GaussianRational(Rat(1))};
  for (int k = 0; k < n; ++k) {
    // Toeplitz column for the leading (k+1)x(k+1) principal submatrix.
    // col[0] = 1 (degree shift), col[1] = -a_kk, col[j] = -(R A^{j-2} C).
    int rows = k;  // indices 0..k-1
    std::vector<GaussianRational> col(k + 2);
    col[0] = GaussianRational(Rat(1));
    col[1] = -h.at(k, k);
    if (rows > 0) {
      std::vector<GaussianRational> w(rows);
      for (int i = 0; i < rows; ++i) w[i] = h.at(i, k);  // C
      for (int j = 2; j <= k + 1; ++j) {
        GaussianRational dot;
        for (int i = 0; i < rows; ++i) dot += h.at(k, i) * w[i];  // R * w
        col[j] = -dot;
        if (j == k + 1) break;
        std::vector<GaussianRational> next(rows);
        for (int i = 0; i < rows; ++i) {
          GaussianRational acc;
          for (int l = 0; l < rows; ++l) acc += h.at(i, l) * w[l];
          next[i] = acc;
        }
        w = std::move(next);
      }
    }
    // v := Toeplitz(col) * v
    std::vector<GaussianRational> next(v.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      GaussianRational acc;
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) {
        std::size_t shift = i - j;
        if (shift < col.size()) acc += col[shift] * v[j];
      }
      next[i] = acc;
    }
    v = std::move(next);
  }
  // v holds the characteristic polynomial coefficients from t^n downward.
  std::vector<Rat> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (!v[i].is_real()) fail(ErrorCode::Internal, "characteristic polynomial must be real");
    c[n - i] = v[i].re;
  }
  return c;
}

namespace {

// Exact negative-direction search by recursive congruence pivoting.
std::optional<std::vector<GaussianRational>> negative_direction(
    std::vector<std::vector<GaussianRational>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return std::nullopt;

  for (int i = 0; i < n; ++i)
    if (m[i][i].re < 0) {
      std::vector<GaussianRational> v(n);
      v[i] = GaussianRational(Rat(1));
      return v;
    }

  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (!m[i][i].is_zero()) {
      pivot = i;
      break;
    }

  if (pivot < 0) {
    // Zero diagonal: any nonzero off-diagonal entry gives a negative direction
    // via v = -H_jk e_j + e_k.
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (j != k && !m[j][k].is_zero()) {
          std::vector<GaussianRational> v(n);
          v[j] = -m[j][k];
          v[k] = GaussianRational(Rat(1));
          return v;
        }
    return std::nullopt;  // zero matrix
  }

  // Split off the pivot: for w on the complement, extend by
  // v_p = -(sum_b H_pb w_b) / H_pp so that v* H v = w* (Schur complement) w.
  GaussianRational d = m[pivot][pivot];
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != pivot) rest.push_back(i);
  std::vector<std::vector<GaussianRational>> schur(rest.size(),
                                                   std::vector<GaussianRational>(rest.size()));
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = 0; b < rest.size(); ++b)
      schur[a][b] = m[rest[a]][rest[b]] - m[rest[a]][pivot] * m[pivot][rest[b]] / d;
  auto sub = negative_direction(std::move(schur));
  if (!sub) return std::nullopt;
  std::vector<GaussianRational> v(n);
  GaussianRational dot;
  for (std::size_t b = 0; b < rest.size(); ++b) {
    v[rest[b]] = (*sub)[b];
    dot += m[pivot][rest[b]] * (*sub)[b];
  }
  v[pivot] = -(dot / d);
  return v;
}

}  // namespace

PsdDecision decide_psd(const HermitianMatrix& h) {
  PsdDecision out;
  int n = h.dim();
  std::vector<Rat> c = char_poly(h);
  out.sym_coeffs.resize(n + 1);
  bool psd = true;
  for (int m = 0; m <= n; ++m) {
    // det(tI-H) = sum_m (-1)^m e_m t^{n-m} => e_m = (-1)^m c_{n-m}.
    out.sym_coeffs[m] = (m % 2 == 0) ? c[n - m] : Rat(-c[n - m]);
    if (out.sym_coeffs[m] < 0) psd = false;
  }
  out.psd = psd;
  if (!psd) {
    auto v = negative_direction(h.entries());
    if (!v) fail(ErrorCode::Internal, "non-PSD matrix must have a negative direction");
    out.witness_value = h.quad_form(*v);
    if (!(out.witness_value < 0))
      fail(ErrorCode::Internal, "negative direction failed to certify");
    out.witness = std::move(*v);
  }
  return out;
}

}  // namespace abelcone::herm
