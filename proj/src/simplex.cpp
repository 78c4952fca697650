#include "simplex.hpp"

#include <cmath>

namespace abelcone::lp {

namespace {

// Tableau-based phase-1: minimize the sum of artificial variables.
// Columns 0..n-1 are structural, n..n+m-1 artificial.
std::optional<std::vector<Rat>> phase1(const std::vector<std::vector<Rat>>& a_in,
                                       const std::vector<Rat>& b_in) {
  std::size_t m = a_in.size();
  if (m == 0) return std::vector<Rat>{};
  std::size_t n = a_in[0].size();

  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    int flip = b_in[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flip * a_in[r][c];
    t[r][n + r] = 1;
    t[r][n + m] = flip * b_in[r];
    basis[r] = n + r;
  }

  // Reduced objective row for min sum(artificials): z_j - c_j over current basis.
  std::vector<Rat> obj(n + m + 1, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= n + m; ++c) obj[c] += t[r][c];
  for (std::size_t r = 0; r < m; ++r) obj[n + r] -= 1;  // artificial costs

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    Rat inv = Rat(1) / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      Rat f = t[r][pc];
      for (std::size_t c = 0; c <= n + m; ++c) t[r][c] -= f * t[pr][c];
    }
    if (obj[pc] != 0) {
      Rat f = obj[pc];
      for (std::size_t c = 0; c <= n + m; ++c) obj[c] -= f * t[pr][c];
    }
    basis[pr] = pc;
  };

  for (;;) {
    // Bland: smallest index with positive reduced value.
    std::size_t pc = n + m;
    for (std::size_t c = 0; c < n + m; ++c)
      if (obj[c] > 0) {
        pc = c;
        break;
      }
    if (pc == n + m) break;
    // Ratio test, ties by smallest basis index (Bland).
    std::size_t pr = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][pc] <= 0) continue;
      if (pr == m) {
        pr = r;
        continue;
      }
      Rat lhs = t[r][n + m] * t[pr][pc];
      Rat rhs = t[pr][n + m] * t[r][pc];
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[pr])) pr = r;
    }
    if (pr == m) fail(ErrorCode::Internal, "phase-1 objective unbounded");
    pivot(pr, pc);
  }

  if (obj[n + m] != 0) return std::nullopt;  // residual artificial value

  // Drive any residual zero-valued artificials out of the basis.
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) continue;
    std::size_t pc = n;
    for (std::size_t c = 0; c < n; ++c)
      if (t[r][c] != 0) {
        pc = c;
        break;
      }
    if (pc < n)
      pivot(r, pc);
    // Otherwise the row is redundant; the artificial stays basic at value 0.
  }

  std::vector<Rat> x(n, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) x[basis[r]] = t[r][n + m];
  return x;
}

}  // namespace

std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& a,
                                               const std::vector<Rat>& b) {
  if (a.size() != b.size()) fail(ErrorCode::Dimension, "row count mismatch");
  return phase1(a, b);
}

std::optional<std::vector<Rat>> feasible_point_float_first(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  // Double-precision phase-1 to guess the support.
  std::size_t m = a.size();
  if (m == 0) return std::vector<Rat>{};
  std::size_t n = a[0].size();
  std::vector<std::vector<double>> t(m, std::vector<double>(n + m + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    double flip = rat_to_double(b[r]) < 0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flip * rat_to_double(a[r][c]);
    t[r][n + r] = 1.0;
    t[r][n + m] = flip * rat_to_double(b[r]);
    basis[r] = n + r;
  }
  std::vector<double> obj(n + m + 1, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= n + m; ++c) obj[c] += t[r][c];
  for (std::size_t r = 0; r < m; ++r) obj[n + r] -= 1.0;

  const double eps = 1e-9;
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t pc = n + m;
    double best = eps;
    for (std::size_t c = 0; c < n + m; ++c)
      if (obj[c] > best) {
        best = obj[c];
        pc = c;
      }
    if (pc == n + m) break;
    std::size_t pr = m;
    double best_ratio = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][pc] <= eps) continue;
      double ratio = t[r][n + m] / t[r][pc];
      if (pr == m || ratio < best_ratio) {
        pr = r;
        best_ratio = ratio;
      }
    }
    if (pr == m) break;
    double inv = 1.0 / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr || std::fabs(t[r][pc]) < 1e-14) continue;
      double f = t[r][pc];
      for (std::size_t c = 0; c <= n + m; ++c) t[r][c] -= f * t[pr][c];
    }
    double f = obj[pc];
    for (std::size_t c = 0; c <= n + m; ++c) obj[c] -= f * t[pr][c];
    basis[pr] = pc;
  }

  std::vector<std::size_t> support;
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) support.push_back(basis[r]);

  if (!support.empty()) {
    std::vector<std::vector<Rat>> sub(m, std::vector<Rat>(support.size()));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < support.size(); ++c) sub[r][c] = a[r][support[c]];
    if (auto xs = feasible_point(sub, b)) {
      std::vector<Rat> x(n, Rat(0));
      for (std::size_t c = 0; c < support.size(); ++c) x[support[c]] = (*xs)[c];
      return x;
    }
  }
  return feasible_point(a, b);
}

}  // namespace abelcone::lp
