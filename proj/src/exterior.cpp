#include "exterior.hpp"

namespace abelcone::exterior {

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Parity of inversions when placing each element of b into a.
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int bit = __builtin_ctz(bb);
    bb &= bb - 1;
    Mask higher = a & ~((bit == 31 ? 0u : (2u << bit)) - 1u);
    inversions += card(higher);
  }
  return (inversions & 1) ? -1 : 1;
}

Form Form::monomial(int n, MultiIndex idx, GaussianRational c) {
  Form f(n);
  Mask full = n == 32 ? ~0u : ((1u << n) - 1u);
  if ((idx.holo | idx.anti) & ~full)
    fail(ErrorCode::Dimension, "multi-index exceeds ambient dimension");
  if (!c.is_zero()) f.terms_.emplace(idx, std::move(c));
  return f;
}

GaussianRational Form::coeff(MultiIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? GaussianRational() : it->second;
}

bool Form::is_homogeneous(int p, int q) const {
  for (const auto& [idx, c] : terms_)
    if (card(idx.holo) != p || card(idx.anti) != q) return false;
  return true;
}

Form Form::component(int p, int q) const {
  Form out(n_);
  for (const auto& [idx, c] : terms_)
    if (card(idx.holo) == p && card(idx.anti) == q) out.terms_.emplace(idx, c);
  return out;
}

void Form::add_term(MultiIndex idx, const GaussianRational& c) {
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  if (n_ != o.n_) fail(ErrorCode::Dimension, "form dimensions differ");
  Form out = *this;
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
  return out;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
  Form out(n_);
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

Form Form::scaled(const GaussianRational& c) const {
  Form out(n_);
  if (c.is_zero()) return out;
  for (const auto& [idx, v] : terms_) out.terms_.emplace(idx, v * c);
  return out;
}

Form Form::wedge(const Form& o) const {
  if (n_ != o.n_) fail(ErrorCode::Dimension, "form dimensions differ");
  Form out(n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      if ((a.holo & b.holo) || (a.anti & b.anti)) continue;
      int sh = merge_sign(a.holo, b.holo);
      int sa = merge_sign(a.anti, b.anti);
      // Moving b's holomorphic block left past a's antiholomorphic block.
      int cross = (card(a.anti) * card(b.holo)) & 1 ? -1 : 1;
      int s = sh * sa * cross;
      GaussianRational c = ca * cb;
      if (s < 0) c = -c;
      out.add_term({static_cast<Mask>(a.holo | b.holo), static_cast<Mask>(a.anti | b.anti)}, c);
    }
  }
  return out;
}

Form Form::conjugate() const {
  Form out(n_);
  for (const auto& [idx, c] : terms_) {
    // conj(c dz_I∧dzbar_J) = conj(c) dzbar_I∧dz_J = conj(c)(-1)^{|I||J|} dz_J∧dzbar_I.
    int s = (card(idx.holo) * card(idx.anti)) & 1 ? -1 : 1;
    GaussianRational c2 = c.conj();
    if (s < 0) c2 = -c2;
    out.add_term({idx.anti, idx.holo}, c2);
  }
  return out;
}

Form Form::pullback(const std::vector<std::vector<GaussianRational>>& m) const {
  if (static_cast<int>(m.size()) != n_)
    fail(ErrorCode::Dimension, "substitution matrix size mismatch");
  std::vector<Form> dz, dzbar;
  dz.reserve(n_);
  dzbar.reserve(n_);
  for (int j = 0; j < n_; ++j) {
    Form fz(n_), fzb(n_);
    for (int k = 0; k < n_; ++k) {
      Mask bit = 1u << k;
      fz = fz + Form::monomial(n_, {bit, 0}, m[j][k]);
      fzb = fzb + Form::monomial(n_, {0, bit}, m[j][k].conj());
    }
    dz.push_back(fz);
    dzbar.push_back(fzb);
  }
  Form out(n_);
  for (const auto& [idx, c] : terms_) {
    Form term = Form::monomial(n_, {0, 0}, c);
    for (int j = 0; j < n_; ++j)
      if (idx.holo & (1u << j)) term = term.wedge(dz[j]);
    for (int j = 0; j < n_; ++j)
      if (idx.anti & (1u << j)) term = term.wedge(dzbar[j]);
    out = out + term;
  }
  return out;
}

bool Form::is_real_kk(int k) const {
  if (!is_homogeneous(k, k)) return false;
  int s = (k & 1) ? -1 : 1;
  for (const auto& [idx, c] : terms_) {
    GaussianRational want = c.conj();
    if (s < 0) want = -want;
    if (coeff({idx.anti, idx.holo}) != want) return false;
  }
  return true;
}

Form wedge_pow(const Form& f, int e) {
  if (e < 0) fail(ErrorCode::Argument, "negative wedge power");
  Form out = Form::monomial(f.dim(), {0, 0}, GaussianRational(Rat(1)));
  for (int i = 0; i < e; ++i) out = out.wedge(f);
  return out;
}

Form omega0(int n) {
  Form out = Form::monomial(n, {0, 0}, GaussianRational(Rat(1)));
  for (int j = 0; j < n; ++j) {
    Mask bit = 1u << j;
    out = out.wedge(Form::monomial(n, {bit, bit}, GaussianRational::i()));
  }
  return out;
}

Rat top_scalar(const Form& f) {
  int n = f.dim();
  Mask full = (1u << n) - 1u;
  if (f.is_zero()) return Rat(0);
  if (f.terms().size() != 1) fail(ErrorCode::Degree, "top_scalar requires a top-degree form");
  const auto& [idx, c] = *f.terms().begin();
  if (idx.holo != full || idx.anti != full)
    fail(ErrorCode::Degree, "top_scalar requires a top-degree form");
  GaussianRational w0 = omega0(n).coeff({full, full});
  GaussianRational ratio = c / w0;
  if (!ratio.is_real()) fail(ErrorCode::Degree, "top coefficient is not real");
  return ratio.re;
}

Form canonical_form(int g, CanonicalKind kind) {
  if (g < 1) fail(ErrorCode::Argument, "g must be >= 1");
  int n = 2 * g;
  Form out(n);
  GaussianRational i = GaussianRational::i();
  switch (kind) {
    case CanonicalKind::Theta1:
      for (int j = 0; j < g; ++j) {
        Mask b = 1u << j;
        out = out + Form::monomial(n, {b, b}, i);
      }
      break;
    case CanonicalKind::Theta2:
      for (int j = g; j < n; ++j) {
        Mask b = 1u << j;
        out = out + Form::monomial(n, {b, b}, i);
      }
      break;
    case CanonicalKind::Lambda:
      for (int j = 0; j < g; ++j) {
        Mask b1 = 1u << j, b2 = 1u << (g + j);
        out = out + Form::monomial(n, {b1, b2}, i);
        out = out + Form::monomial(n, {b2, b1}, i);
      }
      break;
  }
  return out;
}

std::vector<Mask> subsets_lex(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (k == 0) out = {0u};
  return out;
}

}  // namespace abelcone::exterior
