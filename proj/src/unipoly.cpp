#include "unipoly.hpp"

#include <algorithm>

namespace abelcone::poly {

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::lead() const {
  if (c_.empty()) fail(ErrorCode::Argument, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(Rat(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rat& s) const {
  std::vector<Rat> out = c_;
  for (auto& v : out) v *= s;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / lead());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& o) const {
  if (o.is_zero()) fail(ErrorCode::Argument, "polynomial division by zero");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quot;
  int dq = static_cast<int>(rem.size()) - static_cast<int>(o.c_.size());
  if (dq < 0) return {UniPoly(), *this};
  quot.assign(dq + 1, Rat(0));
  for (int i = dq; i >= 0; --i) {
    if (rem.size() < o.c_.size() + i) continue;
    Rat f = rem[o.c_.size() - 1 + i] / o.c_.back();
    quot[i] = f;
    for (std::size_t j = 0; j < o.c_.size(); ++j) rem[i + j] -= f * o.c_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += rat_str(c_[i]);
    if (i > 0) s += "*b^" + std::to_string(i);
  }
  return s;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() <= 0) return factors;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = f.divmod(a).first;
  UniPoly c = fp.divmod(a).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly q = gcd(b, d);
    factors.push_back(q);
    b = b.divmod(q).first;
    c = d.divmod(q).first;
    d = c - b.derivative();
  }
  return factors;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

Rat cauchy_root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rat(1);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, rat_abs(p.coeff(i)));
  return Rat(1) + m / rat_abs(p.lead());
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain[chain.size() - 1];
    UniPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(r.scaled(Rat(-1)));
  }
  return chain;
}

int sign_at(const UniPoly& p, const Rat& x) { return sign(p.eval(x)); }

// Sign at +inf (dir=+1) or -inf (dir=-1).
int sign_at_infinity(const UniPoly& p, int dir) {
  if (p.is_zero()) return 0;
  int s = sign(p.lead());
  if (dir < 0 && (p.degree() & 1)) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at(q, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_at_infinity(q, dir));
  return variations(signs);
}

}  // namespace

int count_real_roots(const UniPoly& p) {
  if (p.degree() <= 0) return 0;
  UniPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  auto chain = sturm_chain(s);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

int count_real_roots(const UniPoly& p, const Rat& a, const Rat& b) {
  if (p.degree() <= 0) return 0;
  UniPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  auto chain = sturm_chain(s);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& sf) {
  std::vector<std::pair<Rat, Rat>> out;
  if (sf.degree() <= 0) return out;
  auto chain = sturm_chain(sf);
  auto count_in = [&chain](const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
  };
  Rat bound = cauchy_root_bound(sf);
  struct Span {
    Rat a, b;
    int roots;
  };
  std::vector<Span> work{{-bound, bound, count_in(-bound, bound)}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    if (s.roots == 0) continue;
    if (s.roots == 1) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    int left = count_in(s.a, mid);
    work.push_back({mid, s.b, s.roots - left});
    work.push_back({s.a, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

namespace {

// Descartes sign-variation count of p((a*x + b) / (x + 1)) * (x+1)^deg,
// the classical bound on roots of p in the open interval (b, a)... arguments
// are passed as the interval (lo, hi).
int descartes_variations_on(const UniPoly& p, const Rat& lo, const Rat& hi) {
  // Map (0,1) -> (lo,hi): x = lo + (hi-lo)t, then t -> 1/(1+u), clear
  // denominators: coefficients of (1+u)^n p(lo + (hi-lo)/(1+u)).
  int n = p.degree();
  // q(t) = p(lo + (hi-lo) t).
  std::vector<Rat> q(n + 1, Rat(0));
  {
    // Horner with affine substitution.
    UniPoly t(std::vector<Rat>{lo, hi - lo});
    UniPoly acc = UniPoly::constant(p.coeff(n));
    for (int i = n - 1; i >= 0; --i) acc = acc * t + UniPoly::constant(p.coeff(i));
    for (int i = 0; i <= acc.degree(); ++i) q[i] = acc.coeff(i);
  }
  // r(u) = (1+u)^n q(1/(1+u)): r_k = sum_j q_j * C(n-j, k-?) ... do it directly:
  // (1+u)^n q(1/(1+u)) = sum_j q_j (1+u)^{n-j}.
  std::vector<Rat> r(n + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    if (q[j] == 0) continue;
    // binomials of (1+u)^{n-j}
    Rat binom(1);
    for (int k = 0; k <= n - j; ++k) {
      r[k] += q[j] * binom;
      binom = binom * Rat(n - j - k) / Rat(k + 1);
    }
  }
  std::vector<int> signs;
  signs.reserve(r.size());
  for (const auto& v : r) signs.push_back(sign(v));
  return variations(signs);
}

int descartes_count_on(const UniPoly& sf, const Rat& lo, const Rat& hi) {
  int count = 0;
  struct Span {
    Rat a, b;
  };
  std::vector<Span> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int v = descartes_variations_on(sf, a, b);
    if (v == 0) continue;
    if (v == 1) {
      ++count;
      continue;
    }
    Rat mid = (a + b) / 2;
    if (sf.eval(mid) == 0) ++count;
    work.push_back({a, mid});
    work.push_back({mid, b});
  }
  return count;
}

}  // namespace

int descartes_count_roots(const UniPoly& sf) {
  if (sf.degree() <= 0) return 0;
  Rat bound = cauchy_root_bound(sf);
  int count = descartes_count_on(sf, -bound, bound);
  if (sf.eval(-bound) == 0) ++count;  // interval is open on the left
  return count;
}

NonnegResult poly_nonneg(const UniPoly& p) {
  NonnegResult res;
  res.transcript.square_part = {Rat(1)};
  res.transcript.odd_part = {Rat(1)};
  res.transcript.content = p.is_zero() ? Rat(0) : p.coeff(0);

  if (p.is_zero()) {
    res.nonneg = true;
    res.transcript.nonneg = true;
    return res;
  }
  if (p.degree() == 0) {
    res.nonneg = p.coeff(0) >= 0;
    res.transcript.nonneg = res.nonneg;
    if (!res.nonneg) res.witness = Rat(0);
    return res;
  }

  Rat bound = cauchy_root_bound(p);
  auto negative_at = [&p](const Rat& x) { return p.eval(x) < 0; };

  if (p.degree() % 2 == 1 || p.lead() < 0) {
    // Dominant behavior is negative on one side.
    Rat x = (p.lead() > 0) ? Rat(-(bound + 1)) : Rat(bound + 1);
    if (!negative_at(x)) fail(ErrorCode::Internal, "root bound failed");
    res.nonneg = false;
    res.witness = x;
    res.transcript.nonneg = false;
    return res;
  }

  // Even degree, positive lead: p changes sign exactly at real roots of odd
  // multiplicity. Build p = content * S^2 * O via Yun.
  auto factors = squarefree_decomposition(p);
  UniPoly square = UniPoly::constant(Rat(1));
  UniPoly odd = UniPoly::constant(Rat(1));
  for (std::size_t e1 = 0; e1 < factors.size(); ++e1) {
    int mult = static_cast<int>(e1) + 1;
    for (int t = 0; t < mult / 2; ++t) square = square * factors[e1];
    if (mult % 2 == 1) odd = odd * factors[e1];
  }
  UniPoly rebuilt = square * square * odd;
  Rat content = p.lead() / rebuilt.lead();
  res.transcript.square_part = square.coeffs();
  res.transcript.odd_part = odd.coeffs();
  res.transcript.content = content;

  int roots = count_real_roots(odd);
  res.transcript.odd_part_real_roots = roots;
  if (roots == 0) {
    res.nonneg = true;
    res.transcript.nonneg = true;
    return res;
  }

  // A sign change exists; walk an isolating interval of a root of O down to a
  // rational point with p < 0. p flips sign at every real root of O, so points
  // just left or right of the root eventually evaluate negative.
  res.nonneg = false;
  res.transcript.nonneg = false;
  auto probe_around = [&negative_at](const Rat& center, Rat delta) -> std::optional<Rat> {
    for (int k = 0; k < 300; ++k) {
      if (negative_at(center - delta)) return Rat(center - delta);
      if (negative_at(center + delta)) return Rat(center + delta);
      delta /= 2;
    }
    return std::nullopt;
  };
  auto intervals = isolate_real_roots(odd);
  for (auto& [a, b] : intervals) {
    for (int iter = 0; iter < 80; ++iter) {
      if (negative_at(a)) {
        res.witness = a;
        return res;
      }
      if (negative_at(b)) {
        res.witness = b;
        return res;
      }
      Rat mid = (a + b) / 2;
      if (negative_at(mid)) {
        res.witness = mid;
        return res;
      }
      if (odd.eval(mid) == 0) {
        if (auto w = probe_around(mid, (b - a) / 4)) {
          res.witness = *w;
          return res;
        }
        break;
      }
      if (count_real_roots(odd, a, mid) >= 1)
        b = mid;
      else
        a = mid;
    }
    // The root is pinned inside a tiny interval (possibly at an endpoint).
    if (auto w = probe_around((a + b) / 2, b - a)) {
      res.witness = *w;
      return res;
    }
  }
  fail(ErrorCode::Internal, "sign change detected but no negative point found");
}

bool revalidate_nonneg(const UniPoly& p, const SturmTranscript& t) {
  if (p.is_zero()) return t.nonneg;
  if (p.degree() == 0) return t.nonneg == (p.coeff(0) >= 0);
  if (!t.nonneg) return true;  // negative verdicts are rechecked via their witness
  UniPoly square(std::vector<Rat>(t.square_part));
  UniPoly odd(std::vector<Rat>(t.odd_part));
  UniPoly rebuilt = (square * square * odd).scaled(t.content);
  if (!(rebuilt == p)) return false;
  if (p.degree() % 2 == 1 || p.lead() < 0) return false;
  if (t.content < 0) return false;
  return descartes_count_roots(odd) == 0;
}

}  // namespace abelcone::poly
