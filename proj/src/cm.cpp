#include "cm.hpp"

#include <cmath>

#include "hermitian.hpp"

namespace abelcone::cm {

using exterior::Mask;

CmOrder::CmOrder(long d) : d_(d) {
  if (d >= 0) fail(ErrorCode::Argument, "order radicand must be negative");
  half_ = (((d % 4) + 4) % 4) == 1;
}

OrderElem CmOrder::mul(const OrderElem& x, const OrderElem& y) const {
  if (!half_) {
    // omega^2 = D
    return {x.a * y.a + x.b * y.b * d_, x.a * y.b + x.b * y.a};
  }
  // omega^2 = omega + (D-1)/4
  Rat c = rat((d_ - 1) / 4);
  return {x.a * y.a + x.b * y.b * c, x.a * y.b + x.b * y.a + x.b * y.b};
}

OrderElem CmOrder::conj(const OrderElem& x) const {
  if (!half_) return {x.a, -x.b};
  return {x.a + x.b, -x.b};  // conj(omega) = 1 - omega
}

Rat CmOrder::norm(const OrderElem& x) const {
  OrderElem p = mul(x, conj(x));
  if (p.b != 0) fail(ErrorCode::Internal, "norm must be rational");
  return p.a;
}

bool CmOrder::is_integral(const OrderElem& x) const {
  return x.a.get_den() == 1 && x.b.get_den() == 1;
}

bool CmOrder::closed_under_multiplication() const {
  return is_integral(mul(omega(), omega()));
}

bool CmOrder::spans_plane() const {
  // omega has nonzero imaginary part exactly when D < 0.
  return d_ < 0;
}

bool CmOrder::embeds_in_gaussian() const {
  if (half_) return false;
  long m = std::lround(std::sqrt(static_cast<double>(-d_)));
  for (long c : {m - 1, m, m + 1})
    if (c > 0 && c * c == -d_) return true;
  return false;
}

GaussianRational CmOrder::embed(const OrderElem& x) const {
  if (!embeds_in_gaussian())
    fail(ErrorCode::Unsupported,
         "order does not embed in the Gaussian field; exact forms unavailable");
  long m = std::lround(std::sqrt(static_cast<double>(-d_)));
  return {x.a, x.b * m};  // omega = m*i
}

Form strong1_generator(const CmOrder& order, const std::vector<OrderElem>& s) {
  int n = static_cast<int>(s.size());
  if (n < 1) fail(ErrorCode::Argument, "need at least one coordinate");
  bool all_zero = true;
  for (const auto& e : s) all_zero = all_zero && e.is_zero();
  if (all_zero) fail(ErrorCode::Argument, "generator requires a nonzero tuple");

  std::vector<GaussianRational> c(n);
  for (int j = 0; j < n; ++j) c[j] = order.embed(s[j]);
  Form out(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      GaussianRational v = GaussianRational::i() * c[j] * c[k].conj();
      out = out + Form::monomial(n, {Mask(1u << j), Mask(1u << k)}, v);
    }
  return out;
}

KVector KVector::basis(int n, int k, Mask mask, GaussianRational c) {
  if (__builtin_popcount(mask) != k) fail(ErrorCode::Argument, "mask size must equal k");
  KVector v;
  v.n = n;
  v.k = k;
  if (!c.is_zero()) v.coords.emplace(mask, std::move(c));
  return v;
}

KVector KVector::operator+(const KVector& o) const {
  if (n != o.n || k != o.k) fail(ErrorCode::Dimension, "kvector shape mismatch");
  KVector out = *this;
  for (const auto& [mask, c] : o.coords) {
    auto [it, inserted] = out.coords.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.coords.erase(it);
    }
  }
  return out;
}

bool KVector::is_zero() const { return coords.empty(); }

KVector wedge_square(const KVector& v) {
  if (v.k != 2) fail(ErrorCode::Degree, "wedge_square expects a bivector");
  KVector out;
  out.n = v.n;
  out.k = 4;
  for (const auto& [m1, c1] : v.coords)
    for (const auto& [m2, c2] : v.coords) {
      int s = exterior::merge_sign(m1, m2);
      if (s == 0) continue;
      GaussianRational c = c1 * c2;
      if (s < 0) c = -c;
      auto [it, inserted] = out.coords.try_emplace(m1 | m2, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.coords.erase(it);
      }
    }
  return out;
}

bool is_decomposable(const KVector& v) {
  if (v.is_zero()) return true;
  int n = v.n, k = v.k;
  if (k <= 1 || k >= n - 1) return true;

  auto coord = [&v](Mask m) {
    auto it = v.coords.find(m);
    return it == v.coords.end() ? GaussianRational() : it->second;
  };

  // Grassmann relations: for every (k-1)-set S and (k+1)-set T,
  // sum_l (-1)^l eps(S, t_l) p_{S+t_l} p_{T-t_l} = 0.
  auto smaller = exterior::subsets_lex(n, k - 1);
  auto larger = exterior::subsets_lex(n, k + 1);
  for (Mask s : smaller)
    for (Mask t : larger) {
      GaussianRational acc;
      int l = 0;
      Mask rest = t;
      while (rest) {
        int bit = __builtin_ctz(rest);
        rest &= rest - 1;
        Mask tb = Mask(1u << bit);
        if (!(s & tb)) {
          // Sign of appending t_l to S and sorting.
          int above = __builtin_popcount(s & ~((tb << 1) - 1u));
          int sign = ((l + above) % 2 == 0) ? 1 : -1;
          GaussianRational term = coord(s | tb) * coord(t & ~tb);
          acc += sign > 0 ? term : -term;
        }
        ++l;
      }
      if (!acc.is_zero()) return false;
    }
  return true;
}

Form kvector_to_form(const KVector& v) {
  Form out(v.n);
  for (const auto& [mask, c] : v.coords) out = out + Form::monomial(v.n, {mask, 0}, c);
  return out;
}

Form semipositive_square(const KVector& v) {
  Form a = kvector_to_form(v);
  return a.wedge(a.conjugate()).scaled(i_power(static_cast<long>(v.k) * v.k));
}

namespace {

// The mu_t-type core on four chosen coordinates (paired c0,c1 | c2,c3),
// wedged with strongly positive factors on the padding coordinates.
Form family_form(int n, const std::vector<int>& core, const std::vector<int>& padding,
                 const Rat& t) {
  GaussianRational i = GaussianRational::i();
  auto one_one = [&](int p, int q) {
    return Form::monomial(n, {Mask(1u << p), Mask(1u << q)}, i);
  };
  Form t1 = one_one(core[0], core[0]) + one_one(core[1], core[1]);
  Form t2 = one_one(core[2], core[2]) + one_one(core[3], core[3]);
  Form la = one_one(core[0], core[2]) + one_one(core[2], core[0]) + one_one(core[1], core[3]) +
            one_one(core[3], core[1]);
  Form out = t1.wedge(t2).scaled(Rat(4)) + la.wedge(la).scaled(t);
  for (int j : padding) out = out.wedge(one_one(j, j));
  return out;
}

}  // namespace

std::optional<SeparationWitness> semi_not_strong_witness(int n, int k) {
  if (!(2 <= k && k <= n - 2))
    fail(ErrorCode::Argument, "witness construction requires 2 <= k <= n-2");
  if (n > 8) fail(ErrorCode::Unsupported, "supported up to n = 8");

  // alpha = (e1∧e2 + e3∧e4) ∧ e5 ∧ ... ∧ e_{k+2}: non-decomposable.
  Mask tail = 0;
  for (int j = 4; j < k + 2; ++j) tail |= 1u << j;
  KVector alpha = KVector::basis(n, k, Mask(0b0011u | tail)) +
                  KVector::basis(n, k, Mask(0b1100u | tail));
  Form eta = semipositive_square(alpha);

  std::vector<int> core = {0, 1, 2, 3};
  std::vector<int> padding;
  for (int j = k + 2; j < n; ++j) padding.push_back(j);

  for (const Rat& t : {Rat(-1), Rat(1), rat(-1, 2), rat(1, 2)}) {
    Form phi = family_form(n, core, padding, t);
    Rat pairing = exterior::top_scalar(eta.wedge(phi));
    if (pairing < 0)
      return SeparationWitness{n,       k, alpha, std::move(eta), std::move(phi), pairing,
                               t,       core,
                               "mu_t core on 4 coordinates, strongly positive padding"};
  }
  return std::nullopt;
}

bool revalidate_witness(const SeparationWitness& w) {
  if (!(2 <= w.k && w.k <= w.n - 2)) return false;
  if (is_decomposable(w.alpha)) return false;
  if (!(semipositive_square(w.alpha) == w.eta)) return false;
  // Attached Hermitian form: PSD of rank one.
  auto h = herm::hermitian_of_form(w.eta, w.k);
  auto d = herm::decide_psd(h);
  if (!d.psd) return false;
  int nonzero_e = 0;
  for (std::size_t m = 1; m < d.sym_coeffs.size(); ++m)
    if (d.sym_coeffs[m] != 0) ++nonzero_e;
  if (nonzero_e != 1) return false;  // e_1 != 0, e_m = 0 for m >= 2 <=> rank 1
  // phi rebuilds from family data with |t| <= 1.
  if (rat_abs(w.t) > 1) return false;
  std::vector<int> padding;
  for (int j = w.k + 2; j < w.n; ++j) padding.push_back(j);
  if (!(family_form(w.n, w.core_coords, padding, w.t) == w.phi)) return false;
  Rat pairing = exterior::top_scalar(w.eta.wedge(w.phi));
  return pairing == w.pairing && pairing < 0;
}

namespace {

nlohmann::ordered_json form_json(const Form& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : f.terms()) {
    auto bits = [](Mask m) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      while (m) {
        out.push_back(__builtin_ctz(m) + 1);
        m &= m - 1;
      }
      return out;
    };
    terms.push_back(nlohmann::ordered_json{{"dz", bits(idx.holo)},
                                           {"dzbar", bits(idx.anti)},
                                           {"re", rat_str(c.re)},
                                           {"im", rat_str(c.im)}});
  }
  return terms;
}

}  // namespace

nlohmann::ordered_json witness_json(const SeparationWitness& w) {
  nlohmann::ordered_json alpha = nlohmann::ordered_json::array();
  for (const auto& [mask, c] : w.alpha.coords) {
    nlohmann::ordered_json idx = nlohmann::ordered_json::array();
    Mask m = mask;
    while (m) {
      idx.push_back(__builtin_ctz(m) + 1);
      m &= m - 1;
    }
    alpha.push_back(nlohmann::ordered_json{
        {"index", idx}, {"re", rat_str(c.re)}, {"im", rat_str(c.im)}});
  }
  return nlohmann::ordered_json{{"n", w.n},
                                {"k", w.k},
                                {"alpha", alpha},
                                {"alpha_decomposable", false},
                                {"eta", form_json(w.eta)},
                                {"phi", form_json(w.phi)},
                                {"phi_family", w.family},
                                {"phi_t", rat_str(w.t)},
                                {"pairing", rat_str(w.pairing)}};
}

}  // namespace abelcone::cm
