#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exterior.hpp"
#include "json.hpp"

namespace abelcone::cm {

using exterior::Form;

// Element a + b*omega of an imaginary quadratic order.
struct OrderElem {
  Rat a, b;
  bool is_zero() const { return a == 0 && b == 0; }
  friend bool operator==(const OrderElem&, const OrderElem&) = default;
};

// The endomorphism order S = Z[omega] with omega = sqrt(D) for D != 1 (mod 4)
// and omega = (1 + sqrt(D))/2 for D = 1 (mod 4), D < 0.
class CmOrder {
 public:
  explicit CmOrder(long d);

  long radicand() const { return d_; }
  bool half_integral() const { return half_; }
  static OrderElem omega() { return {Rat(0), Rat(1)}; }

  OrderElem add(const OrderElem& x, const OrderElem& y) const { return {x.a + y.a, x.b + y.b}; }
  OrderElem mul(const OrderElem& x, const OrderElem& y) const;
  OrderElem conj(const OrderElem& x) const;
  // x * conj(x), a rational (the norm form of the order).
  Rat norm(const OrderElem& x) const;

  bool is_integral(const OrderElem& x) const;
  // S is a ring: omega^2 has integral coordinates.
  bool closed_under_multiplication() const;
  // The R-span of S is all of C.
  bool spans_plane() const;

  // True when omega lies in Q(i), i.e. |D| is a perfect square (D != 1 mod 4).
  bool embeds_in_gaussian() const;
  GaussianRational embed(const OrderElem& x) const;

 private:
  long d_;
  bool half_;
};

// The exact (1,1)-form i l ∧ conj(l) on C^n for l = s_1 dz_1 + ... + s_n dz_n
// with s_j in the order. Pseudoeffective on the n-fold self-product of the
// curve; requires a Gaussian-embeddable order.
Form strong1_generator(const CmOrder& order, const std::vector<OrderElem>& s);

// Element of wedge^k C^n in the sorted multi-index basis.
struct KVector {
  int n = 0;
  int k = 0;
  std::map<exterior::Mask, GaussianRational> coords;

  static KVector basis(int n, int k, exterior::Mask mask, GaussianRational c = GaussianRational(Rat(1)));
  KVector operator+(const KVector& o) const;
  bool is_zero() const;
};

// Wedge square of a bivector in wedge^4 coordinates (the k = 2 Plücker test).
KVector wedge_square(const KVector& v);

// Exact decomposability test through the quadratic Grassmann relations.
bool is_decomposable(const KVector& v);

// The (k,0)-form with the same coefficients, and the semipositive square
// i^{k^2} alpha ∧ conj(alpha).
Form kvector_to_form(const KVector& v);
Form semipositive_square(const KVector& v);

// A nef-but-not-pseudoeffective witness: eta = i^{k^2} alpha ∧ conj(alpha)
// for a non-decomposable alpha (semipositive of rank one, hence nef), paired
// with a weakly positive (n-k, n-k)-form phi such that the exact top scalar
// of eta ∧ phi is negative.
struct SeparationWitness {
  int n;
  int k;
  KVector alpha;
  Form eta;
  Form phi;
  Rat pairing;         // top_scalar(eta ∧ phi) < 0
  Rat t;               // family parameter of the core of phi, |t| <= 1
  std::vector<int> core_coords;  // the four coordinates carrying the core
  std::string family;
};

// Deterministic search over the weakly-positive family (the mu_t cores with
// |t| <= 1, padded by strongly positive factors on the unused coordinates).
std::optional<SeparationWitness> semi_not_strong_witness(int n, int k);

// Exact recheck of an archived witness: eta rebuilds from alpha, alpha is not
// decomposable, the attached Hermitian form of eta is PSD of rank one, phi
// rebuilds from its family data with |t| <= 1, and the pairing is negative.
bool revalidate_witness(const SeparationWitness& w);

nlohmann::ordered_json witness_json(const SeparationWitness& w);

}  // namespace abelcone::cm
