#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gaussian.hpp"
#include "json.hpp"
#include "unipoly.hpp"

namespace abelcone::positivity {

enum class Status { Member, NonMember, Unknown };

const char* status_str(Status s);

// ---- machine-checkable certificates -----------------------------------

// All characteristic-coefficient signs of the associated Hermitian form.
struct PsdCertificate {
  std::vector<Rat> sym_coeffs;
};

// Exact vector with negative value against the associated Hermitian form.
struct NegativeVectorCertificate {
  std::vector<GaussianRational> vec;
  Rat value;
  std::string space;  // which Hermitian form the vector refutes
};

// Rational divisor parameters with a negative triple product.
struct DivisorPairWitness {
  Rat a, b;
  Rat value;
};

// Rational covectors whose strongly positive product pairs negatively.
struct WeakCounterexample {
  std::vector<std::vector<GaussianRational>> covectors;
  Rat value;
};

// Supported (not certified) weak membership: descent statistics only.
struct WeakSupported {
  double min_objective = 0.0;
  int restarts = 0;
  double tol = 0.0;
};

// Nonnegative combination of products of pseudoeffective divisor classes:
// theta_{1,a} theta_{1,b} pairs, the degenerate theta_{1,a} theta2 products,
// and the two pure squares.
struct DecompositionCertificate {
  enum class Kind { Pair, MixedPair, Theta1Squared, Theta2Squared };
  struct Term {
    Rat weight;
    Kind kind;
    Rat a, b;  // Pair uses (a, b); MixedPair uses a only
  };
  std::vector<Term> terms;
};

struct InequalityItem {
  std::string name;
  bool holds;
  Rat margin;  // lhs - rhs, nonnegative iff the inequality holds
};

struct InequalityCertificate {
  std::vector<InequalityItem> items;
};

// The nef decision: the four closed-form inequalities plus the quartic
// nonnegativity transcript.
struct NefCertificate {
  std::vector<InequalityItem> inequalities;
  std::vector<Rat> quartic;  // Q(b), ascending coefficients
  poly::SturmTranscript sturm;
};

using Certificate =
    std::variant<std::monostate, PsdCertificate, NegativeVectorCertificate, DivisorPairWitness,
                 WeakCounterexample, WeakSupported, DecompositionCertificate,
                 InequalityCertificate, NefCertificate>;

struct ConeVerdict {
  Status status = Status::Unknown;
  std::string rule;  // identifier of the decision procedure that produced it
  Certificate certificate;

  bool member() const { return status == Status::Member; }
};

nlohmann::ordered_json to_json(const ConeVerdict& v);

// Deterministic decimal rendering for doubles appearing in JSON output.
std::string double_str(double v);

nlohmann::ordered_json gaussian_json(const GaussianRational& z);
nlohmann::ordered_json rat_list_json(const std::vector<Rat>& v);

}  // namespace abelcone::positivity
