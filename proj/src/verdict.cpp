#include "verdict.hpp"

#include <cstdio>

namespace abelcone::positivity {

using nlohmann::ordered_json;

const char* status_str(Status s) {
  switch (s) {
    case Status::Member: return "Member";
    case Status::NonMember: return "NonMember";
    default: return "Unknown";
  }
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json gaussian_json(const GaussianRational& z) {
  return ordered_json{{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

ordered_json rat_list_json(const std::vector<Rat>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& r : v) out.push_back(rat_str(r));
  return out;
}

namespace {

ordered_json vec_json(const std::vector<GaussianRational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& z : v) out.push_back(gaussian_json(z));
  return out;
}

ordered_json inequalities_json(const std::vector<InequalityItem>& items) {
  ordered_json out = ordered_json::array();
  for (const auto& item : items)
    out.push_back(ordered_json{
        {"name", item.name}, {"holds", item.holds}, {"margin", rat_str(item.margin)}});
  return out;
}

ordered_json sturm_json(const poly::SturmTranscript& t) {
  return ordered_json{{"nonneg", t.nonneg},
                      {"square_part", rat_list_json(t.square_part)},
                      {"odd_part", rat_list_json(t.odd_part)},
                      {"content", rat_str(t.content)},
                      {"odd_part_real_roots", t.odd_part_real_roots}};
}

struct CertificateJson {
  ordered_json operator()(const std::monostate&) const { return ordered_json{{"type", "none"}}; }
  ordered_json operator()(const PsdCertificate& c) const {
    return ordered_json{{"type", "psd-char-poly"}, {"sym_coeffs", rat_list_json(c.sym_coeffs)}};
  }
  ordered_json operator()(const NegativeVectorCertificate& c) const {
    return ordered_json{{"type", "negative-vector"},
                        {"space", c.space},
                        {"vector", vec_json(c.vec)},
                        {"value", rat_str(c.value)}};
  }
  ordered_json operator()(const DivisorPairWitness& c) const {
    return ordered_json{{"type", "divisor-pair"},
                        {"a", rat_str(c.a)},
                        {"b", rat_str(c.b)},
                        {"value", rat_str(c.value)}};
  }
  ordered_json operator()(const WeakCounterexample& c) const {
    ordered_json cov = ordered_json::array();
    for (const auto& l : c.covectors) cov.push_back(vec_json(l));
    return ordered_json{
        {"type", "weak-counterexample"}, {"covectors", cov}, {"value", rat_str(c.value)}};
  }
  ordered_json operator()(const WeakSupported& c) const {
    return ordered_json{{"type", "weak-supported"},
                        {"min_objective", double_str(c.min_objective)},
                        {"restarts", c.restarts},
                        {"tol", double_str(c.tol)}};
  }
  ordered_json operator()(const DecompositionCertificate& c) const {
    ordered_json terms = ordered_json::array();
    for (const auto& t : c.terms) {
      ordered_json g;
      switch (t.kind) {
        case DecompositionCertificate::Kind::Pair:
          g = ordered_json{{"kind", "pair"}, {"a", rat_str(t.a)}, {"b", rat_str(t.b)}};
          break;
        case DecompositionCertificate::Kind::MixedPair:
          g = ordered_json{{"kind", "pair-theta2"}, {"a", rat_str(t.a)}};
          break;
        case DecompositionCertificate::Kind::Theta1Squared:
          g = ordered_json{{"kind", "theta1-squared"}};
          break;
        case DecompositionCertificate::Kind::Theta2Squared:
          g = ordered_json{{"kind", "theta2-squared"}};
          break;
      }
      terms.push_back(ordered_json{{"weight", rat_str(t.weight)}, {"generator", g}});
    }
    return ordered_json{{"type", "sym2-decomposition"}, {"terms", terms}};
  }
  ordered_json operator()(const InequalityCertificate& c) const {
    return ordered_json{{"type", "inequalities"}, {"items", inequalities_json(c.items)}};
  }
  ordered_json operator()(const NefCertificate& c) const {
    return ordered_json{{"type", "nef"},
                        {"inequalities", inequalities_json(c.inequalities)},
                        {"quartic", rat_list_json(c.quartic)},
                        {"sturm", sturm_json(c.sturm)}};
  }
};

}  // namespace

ordered_json to_json(const ConeVerdict& v) {
  return ordered_json{{"status", status_str(v.status)},
                      {"rule", v.rule},
                      {"certificate", std::visit(CertificateJson{}, v.certificate)}};
}

}  // namespace abelcone::positivity
