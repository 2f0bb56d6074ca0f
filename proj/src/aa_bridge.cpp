#include "qbafx/aa_bridge.hpp"

namespace qbafx {

Qbaf af_to_qbaf(const Af& af) {
  std::map<ArgId, Strength> tau;
  for (const auto& a : af.arguments) tau.emplace(a, Strength::undefined());
  return build_qbaf(StrengthDomain::acceptance(), std::move(tau), af.attacks, {});
}

Scenario aa_scenario(const Af& before, const Af& after, const ArgId& x, const ArgId& y,
                     ConsistencyMode mode) {
  return Scenario(af_to_qbaf(before), af_to_qbaf(after), x, y, SemanticsSpec::stable(),
                  QbafClass::All, mode);
}

ExplanationSet aa_explain(const Af& before, const Af& after, const ArgId& x, const ArgId& y,
                          ConsistencyMode mode, ExplanationKind kind, const SearchOptions& opt) {
  return explain(aa_scenario(before, after, x, y, mode), kind, opt);
}

}  // namespace qbafx
