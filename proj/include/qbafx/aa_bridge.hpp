#pragma once

#include "qbafx/search.hpp"
#include "qbafx/stable.hpp"

namespace qbafx {

// Qualitative QBAF: placeholder initial strengths, attacks only.
Qbaf af_to_qbaf(const Af& af);

Scenario aa_scenario(const Af& before, const Af& after, const ArgId& x, const ArgId& y,
                     ConsistencyMode mode);

ExplanationSet aa_explain(const Af& before, const Af& after, const ArgId& x, const ArgId& y,
                          ConsistencyMode mode, ExplanationKind kind,
                          const SearchOptions& opt = {});

}  // namespace qbafx
