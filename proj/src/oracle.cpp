#include <cstdint>

#include "qbafx/search.hpp"

namespace qbafx {

ExplanationSet oracle(const Scenario& s, ExplanationKind kind, bool minimal_only,
                      std::size_t cap) {
  ArgSet all = s.before().args();
  all.insert(s.after().args().begin(), s.after().args().end());
  if (all.size() > cap)
    throw Error(ErrorCode::TooLarge, "oracle is capped at " + std::to_string(cap) + " arguments");
  const std::vector<ArgId> u(all.begin(), all.end());
  const std::size_t n = u.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  auto members = [&](std::uint32_t m) {
    ArgSet out;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) out.insert(u[i]);
    return out;
  };

  // every reversal, built by the set-level operator
  std::vector<char> rev_consistent(full + 1), rev_in_class(full + 1);
  for (std::uint32_t m = 0; m <= full; ++m) {
    Qbaf r = reverse(s.before(), s.after(), members(m));
    rev_consistent[m] = strength_consistent(s, r);
    rev_in_class[m] = s.qbaf_class() == QbafClass::All || is_acyclic(r);
  }
  const bool consistent = rev_consistent[0];

  ExplanationSet res;
  res.kind = kind;
  res.minimal_only = minimal_only;
  res.scenario_consistent = consistent;

  std::vector<char> ssi(full + 1);
  for (std::uint32_t m = 0; m <= full; ++m) {
    std::uint32_t rest = full & ~m;
    ssi[m] = (m == 0 && consistent) ||
             (!consistent && !rev_consistent[rest] && rev_in_class[rest]);
  }

  std::vector<ArgSet> family;
  if (kind == ExplanationKind::SSI) {
    for (std::uint32_t m = 0; m <= full; ++m)
      if (ssi[m]) family.push_back(members(m));
  } else if (kind == ExplanationKind::CSI) {
    for (std::uint32_t m = 0; m <= full; ++m)
      if (ssi[m] && rev_consistent[m] && rev_in_class[m]) family.push_back(members(m));
  } else if (consistent) {
    family.push_back(ArgSet{});
  } else {
    // some_ssi_within[c]: an SSI exists among the subsets of c
    std::vector<char> some_ssi_within(ssi);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t m = 0; m <= full; ++m)
        if (m >> i & 1) some_ssi_within[m] |= some_ssi_within[m ^ (std::uint32_t{1} << i)];
    for (std::uint32_t m = 0; m <= full; ++m)
      if (ssi[m] && !some_ssi_within[full & ~m]) family.push_back(members(m));
    // the definition itself asks for minimality
    family = minimal_members(std::move(family));
  }
  if (minimal_only) family = minimal_members(std::move(family));
  sort_family(family);
  res.sets = std::move(family);
  return res;
}

}  // namespace qbafx
