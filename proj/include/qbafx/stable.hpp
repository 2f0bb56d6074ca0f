#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qbafx/model.hpp"
#include "qbafx/semantics.hpp"

namespace qbafx {

inline constexpr std::size_t kStableArgCap = 20;

struct Af {
  ArgSet arguments;
  EdgeSet attacks;
};

// Checks endpoints.
Af make_af(ArgSet arguments, EdgeSet attacks);

enum class AcceptanceStatus { Rejected = 0, Credulous = 1, Sceptical = 2 };

char status_label(AcceptanceStatus s);

std::vector<ArgSet> stable_extensions(const Af& af);
std::map<ArgId, AcceptanceStatus> af_acceptance(const Af& af);

// Extension masks over the dense index, attacks are the parents with sign -1.
std::vector<std::vector<bool>> stable_extensions(const WeightedDigraph& g);
std::vector<Strength> evaluate_stable(const WeightedDigraph& g);

}  // namespace qbafx
