#include "qbafx/model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qbafx {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::MissingStrength: return "MissingStrength";
    case ErrorCode::DuplicateArg: return "DuplicateArg";
    case ErrorCode::AttackSupportOverlap: return "AttackSupportOverlap";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::CyclicQbaf: return "CyclicQbaf";
    case ErrorCode::OutOfRangeStrength: return "OutOfRangeStrength";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::IdCollision: return "IdCollision";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Error";
}

ArgSet arg_set(std::initializer_list<const char*> names) {
  ArgSet s;
  for (const char* n : names) s.insert(ArgId(n));
  return s;
}

bool StrengthDomain::contains(double v) const {
  switch (kind) {
    case Kind::RealLine: return std::isfinite(v);
    case Kind::UnitInterval: return v >= 0.0 && v <= 1.0;
    case Kind::Qualitative:
      return v >= 0 && v < static_cast<double>(levels.size()) && v == std::floor(v);
  }
  return false;
}

std::optional<double> StrengthDomain::level_rank(const std::string& label) const {
  auto it = std::find(levels.begin(), levels.end(), label);
  if (it == levels.end()) return std::nullopt;
  return static_cast<double>(it - levels.begin());
}

Strength Qbaf::initial(const ArgId& a) const {
  auto it = tau_.find(a);
  if (it == tau_.end()) throw Error(ErrorCode::UnknownArgument, a.name());
  return it->second;
}

std::map<ArgId, std::vector<ArgId>> Qbaf::successors() const {
  std::map<ArgId, std::vector<ArgId>> out;
  for (const auto& a : args_) out[a];
  for (const auto& [u, v] : attacks_) out[u].push_back(v);
  for (const auto& [u, v] : supports_) out[u].push_back(v);
  return out;
}

namespace {

void check_edges(const ArgSet& args, const EdgeSet& edges, const char* what) {
  for (const auto& [u, v] : edges) {
    if (!args.count(u) || !args.count(v))
      throw Error(ErrorCode::DanglingEdge, std::string(what) + " (" + u.name() + ", " + v.name() +
                                               ") has an endpoint outside the arguments");
  }
}

void check_strength(const StrengthDomain& domain, const ArgId& a, const Strength& w) {
  if (!w.defined()) {
    if (domain.kind == StrengthDomain::Kind::Qualitative) return;
    throw Error(ErrorCode::MissingStrength, "argument " + a.name() + " has no initial strength");
  }
  if (!domain.contains(w.value()))
    throw Error(ErrorCode::OutOfRangeStrength,
                "initial strength of " + a.name() + " is outside the strength domain");
}

}  // namespace

Qbaf build_qbaf(StrengthDomain domain, std::map<ArgId, Strength> tau, EdgeSet attacks,
                EdgeSet supports) {
  Qbaf g;
  for (const auto& [a, w] : tau) {
    if (a.name().empty()) throw Error(ErrorCode::SchemaError, "empty argument id");
    check_strength(domain, a, w);
    g.args_.insert(a);
  }
  check_edges(g.args_, attacks, "attack");
  check_edges(g.args_, supports, "support");
  for (const auto& e : attacks)
    if (supports.count(e))
      throw Error(ErrorCode::AttackSupportOverlap,
                  "(" + e.first.name() + ", " + e.second.name() + ") is both attack and support");
  g.domain_ = std::move(domain);
  g.tau_ = std::move(tau);
  g.attacks_ = std::move(attacks);
  g.supports_ = std::move(supports);
  return g;
}

Qbaf validate(const RawQbaf& raw) {
  std::map<ArgId, Strength> tau;
  for (const auto& [name, w] : raw.arguments) {
    if (!tau.emplace(ArgId(name), w).second)
      throw Error(ErrorCode::DuplicateArg, "argument " + name + " listed twice");
  }
  EdgeSet att, sup;
  for (const auto& [u, v] : raw.attacks) att.emplace(ArgId(u), ArgId(v));
  for (const auto& [u, v] : raw.supports) sup.emplace(ArgId(u), ArgId(v));
  return build_qbaf(raw.domain, std::move(tau), std::move(att), std::move(sup));
}

Qbaf restrict(const Qbaf& g, const ArgSet& keep) {
  std::map<ArgId, Strength> tau;
  for (const auto& [a, w] : g.tau())
    if (keep.count(a)) tau.emplace(a, w);
  auto filter = [&](const EdgeSet& edges) {
    EdgeSet out;
    for (const auto& e : edges)
      if (tau.count(e.first) && tau.count(e.second)) out.insert(e);
    return out;
  };
  return build_qbaf(g.domain(), std::move(tau), filter(g.attacks()), filter(g.supports()));
}

bool reachable(const Qbaf& g, const ArgId& from, const ArgId& to) {
  if (!g.contains(from)) throw Error(ErrorCode::UnknownArgument, from.name());
  if (!g.contains(to)) throw Error(ErrorCode::UnknownArgument, to.name());
  auto succ = g.successors();
  ArgSet seen;
  std::deque<ArgId> queue(succ[from].begin(), succ[from].end());
  while (!queue.empty()) {
    ArgId a = queue.front();
    queue.pop_front();
    if (a == to) return true;
    if (!seen.insert(a).second) continue;
    for (const auto& b : succ[a]) queue.push_back(b);
  }
  return false;
}

namespace {

// Kahn's algorithm; lexicographically smallest ready argument first.
std::vector<ArgId> kahn(const Qbaf& g) {
  std::map<ArgId, int> indeg;
  for (const auto& a : g.args()) indeg[a] = 0;
  for (const auto& e : g.attacks()) ++indeg[e.second];
  for (const auto& e : g.supports()) ++indeg[e.second];
  auto succ = g.successors();
  std::set<ArgId> ready;
  for (const auto& [a, d] : indeg)
    if (d == 0) ready.insert(a);
  std::vector<ArgId> order;
  while (!ready.empty()) {
    ArgId a = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(a);
    for (const auto& b : succ[a])
      if (--indeg[b] == 0) ready.insert(b);
  }
  return order;
}

}  // namespace

bool is_acyclic(const Qbaf& g) { return kahn(g).size() == g.size(); }

std::vector<ArgId> topological_order(const Qbaf& g) {
  auto order = kahn(g);
  if (order.size() != g.size()) throw Error(ErrorCode::CyclicQbaf, "graph has a cycle");
  return order;
}

QbafDiff diff(const Qbaf& g, const Qbaf& g2) {
  QbafDiff d;
  auto outgoing = [](const EdgeSet& edges, const ArgId& a) {
    std::vector<ArgId> out;
    for (auto it = edges.lower_bound({a, ArgId()}); it != edges.end() && it->first == a; ++it)
      out.push_back(it->second);
    return out;
  };
  for (const auto& a : g.args()) {
    if (!g2.contains(a)) {
      d.removed.insert(a);
      continue;
    }
    bool same = g.initial(a) == g2.initial(a) &&
                outgoing(g.attacks(), a) == outgoing(g2.attacks(), a) &&
                outgoing(g.supports(), a) == outgoing(g2.supports(), a);
    (same ? d.unchanged : d.modified).insert(a);
  }
  for (const auto& a : g2.args())
    if (!g.contains(a)) d.added.insert(a);
  return d;
}

}  // namespace qbafx
