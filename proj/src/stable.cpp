#include "qbafx/stable.hpp"

#include <algorithm>
#include <cstdint>

namespace qbafx {

Af make_af(ArgSet arguments, EdgeSet attacks) {
  for (const auto& [u, v] : attacks)
    if (!arguments.count(u) || !arguments.count(v))
      throw Error(ErrorCode::DanglingEdge,
                  "attack (" + u.name() + ", " + v.name() + ") has an endpoint outside the arguments");
  return Af{std::move(arguments), std::move(attacks)};
}

char status_label(AcceptanceStatus s) {
  switch (s) {
    case AcceptanceStatus::Rejected: return 'n';
    case AcceptanceStatus::Credulous: return 'c';
    case AcceptanceStatus::Sceptical: return 's';
  }
  return '?';
}

namespace {

using Bits = std::uint32_t;

struct Search {
  std::size_t n;
  std::vector<Bits> attackers;  // attackers[v]: who attacks v
  std::vector<Bits> targets;    // targets[v]: whom v attacks
  std::vector<Bits> found;

  void run(std::size_t v, Bits in) {
    if (v == n) {
      for (std::size_t u = 0; u < n; ++u)
        if (!(in >> u & 1) && !(attackers[u] & in)) return;
      found.push_back(in);
      return;
    }
    Bits bit = Bits{1} << v;
    if (!((attackers[v] | targets[v]) & (in | bit))) run(v + 1, in | bit);
    // v stays out; it must be attacked by the final set, so it needs an attacker at all
    if (attackers[v]) run(v + 1, in);
  }
};

}  // namespace

std::vector<std::vector<bool>> stable_extensions(const WeightedDigraph& g) {
  if (g.size() > kStableArgCap)
    throw Error(ErrorCode::TooLarge, "stable extension search is capped at " +
                                         std::to_string(kStableArgCap) + " arguments");
  Search s{g.size(), std::vector<Bits>(g.size(), 0), std::vector<Bits>(g.size(), 0), {}};
  for (std::size_t v = 0; v < g.size(); ++v)
    for (const auto& p : g.parents[v])
      if (p.sign < 0) {
        s.attackers[v] |= Bits{1} << p.node;
        s.targets[p.node] |= Bits{1} << v;
      }
  s.run(0, 0);
  std::vector<std::vector<bool>> out;
  for (Bits b : s.found) {
    std::vector<bool> m(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) m[v] = b >> v & 1;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Strength> evaluate_stable(const WeightedDigraph& g) {
  auto exts = stable_extensions(g);
  std::vector<Strength> out(g.size(), static_cast<double>(AcceptanceStatus::Rejected));
  if (exts.empty()) return out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::size_t hits = 0;
    for (const auto& e : exts) hits += e[v];
    if (hits == exts.size()) out[v] = static_cast<double>(AcceptanceStatus::Sceptical);
    else if (hits > 0) out[v] = static_cast<double>(AcceptanceStatus::Credulous);
  }
  return out;
}

namespace {

WeightedDigraph af_digraph(const Af& af, std::vector<ArgId>& order) {
  order.assign(af.arguments.begin(), af.arguments.end());
  WeightedDigraph d;
  d.initial.assign(order.size(), Strength::undefined());
  d.parents.resize(order.size());
  auto index = [&](const ArgId& a) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), a) - order.begin());
  };
  for (const auto& [u, v] : af.attacks) d.parents[index(v)].push_back({index(u), -1});
  return d;
}

}  // namespace

std::vector<ArgSet> stable_extensions(const Af& af) {
  std::vector<ArgId> order;
  auto masks = stable_extensions(af_digraph(af, order));
  std::vector<ArgSet> out;
  for (const auto& m : masks) {
    ArgSet s;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (m[i]) s.insert(order[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<ArgId, AcceptanceStatus> af_acceptance(const Af& af) {
  std::vector<ArgId> order;
  auto values = evaluate_stable(af_digraph(af, order));
  std::map<ArgId, AcceptanceStatus> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out.emplace(order[i], static_cast<AcceptanceStatus>(static_cast<int>(values[i].value())));
  return out;
}

}  // namespace qbafx
