#include "qbafx/semantics.hpp"

#include <algorithm>
#include <cmath>

namespace qbafx {

StrengthDomain SemanticsSpec::domain() const {
  if (is_stable()) return StrengthDomain::acceptance();
  if (is_composed()) return StrengthDomain::unit_interval();
  return StrengthDomain::real_line();
}

SemanticsSpec SemanticsSpec::naive_sum() { return {NaiveSum{}, "naive-sum"}; }
SemanticsSpec SemanticsSpec::quadratic_energy() {
  return {Composed{Aggregation::Sum, PMaxInfluence{2, 1.0}}, "quadratic-energy"};
}
SemanticsSpec SemanticsSpec::squared_dfquad() {
  return {Composed{Aggregation::Product, PMaxInfluence{1, 1.0}}, "squared-dfquad"};
}
SemanticsSpec SemanticsSpec::euler_top() {
  return {Composed{Aggregation::Top, EulerInfluence{}}, "euler-top"};
}
SemanticsSpec SemanticsSpec::euler() { return {Composed{Aggregation::Sum, EulerInfluence{}}, "euler"}; }
SemanticsSpec SemanticsSpec::dfquad() {
  return {Composed{Aggregation::Product, LinearInfluence{1.0}}, "dfquad"};
}
SemanticsSpec SemanticsSpec::stable() { return {QualitativeStable{}, "stable"}; }

std::vector<std::string> SemanticsSpec::gradual_names() {
  return {"naive-sum", "quadratic-energy", "squared-dfquad", "euler-top", "euler", "dfquad"};
}

SemanticsSpec SemanticsSpec::by_name(std::string_view name) {
  for (auto make : {naive_sum, quadratic_energy, squared_dfquad, euler_top, euler, dfquad, stable}) {
    SemanticsSpec s = make();
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::DomainViolation, "unknown semantics '" + std::string(name) + "'");
}

double aggregate(Aggregation agg, const std::vector<std::pair<int, double>>& parents) {
  for (const auto& [v, s] : parents)
    if (!(s >= 0.0 && s <= 1.0))
      throw Error(ErrorCode::OutOfRangeStrength, "parent strength outside [0,1]");
  switch (agg) {
    case Aggregation::Sum: {
      double sum = 0.0;
      for (const auto& [v, s] : parents) sum += v * s;
      return sum;
    }
    case Aggregation::Product: {
      double att = 1.0, sup = 1.0;
      for (const auto& [v, s] : parents) (v < 0 ? att : sup) *= 1.0 - s;
      return att - sup;
    }
    case Aggregation::Top: {
      double up = 0.0, down = 0.0;
      for (const auto& [v, s] : parents) {
        up = std::max(up, v * s);
        down = std::max(down, -v * s);
      }
      return up - down;
    }
  }
  return 0.0;
}

namespace {

double pmax_h(double x, int p) {
  double m = std::pow(std::max(0.0, x), p);
  return m / (1.0 + m);
}

}  // namespace

double influence(const Influence& inf, double w, double s) {
  if (const auto* lin = std::get_if<LinearInfluence>(&inf)) {
    if (std::abs(s) > lin->k)
      throw Error(ErrorCode::DomainViolation, "aggregate outside [-k, k] for linear influence");
    return w - (w / lin->k) * std::max(0.0, -s) + ((1.0 - w) / lin->k) * std::max(0.0, s);
  }
  if (std::holds_alternative<EulerInfluence>(inf))
    return 1.0 - (1.0 - w * w) / (1.0 + w * std::exp(s));
  const auto& pm = std::get<PMaxInfluence>(inf);
  return w - w * pmax_h(-s / pm.k, pm.p) + (1.0 - w) * pmax_h(s / pm.k, pm.p);
}

WeightedDigraph to_digraph(const Qbaf& g, std::vector<ArgId>* order) {
  std::map<ArgId, int> index;
  WeightedDigraph d;
  for (const auto& [a, w] : g.tau()) {
    index.emplace(a, static_cast<int>(d.initial.size()));
    d.initial.push_back(w);
    if (order) order->push_back(a);
  }
  d.parents.resize(d.initial.size());
  for (const auto& [u, v] : g.attacks()) d.parents[index[v]].push_back({index[u], -1});
  for (const auto& [u, v] : g.supports()) d.parents[index[v]].push_back({index[u], +1});
  for (auto& ps : d.parents)
    std::sort(ps.begin(), ps.end(),
              [](const Parent& a, const Parent& b) { return a.node < b.node; });
  return d;
}

std::vector<Strength> evaluate_gradual(const WeightedDigraph& g, const SemanticsSpec& sem) {
  if (sem.is_stable())
    throw Error(ErrorCode::DomainViolation, "stable semantics is not a gradual semantics");
  const std::size_t n = g.size();
  std::vector<std::vector<int>> children(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& p : g.parents[v]) {
      children[p.node].push_back(static_cast<int>(v));
      ++indeg[v];
    }
  std::vector<int> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));

  // Whatever Kahn's pass never reaches lies on or below a cycle and stays undefined.
  std::vector<Strength> out(n);
  const Composed* comp = std::get_if<Composed>(&sem.kind);
  std::vector<std::pair<int, double>> agg_in;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    double w = g.initial[v].value();
    if (comp) {
      agg_in.clear();
      for (const auto& p : g.parents[v]) agg_in.emplace_back(p.sign, out[p.node].value());
      out[v] = influence(comp->influence, w, aggregate(comp->aggregation, agg_in));
    } else {
      double s = w;
      for (const auto& p : g.parents[v]) s += p.sign * out[p.node].value();
      out[v] = s;
    }
    for (int c : children[v])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  return out;
}

StrengthAssignment evaluate(const Qbaf& g, const SemanticsSpec& sem) {
  if (sem.is_composed())
    for (const auto& [a, w] : g.tau())
      if (!w.defined() || w.value() < 0.0 || w.value() > 1.0)
        throw Error(ErrorCode::OutOfRangeStrength,
                    "initial strength of " + a.name() + " outside [0,1] for " + sem.name);
  std::vector<ArgId> order;
  WeightedDigraph d = to_digraph(g, &order);
  auto values = evaluate_gradual(d, sem);
  StrengthAssignment out;
  for (std::size_t i = 0; i < order.size(); ++i) out.emplace(order[i], values[i]);
  return out;
}

}  // namespace qbafx
