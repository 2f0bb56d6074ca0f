#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qbafx/model.hpp"

namespace qbafx {

enum class Aggregation { Sum, Product, Top };

struct LinearInfluence {
  double k = 1.0;
};
struct EulerInfluence {};
struct PMaxInfluence {
  int p = 2;
  double k = 1.0;
};
using Influence = std::variant<LinearInfluence, EulerInfluence, PMaxInfluence>;

struct NaiveSum {};
struct Composed {
  Aggregation aggregation = Aggregation::Sum;
  Influence influence = EulerInfluence{};
};
struct QualitativeStable {};

struct SemanticsSpec {
  std::variant<NaiveSum, Composed, QualitativeStable> kind;
  std::string name;

  bool is_naive_sum() const { return std::holds_alternative<NaiveSum>(kind); }
  bool is_composed() const { return std::holds_alternative<Composed>(kind); }
  bool is_stable() const { return std::holds_alternative<QualitativeStable>(kind); }
  // Strength of an argument depends only on its ancestors.
  bool directional() const { return !is_stable(); }
  StrengthDomain domain() const;

  static SemanticsSpec naive_sum();
  static SemanticsSpec quadratic_energy();
  static SemanticsSpec squared_dfquad();
  static SemanticsSpec euler_top();
  static SemanticsSpec euler();
  static SemanticsSpec dfquad();
  static SemanticsSpec stable();
  // Throws DomainViolation for an unknown name.
  static SemanticsSpec by_name(std::string_view name);
  static std::vector<std::string> gradual_names();
};

using StrengthAssignment = std::map<ArgId, Strength>;

struct Parent {
  int node;
  int sign;  // -1 attack, +1 support
};

// Dense index form shared by every evaluator.
struct WeightedDigraph {
  std::vector<Strength> initial;
  std::vector<std::vector<Parent>> parents;

  std::size_t size() const { return initial.size(); }
};

WeightedDigraph to_digraph(const Qbaf& g, std::vector<ArgId>* order = nullptr);

double aggregate(Aggregation agg, const std::vector<std::pair<int, double>>& parents);
double influence(const Influence& inf, double w, double s);

// Gradual evaluation; nodes on or downstream of a cycle come out undefined.
std::vector<Strength> evaluate_gradual(const WeightedDigraph& g, const SemanticsSpec& sem);
StrengthAssignment evaluate(const Qbaf& g, const SemanticsSpec& sem);

}  // namespace qbafx
