#include "qbafx/change.hpp"

#include <cmath>

#include "qbafx/stable.hpp"

namespace qbafx {

namespace {

void check_topic(const Qbaf& g, const ArgId& t, const char* which) {
  if (!g.contains(t))
    throw Error(ErrorCode::UnknownArgument,
                "topic " + t.name() + " is missing from the " + which + " graph");
}

void check_domain(const Qbaf& g, const SemanticsSpec& sem, const char* which) {
  using Kind = StrengthDomain::Kind;
  bool qualitative = g.domain().kind == Kind::Qualitative;
  if (sem.is_stable() != qualitative)
    throw Error(ErrorCode::InvalidScenario,
                std::string("the ") + which + " graph's strength domain does not fit " + sem.name);
  if (sem.is_composed())
    for (const auto& [a, w] : g.tau())
      if (w.value() < 0.0 || w.value() > 1.0)
        throw Error(ErrorCode::OutOfRangeStrength,
                    "initial strength of " + a.name() + " outside [0,1] for " + sem.name);
}

}  // namespace

Scenario::Scenario(Qbaf before, Qbaf after, ArgId topic_x, ArgId topic_y, SemanticsSpec semantics,
                   QbafClass qbaf_class, ConsistencyMode mode, double epsilon)
    : before_(std::move(before)),
      after_(std::move(after)),
      x_(std::move(topic_x)),
      y_(std::move(topic_y)),
      semantics_(std::move(semantics)),
      class_(qbaf_class),
      mode_(mode),
      epsilon_(epsilon) {
  check_topic(before_, x_, "before");
  check_topic(before_, y_, "before");
  check_topic(after_, x_, "after");
  check_topic(after_, y_, "after");
  check_domain(before_, semantics_, "before");
  check_domain(after_, semantics_, "after");
  if (!(epsilon_ >= 0.0)) throw Error(ErrorCode::InvalidScenario, "epsilon must be non-negative");
  if (class_ == QbafClass::Acyclic && (!is_acyclic(before_) || !is_acyclic(after_)))
    throw Error(ErrorCode::InvalidScenario, "the acyclic class needs both graphs acyclic");
}

std::vector<Strength> final_strengths(const WeightedDigraph& g, const SemanticsSpec& sem) {
  return sem.is_stable() ? evaluate_stable(g) : evaluate_gradual(g, sem);
}

StrengthAssignment final_strengths(const Qbaf& g, const SemanticsSpec& sem) {
  if (!sem.is_stable()) return evaluate(g, sem);
  std::vector<ArgId> order;
  auto values = evaluate_stable(to_digraph(g, &order));
  StrengthAssignment out;
  for (std::size_t i = 0; i < order.size(); ++i) out.emplace(order[i], values[i]);
  return out;
}

bool comparable(const Qbaf& g, const ArgId& a, const ArgId& b, const SemanticsSpec& sem) {
  if (!g.contains(a)) throw Error(ErrorCode::UnknownArgument, a.name());
  if (!g.contains(b)) throw Error(ErrorCode::UnknownArgument, b.name());
  auto s = final_strengths(g, sem);
  return s.at(a).defined() && s.at(b).defined();
}

bool topics_consistent(const TopicPair& before, const TopicPair& after, ConsistencyMode mode,
                       double epsilon) {
  struct Rel {
    bool gt, lt, eq, comp;
  };
  auto rel = [epsilon](const TopicPair& p) {
    if (!p.x.defined() || !p.y.defined()) return Rel{false, false, false, false};
    double d = p.x.value() - p.y.value();
    return Rel{d > epsilon, -d > epsilon, std::abs(d) <= epsilon, true};
  };
  Rel g = rel(before), h = rel(after);
  if (g.comp != h.comp) return false;
  if (mode == ConsistencyMode::Strict)
    return (!g.gt || h.gt) && (!g.lt || h.lt) && (!g.eq || h.eq);
  return (!g.gt || !h.lt) && (!g.lt || !h.gt);
}

bool strength_consistent(const Scenario& s, const Qbaf& other) {
  auto a = final_strengths(s.before(), s.semantics());
  auto b = final_strengths(other, s.semantics());
  return topics_consistent({a.at(s.topic_x()), a.at(s.topic_y())},
                           {b.at(s.topic_x()), b.at(s.topic_y())}, s.mode(), s.epsilon());
}

bool strength_consistent(const Scenario& s) { return strength_consistent(s, s.after()); }

Qbaf reverse(const Qbaf& g, const Qbaf& g2, const ArgSet& s) {
  const ArgSet& args = g.args();
  for (const auto& a : s)
    if (!args.count(a) && !g2.contains(a))
      throw Error(ErrorCode::UnknownArgument, a.name() + " is in neither graph");

  // (Args' u S) \ (S \ Args)
  ArgSet star = g2.args();
  star.insert(s.begin(), s.end());
  for (const auto& a : s)
    if (!args.count(a)) star.erase(a);

  auto relation = [&](const EdgeSet& before, const EdgeSet& after) {
    EdgeSet out;
    for (const auto& e : after)
      if (!(s.count(e.first) && args.count(e.second))) out.insert(e);
    for (const auto& e : before)
      if (s.count(e.first) && star.count(e.second)) out.insert(e);
    EdgeSet kept;
    for (const auto& e : out)
      if (star.count(e.first) && star.count(e.second)) kept.insert(e);
    return kept;
  };

  std::map<ArgId, Strength> tau;
  for (const auto& a : star)
    tau.emplace(a, (args.count(a) && s.count(a)) ? g.initial(a) : g2.initial(a));
  return build_qbaf(g2.domain(), std::move(tau), relation(g.attacks(), g2.attacks()),
                    relation(g.supports(), g2.supports()));
}

Scenario with_dummy_topic(const Qbaf& g, const Qbaf& g2, const ArgId& x, Strength threshold,
                          const SemanticsSpec& sem, const ArgId& dummy, QbafClass qbaf_class,
                          ConsistencyMode mode, double epsilon) {
  if (g.contains(dummy) || g2.contains(dummy))
    throw Error(ErrorCode::IdCollision, "dummy id " + dummy.name() + " is already in use");
  auto add = [&](const Qbaf& q) {
    auto tau = q.tau();
    tau.emplace(dummy, threshold);
    return build_qbaf(q.domain(), std::move(tau), q.attacks(), q.supports());
  };
  return Scenario(add(g), add(g2), x, dummy, sem, qbaf_class, mode, epsilon);
}

}  // namespace qbafx
