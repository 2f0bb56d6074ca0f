#pragma once

#include "qbafx/model.hpp"
#include "qbafx/semantics.hpp"

namespace qbafx {

enum class QbafClass { Acyclic, All };
enum class ConsistencyMode { Strict, Weak };

inline constexpr double kDefaultEpsilon = 1e-9;

class Scenario {
 public:
  // Throws UnknownArgument for topics missing from either graph and
  // InvalidScenario for class or domain mismatches.
  Scenario(Qbaf before, Qbaf after, ArgId topic_x, ArgId topic_y, SemanticsSpec semantics,
           QbafClass qbaf_class = QbafClass::Acyclic,
           ConsistencyMode mode = ConsistencyMode::Strict, double epsilon = kDefaultEpsilon);

  const Qbaf& before() const noexcept { return before_; }
  const Qbaf& after() const noexcept { return after_; }
  const ArgId& topic_x() const noexcept { return x_; }
  const ArgId& topic_y() const noexcept { return y_; }
  const SemanticsSpec& semantics() const noexcept { return semantics_; }
  QbafClass qbaf_class() const noexcept { return class_; }
  ConsistencyMode mode() const noexcept { return mode_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  Qbaf before_;
  Qbaf after_;
  ArgId x_;
  ArgId y_;
  SemanticsSpec semantics_;
  QbafClass class_;
  ConsistencyMode mode_;
  double epsilon_;
};

// Dispatches on the semantics kind, stable included.
StrengthAssignment final_strengths(const Qbaf& g, const SemanticsSpec& sem);
std::vector<Strength> final_strengths(const WeightedDigraph& g, const SemanticsSpec& sem);

bool comparable(const Qbaf& g, const ArgId& a, const ArgId& b, const SemanticsSpec& sem);

struct TopicPair {
  Strength x;
  Strength y;
};

bool topics_consistent(const TopicPair& before, const TopicPair& after, ConsistencyMode mode,
                       double epsilon);
// Whether the topics keep their relation from before() to `other`.
bool strength_consistent(const Scenario& s, const Qbaf& other);
bool strength_consistent(const Scenario& s);

// Undo the changes of the members of s.
Qbaf reverse(const Qbaf& g, const Qbaf& g2, const ArgSet& s);

Scenario with_dummy_topic(const Qbaf& g, const Qbaf& g2, const ArgId& x, Strength threshold,
                          const SemanticsSpec& sem, const ArgId& dummy = ArgId("f"),
                          QbafClass qbaf_class = QbafClass::Acyclic,
                          ConsistencyMode mode = ConsistencyMode::Strict,
                          double epsilon = kDefaultEpsilon);

}  // namespace qbafx
