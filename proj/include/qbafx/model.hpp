#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qbafx/error.hpp"

namespace qbafx {

class ArgId {
 public:
  ArgId() = default;
  explicit ArgId(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const ArgId&, const ArgId&) = default;

 private:
  std::string name_;
};

using ArgSet = std::set<ArgId>;
using Edge = std::pair<ArgId, ArgId>;
using EdgeSet = std::set<Edge>;

ArgSet arg_set(std::initializer_list<const char*> names);

// Either a value of the active strength domain or undefined (bottom).
// Qualitative levels are stored as their rank 0, 1, 2, ...
class Strength {
 public:
  Strength() = default;
  Strength(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static Strength undefined() { return Strength(); }

  bool defined() const noexcept { return value_.has_value(); }
  double value() const { return *value_; }

  friend bool operator==(const Strength&, const Strength&) = default;

 private:
  std::optional<double> value_;
};

struct StrengthDomain {
  enum class Kind { RealLine, UnitInterval, Qualitative };

  Kind kind = Kind::RealLine;
  std::vector<std::string> levels;  // only for Qualitative, lowest first

  static StrengthDomain real_line() { return {Kind::RealLine, {}}; }
  static StrengthDomain unit_interval() { return {Kind::UnitInterval, {}}; }
  // n (rejected) < c (credulous) < s (sceptical)
  static StrengthDomain acceptance() { return {Kind::Qualitative, {"n", "c", "s"}}; }

  bool contains(double v) const;
  std::optional<double> level_rank(const std::string& label) const;

  friend bool operator==(const StrengthDomain&, const StrengthDomain&) = default;
};

struct RawQbaf {
  std::vector<std::pair<std::string, Strength>> arguments;
  std::vector<std::pair<std::string, std::string>> attacks;
  std::vector<std::pair<std::string, std::string>> supports;
  StrengthDomain domain = StrengthDomain::real_line();
};

class Qbaf {
 public:
  Qbaf() = default;

  const StrengthDomain& domain() const noexcept { return domain_; }
  const ArgSet& args() const noexcept { return args_; }
  const std::map<ArgId, Strength>& tau() const noexcept { return tau_; }
  const EdgeSet& attacks() const noexcept { return attacks_; }
  const EdgeSet& supports() const noexcept { return supports_; }

  bool contains(const ArgId& a) const { return args_.count(a) != 0; }
  Strength initial(const ArgId& a) const;
  std::size_t size() const noexcept { return args_.size(); }

  // Both relations, targets grouped by source.
  std::map<ArgId, std::vector<ArgId>> successors() const;

  friend bool operator==(const Qbaf&, const Qbaf&) = default;

 private:
  friend Qbaf validate(const RawQbaf& raw);
  friend Qbaf build_qbaf(StrengthDomain, std::map<ArgId, Strength>, EdgeSet, EdgeSet);

  StrengthDomain domain_;
  ArgSet args_;
  std::map<ArgId, Strength> tau_;
  EdgeSet attacks_;
  EdgeSet supports_;
};

Qbaf validate(const RawQbaf& raw);
// Checked construction from already-typed parts.
Qbaf build_qbaf(StrengthDomain domain, std::map<ArgId, Strength> tau, EdgeSet attacks,
                EdgeSet supports);

Qbaf restrict(const Qbaf& g, const ArgSet& keep);
// Path of at least one edge through attacks or supports.
bool reachable(const Qbaf& g, const ArgId& from, const ArgId& to);
bool is_acyclic(const Qbaf& g);
std::vector<ArgId> topological_order(const Qbaf& g);

struct QbafDiff {
  ArgSet added;
  ArgSet removed;
  ArgSet modified;
  ArgSet unchanged;
};

QbafDiff diff(const Qbaf& g, const Qbaf& g2);

}  // namespace qbafx
