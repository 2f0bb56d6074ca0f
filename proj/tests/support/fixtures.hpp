#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "qbafx/aa_bridge.hpp"
#include "qbafx/change.hpp"
#include "qbafx/model.hpp"
#include "qbafx/search.hpp"
#include "qbafx/stable.hpp"

namespace fx {

using namespace qbafx;

using Pairs = std::initializer_list<std::pair<const char*, const char*>>;

inline Qbaf make(std::initializer_list<std::pair<const char*, double>> args, Pairs attacks,
                 Pairs supports, StrengthDomain domain = StrengthDomain::real_line()) {
  RawQbaf raw;
  raw.domain = domain;
  for (const auto& [id, w] : args) raw.arguments.emplace_back(id, Strength(w));
  for (const auto& [a, b] : attacks) raw.attacks.emplace_back(a, b);
  for (const auto& [a, b] : supports) raw.supports.emplace_back(a, b);
  return validate(raw);
}

inline Af af(std::initializer_list<const char*> args, Pairs attacks) {
  ArgSet as;
  for (const char* a : args) as.insert(ArgId(a));
  EdgeSet es;
  for (const auto& [a, b] : attacks) es.emplace(ArgId(a), ArgId(b));
  return make_af(as, es);
}

inline ArgId id(const char* s) { return ArgId(s); }

using Family = std::vector<ArgSet>;

inline Family family(std::initializer_list<std::initializer_list<const char*>> sets) {
  Family f;
  for (const auto& s : sets) f.push_back(arg_set(s));
  sort_family(f);
  return f;
}

// Running example.
inline Qbaf running_before() { return make({{"a", 1}, {"b", 1}, {"c", 5}}, {{"a", "c"}}, {{"a", "b"}}); }
inline Qbaf running_after() {
  return make({{"a", 2}, {"b", 1}, {"c", 5}, {"d", 1}, {"e", 3}},
              {{"a", "c"}, {"e", "c"}, {"d", "a"}}, {{"a", "b"}, {"d", "e"}});
}
inline Scenario running(QbafClass cls = QbafClass::Acyclic) {
  return Scenario(running_before(), running_after(), id("b"), id("c"), SemanticsSpec::naive_sum(), cls);
}

// Attack flip: three isolated arguments, then an attack a->b, then b->a.
inline Qbaf flip_first() { return make({{"a", 2}, {"b", 2}, {"c", 1}}, {}, {}); }
inline Qbaf flip_middle() { return make({{"a", 2}, {"b", 2}, {"c", 1}}, {{"a", "b"}}, {}); }
inline Qbaf flip_last() { return make({{"a", 2}, {"b", 2}, {"c", 1}}, {{"b", "a"}}, {}); }

// Cyclic reversal example.
inline Qbaf cyclic_before() {
  return make({{"a", 1}, {"b", 2}, {"c", 1}, {"d", 1}}, {{"a", "d"}, {"d", "b"}, {"d", "c"}}, {});
}
inline Qbaf cyclic_after() {
  return make({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 1}}, {{"d", "a"}, {"d", "b"}, {"d", "c"}}, {});
}
inline Scenario cyclic_reversal(QbafClass cls) {
  return Scenario(cyclic_before(), cyclic_after(), id("b"), id("c"), SemanticsSpec::naive_sum(), cls);
}

// Two-support example with a larger minimal family.
inline Qbaf two_support_before() { return make({{"a", 1}, {"b", 6}}, {}, {}); }
inline Qbaf two_support_after() {
  return make({{"a", 1}, {"b", 6}, {"c", 2}, {"d", 2}, {"e", 4}}, {{"e", "b"}},
              {{"c", "a"}, {"d", "a"}});
}
inline Scenario two_support() {
  return Scenario(two_support_before(), two_support_after(), id("a"), id("b"), SemanticsSpec::naive_sum());
}

inline Af aa_before() { return af({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"c", "b"}}); }
inline Af aa_after() {
  return af({"a", "b", "c", "d", "e", "f"}, {{"a", "b"},
                                             {"b", "a"},
                                             {"c", "b"},
                                             {"c", "f"},
                                             {"d", "c"},
                                             {"d", "f"},
                                             {"e", "a"},
                                             {"f", "b"}});
}

}  // namespace fx
