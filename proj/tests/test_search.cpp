#include <doctest.h>

#include "qbafx/bench.hpp"
#include "support/fixtures.hpp"

using namespace qbafx;
using fx::family;
using fx::id;

TEST_CASE("membership checks on the running example") {
  Scenario s = fx::running();
  CHECK(is_ssi(s, arg_set({"a"})));
  CHECK(is_ssi(s, arg_set({"e"})));
  CHECK_FALSE(is_ssi(s, arg_set({"d"})));
  CHECK_FALSE(is_ssi(s, {}));
  CHECK(is_csi(s, arg_set({"e"})));
  CHECK_FALSE(is_csi(s, arg_set({"a"})));

  Scenario same(fx::running_after(), fx::running_after(), id("b"), id("c"), SemanticsSpec::naive_sum());
  CHECK(is_ssi(same, {}));
  CHECK(is_csi(same, {}));
}

TEST_CASE("cyclic reversals and the class") {
  CHECK_FALSE(is_ssi(fx::cyclic_reversal(QbafClass::Acyclic), arg_set({"d"})));
  CHECK(is_ssi(fx::cyclic_reversal(QbafClass::All), arg_set({"d"})));
}

TEST_CASE("candidate space") {
  CHECK(candidate_space(fx::running()).base == arg_set({"a", "d", "e"}));
  Scenario same(fx::running_after(), fx::running_after(), id("b"), id("c"), SemanticsSpec::naive_sum());
  CHECK(candidate_space(same).base.empty());

  // g changes but cannot influence either topic
  Qbaf g = fx::make({{"x", 1}, {"y", 2}, {"g", 1}}, {}, {});
  Qbaf g2 = fx::make({{"x", 3}, {"y", 2}, {"g", 5}}, {}, {});
  Scenario s(g, g2, id("x"), id("y"), SemanticsSpec::naive_sum());
  CHECK(candidate_space(s).base == arg_set({"x"}));

  auto order = candidate_space(fx::running()).ordering();
  REQUIRE(order.size() == 8);
  CHECK(order[0].empty());
  CHECK(order[1] == arg_set({"a"}));
  CHECK(order[3] == arg_set({"e"}));
  CHECK(order[4] == arg_set({"a", "d"}));
  CHECK(order[7] == arg_set({"a", "d", "e"}));
}

TEST_CASE("a reversal can chain an old edge into a new one") {
  // n lost its attack on s, s gained an attack on x; n reaches x only through both
  Qbaf g = fx::make({{"n", 1}, {"s", 1}, {"x", 3}, {"y", 2}}, {{"n", "s"}}, {});
  Qbaf g2 = fx::make({{"n", 1}, {"s", 1}, {"x", 3}, {"y", 2}}, {{"s", "x"}}, {});
  Scenario sc(g, g2, id("x"), id("y"), SemanticsSpec::naive_sum());
  CHECK(minimal_sx_cx(sc, ExplanationKind::SSI).sets == oracle(sc, ExplanationKind::SSI, true).sets);
  CHECK(minimal_sx_cx(sc, ExplanationKind::SSI).sets == family({{"n", "s"}}));
}

TEST_CASE("minimal families on the hand-built fixtures") {
  Scenario s = fx::running();
  CHECK(minimal_sx_cx(s, ExplanationKind::SSI).sets == family({{"a"}, {"e"}}));
  CHECK(minimal_sx_cx(s, ExplanationKind::CSI).sets == family({{"e"}}));
  CHECK(minimal_nx(s).sets == family({{"a", "e"}}));

  Scenario s6 = fx::two_support();
  auto ce_de = family({{"c", "e"}, {"d", "e"}});
  CHECK(minimal_sx_cx(s6, ExplanationKind::SSI).sets == ce_de);
  CHECK(minimal_sx_cx(s6, ExplanationKind::CSI).sets == ce_de);
  CHECK(minimal_nx(s6).sets == ce_de);

  CHECK(minimal_sx_cx(fx::cyclic_reversal(QbafClass::Acyclic), ExplanationKind::SSI).sets == family({{"c"}}));
  auto all5 = minimal_sx_cx(fx::cyclic_reversal(QbafClass::All), ExplanationKind::SSI).sets;
  CHECK(std::count(all5.begin(), all5.end(), arg_set({"d"})) == 1);
  CHECK(std::count(all5.begin(), all5.end(), arg_set({"c"})) == 1);
}

TEST_CASE("consistent scenario yields the empty explanation") {
  Scenario same(fx::running_after(), fx::running_after(), id("b"), id("c"), SemanticsSpec::naive_sum());
  for (auto k : {ExplanationKind::SSI, ExplanationKind::CSI, ExplanationKind::NSI}) {
    auto r = explain(same, k);
    CHECK(r.scenario_consistent);
    CHECK(r.sets == family({{}}));
    CHECK(oracle(same, k, true).sets == family({{}}));
  }
}

TEST_CASE("oracle agrees on the running example") {
  Scenario s = fx::running();
  for (auto k : {ExplanationKind::SSI, ExplanationKind::CSI, ExplanationKind::NSI})
    CHECK(oracle(s, k, true).sets == explain(s, k).sets);
  auto all_ssi = oracle(s, ExplanationKind::SSI, false).sets;
  for (const auto& S : all_ssi) CHECK(is_ssi(s, S));
  CHECK(all_ssi.size() > 2);
}

TEST_CASE("oracle size cap") {
  Qbaf g = random_qbaf({15, 1.0, 3});
  Qbaf g2 = random_update(g, {0.2, 4});
  ArgSet common;
  for (const auto& a : g.args())
    if (g2.contains(a)) common.insert(a);
  REQUIRE(common.size() >= 2);
  Scenario s(g, g2, *common.begin(), *common.rbegin(), SemanticsSpec::naive_sum(), QbafClass::All);
  CHECK_THROWS_AS(oracle(s, ExplanationKind::SSI, true), Error);
}

TEST_CASE("threaded search matches the sequential one") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto sc = random_scenario({10, 1.3, 0.4, seed, true}, SemanticsSpec::naive_sum());
    if (!sc) continue;
    SearchOptions par;
    par.threads = 3;
    par.chunk = 5;
    for (auto k : {ExplanationKind::SSI, ExplanationKind::CSI, ExplanationKind::NSI}) {
      auto a = explain(*sc, k);
      auto b = explain(*sc, k, par);
      CHECK(a.sets == b.sets);
      CHECK(a.stats.candidates_checked == b.stats.candidates_checked);
    }
  }
}

TEST_CASE("returned families are antichains and CSIs are SSIs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto sc = random_scenario({9, 1.2, 0.4, seed, true}, SemanticsSpec::naive_sum());
    if (!sc) continue;
    auto ssi = minimal_sx_cx(*sc, ExplanationKind::SSI).sets;
    auto csi = minimal_sx_cx(*sc, ExplanationKind::CSI).sets;
    auto nsi = minimal_nx(*sc).sets;
    for (const auto* fam : {&ssi, &csi, &nsi})
      for (const auto& p : *fam)
        for (const auto& q : *fam)
          if (&p != &q)
            CHECK_FALSE(std::includes(q.begin(), q.end(), p.begin(), p.end()));
    for (const auto& c : csi) CHECK(is_ssi(*sc, c));
    if (strength_consistent(*sc)) continue;
    for (const auto& n : nsi)
      for (const auto& m : ssi) {
        bool meets = false;
        for (const auto& a : m) meets = meets || n.count(a);
        CHECK(meets);
      }
  }
}

TEST_CASE("a minimal NSI may need an argument outside every minimal SSI") {
  // a and b each flip x above y alone, cancel each other together, and e restores the flip
  Qbaf g = fx::make({{"a", 2.5}, {"b", 1.5}, {"m", 0}, {"x", 0}, {"y", 2}}, {}, {{"m", "x"}});
  Qbaf g2 = fx::make({{"a", 2.5}, {"b", 1.5}, {"m", 0}, {"x", 0}, {"y", 2}, {"e", 1.8}},
                     {{"a", "b"}}, {{"a", "x"}, {"b", "x"}, {"b", "m"}, {"e", "x"}, {"m", "x"}});
  Scenario s(g, g2, id("x"), id("y"), SemanticsSpec::naive_sum());
  CHECK(minimal_sx_cx(s, ExplanationKind::SSI).sets == family({{"a"}, {"b"}}));
  CHECK(minimal_nx(s).sets == family({{"a", "b", "e"}}));
  CHECK(oracle(s, ExplanationKind::NSI, true).sets == family({{"a", "b", "e"}}));
  SearchOptions narrow;
  narrow.nsi_candidates = NsiCandidates::MinimalSsiUnion;
  CHECK(minimal_nx(s, narrow).sets.empty());
}
