#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "qbafx/cli.hpp"
#include "qbafx/io.hpp"
#include "support/fixtures.hpp"

using namespace qbafx;

#ifndef QBAFX_DATA_DIR
#error "QBAFX_DATA_DIR must point at the golden corpus"
#endif

namespace {

std::string data(const std::string& name) { return std::string(QBAFX_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qbafx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_qbaf(parse_json_text(text), StrengthDomain::real_line());
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::TooLarge;
}

}  // namespace

TEST_CASE("parse the running example") {
  Qbaf g = parse_qbaf(load_json_file(data("fig1.qbaf.json")), StrengthDomain::real_line());
  CHECK(g == fx::running_before());
}

TEST_CASE("schema errors") {
  CHECK(code_of("{") == ErrorCode::SyntaxError);
  CHECK(code_of("[]") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"arguments":[{"id":"a","strength":1}],"attacks":[["a","z"]]})") ==
        ErrorCode::SchemaError);
  CHECK(code_of(R"({"arguments":[{"id":"a"}]})") == ErrorCode::MissingStrength);
  CHECK(code_of(R"({"arguments":[{"id":"a","strength":1},{"id":"a","strength":2}]})") ==
        ErrorCode::DuplicateArg);
  CHECK(code_of(R"({"arguments":[{"id":"a","strength":"x"}]})") == ErrorCode::SchemaError);
  try {
    parse_qbaf(parse_json_text(R"({"arguments":[{"id":"a","strength":1}],"attacks":[["a","z"]]})"),
               StrengthDomain::real_line());
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/attacks/0/1") != std::string::npos);
  }
}

TEST_CASE("qualitative strengths and AFs") {
  auto doc = parse_json_text(R"({"arguments":[{"id":"a","strength":"c"},{"id":"b"}]})");
  Qbaf q = parse_qbaf(doc, StrengthDomain::acceptance());
  CHECK(q.initial(ArgId("a")).value() == 1);
  CHECK_FALSE(q.initial(ArgId("b")).defined());
  CHECK(serialize_qbaf(q)["arguments"][0]["strength"] == "c");
  CHECK(serialize_qbaf(q)["arguments"][1]["strength"].is_null());

  Af f = parse_af(parse_json_text(R"({"arguments":[{"id":"a"},{"id":"b"}],"attacks":[["a","b"]],"supports":[]})"));
  CHECK(f.attacks.size() == 1);
  CHECK_THROWS_AS(parse_af(parse_json_text(
                      R"({"arguments":[{"id":"a"},{"id":"b"}],"supports":[["a","b"]]})")),
                  Error);
}

TEST_CASE("round trip over the golden corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(QBAFX_DATA_DIR)) {
    std::string name = entry.path().filename().string();
    json doc = load_json_file(entry.path().string());
    CAPTURE(name);
    if (name.find(".scenario.") != std::string::npos) {
      ScenarioFile f = parse_scenario_file(doc);
      CHECK(serialize_scenario_file(f) == doc);
      if (name.rfind("aa-", 0) != 0) CHECK_NOTHROW(to_scenario(f));
    } else {
      Qbaf g = parse_qbaf(doc, StrengthDomain::real_line());
      CHECK(serialize_qbaf(g) == doc);
      CHECK(parse_qbaf(serialize_qbaf(g), StrengthDomain::real_line()) == g);
    }
  }
}

TEST_CASE("family formatting") {
  CHECK(format_family(fx::family({{"e"}, {"a"}})) == "{{a},{e}}");
  CHECK(format_family(fx::family({{}})) == "{{}}");
  CHECK(format_family({}) == "{}");
  CHECK(format_family(fx::family({{"d", "e"}, {"c", "e"}})) == "{{c,e},{d,e}}");
  CHECK(family_json(fx::family({{"a", "e"}})).dump() == R"([["a","e"]])");
}

TEST_CASE("cli: explain") {
  auto r = run({"explain", data("fig1.scenario.json"), "--kind", "ssi"});
  CHECK(r.code == 0);
  CHECK(r.out == "{{a},{e}}\n");
  CHECK(run({"explain", data("fig1.scenario.json"), "--kind", "nsi"}).out == "{{a,e}}\n");
  CHECK(run({"explain", data("fig1.scenario.json"), "--kind", "csi", "--oracle"}).out == "{{e}}\n");

  auto all = run({"explain", data("fig1.scenario.json"), "--all-kinds"});
  CHECK(all.out == "ssi: {{a},{e}}\ncsi: {{e}}\nnsi: {{a,e}}\n");

  auto cons = run({"explain", data("consistent.scenario.json"), "--kind", "nsi"});
  CHECK(cons.code == 0);
  CHECK(cons.out.rfind("{{}}\n", 0) == 0);
  CHECK(cons.out.find("strength-consistent") != std::string::npos);

  auto js = run({"explain", data("fig1.scenario.json"), "--kind", "ssi", "--json"});
  json j = json::parse(js.out);
  CHECK(j["sets"] == json::parse(R"([["a"],["e"]])"));
  CHECK(j["kind"] == "ssi");
  CHECK(j["consistent"] == false);

  // flags override the file
  auto all5 = run({"explain", data("cyclic-reversal.scenario.json"), "--kind", "ssi", "--class", "all"});
  CHECK(all5.out.find("{d}") != std::string::npos);
  CHECK(run({"explain", data("cyclic-reversal.scenario.json"), "--kind", "ssi"}).out == "{{c}}\n");
}

TEST_CASE("cli: evaluate") {
  auto r = run({"evaluate", data("fig1d.qbaf.json"), "--semantics", "naive-sum"});
  CHECK(r.code == 0);
  CHECK(r.out == "a: 1\nb: 2\nc: 0\nd: 1\ne: 4\n");
  auto cyc = run({"evaluate", data("cyclic-pair.qbaf.json"), "--semantics", "naive-sum"});
  CHECK(cyc.out == "a: undefined\nb: undefined\nc: 1\n");
  auto js = run({"evaluate", data("cyclic-pair.qbaf.json"), "--semantics", "naive-sum", "--json"});
  json j = json::parse(js.out);
  CHECK(j["a"].is_null());
  CHECK(j["c"] == 1.0);
}

TEST_CASE("cli: aa") {
  auto r = run({"aa", data("aa-acceptance.scenario.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("ssi: {{d},{e}}") != std::string::npos);
  CHECK(r.out.find("csi: {{d,e}}") != std::string::npos);
  CHECK(r.out.find("nsi: {{d,e}}") != std::string::npos);
  auto one = run({"aa", data("aa-acceptance.scenario.json"), "--kind", "ssi", "--json"});
  CHECK(json::parse(one.out)["sets"] == json::parse(R"([["d"],["e"]])"));
}

TEST_CASE("cli: exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"explain"}).code == 2);
  CHECK(run({"explain", data("fig1.scenario.json"), "--kind", "xyz"}).code == 2);
  CHECK(run({"evaluate", data("fig1.qbaf.json"), "--semantics", "nope"}).code == 2);
  CHECK(run({"evaluate", data("does-not-exist.json"), "--semantics", "naive-sum"}).code == 1);
  auto bad = run({"evaluate", data("fig1.qbaf.json"), "--semantics", "euler"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("OutOfRangeStrength") != std::string::npos);
}

TEST_CASE("cli: output is deterministic") {
  auto a = run({"explain", data("two-support.scenario.json"), "--all-kinds", "--json"});
  auto b = run({"explain", data("two-support.scenario.json"), "--all-kinds", "--json"});
  CHECK(a.out == b.out);
}

TEST_CASE("cli: oracle matches the search on the golden corpus") {
  for (const char* f : {"fig1.scenario.json", "attack-flip.scenario.json", "attack-flip-all.scenario.json",
                        "cyclic-reversal.scenario.json", "two-support.scenario.json", "dummy-topic.scenario.json",
                        "consistent.scenario.json"}) {
    CAPTURE(f);
    auto fast = run({"explain", data(f), "--all-kinds"});
    auto slow = run({"explain", data(f), "--all-kinds", "--oracle"});
    CHECK(fast.code == 0);
    CHECK(fast.out == slow.out);
  }
}
