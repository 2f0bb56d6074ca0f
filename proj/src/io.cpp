#include "qbafx/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbafx/aa_bridge.hpp"

namespace qbafx {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string text_at(const json& v, const std::string& where) {
  if (!v.is_string()) schema(where, "expected a string");
  std::string s = v.get<std::string>();
  if (s.empty()) schema(where, "empty argument id");
  return s;
}

std::vector<std::pair<std::string, std::string>> edges_at(const json& doc, const char* key,
                                                         const std::set<std::string>& ids,
                                                         const std::string& where) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!doc.contains(key)) return out;
  const std::string base = where + "/" + key;
  const json& arr = doc.at(key);
  if (!arr.is_array()) schema(base, "expected an array of pairs");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = base + "/" + std::to_string(i);
    if (!arr[i].is_array() || arr[i].size() != 2) schema(at, "expected a pair of ids");
    std::string u = text_at(arr[i][0], at + "/0"), v = text_at(arr[i][1], at + "/1");
    if (!ids.count(u)) schema(at + "/0", "unknown argument '" + u + "'");
    if (!ids.count(v)) schema(at + "/1", "unknown argument '" + v + "'");
    out.emplace_back(u, v);
  }
  return out;
}

const json& arguments_at(const json& doc, const std::string& where) {
  if (!doc.is_object()) schema(where, "expected an object");
  if (!doc.contains("arguments") || !doc["arguments"].is_array())
    schema(where + "/arguments", "expected an array");
  return doc["arguments"];
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, path + ": " + e.what());
  }
}

Qbaf parse_qbaf(const json& doc, const StrengthDomain& domain, const std::string& where) {
  const json& args = arguments_at(doc, where);
  RawQbaf raw;
  raw.domain = domain;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string at = where + "/arguments/" + std::to_string(i);
    const json& a = args[i];
    if (!a.is_object()) schema(at, "expected an object");
    if (!a.contains("id")) schema(at, "missing id");
    std::string name = text_at(a["id"], at + "/id");
    Strength w;
    if (a.contains("strength") && !a["strength"].is_null()) {
      const json& s = a["strength"];
      if (domain.kind == StrengthDomain::Kind::Qualitative) {
        if (!s.is_string()) schema(at + "/strength", "expected a qualitative label");
        auto rank = domain.level_rank(s.get<std::string>());
        if (!rank) schema(at + "/strength", "unknown label '" + s.get<std::string>() + "'");
        w = *rank;
      } else {
        if (!s.is_number()) schema(at + "/strength", "expected a number");
        w = s.get<double>();
      }
    }
    ids.insert(name);
    raw.arguments.emplace_back(name, w);
  }
  raw.attacks = edges_at(doc, "attacks", ids, where);
  raw.supports = edges_at(doc, "supports", ids, where);
  try {
    return validate(raw);
  } catch (const Error& e) {
    throw Error(e.code(), (where.empty() ? std::string("/") : where) + ": " +
                              std::string(e.what()).substr(error_code_name(e.code()).size() + 2));
  }
}

json strength_json(const Strength& v, const StrengthDomain& domain) {
  if (!v.defined()) return nullptr;
  if (domain.kind == StrengthDomain::Kind::Qualitative)
    return domain.levels.at(static_cast<std::size_t>(v.value()));
  return v.value();
}

std::string format_strength(const Strength& v, const StrengthDomain& domain) {
  if (!v.defined()) return "undefined";
  if (domain.kind == StrengthDomain::Kind::Qualitative)
    return domain.levels.at(static_cast<std::size_t>(v.value()));
  double x = v.value() == 0.0 ? 0.0 : v.value();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json serialize_qbaf(const Qbaf& g) {
  json args = json::array(), att = json::array(), sup = json::array();
  for (const auto& [a, w] : g.tau())
    args.push_back({{"id", a.name()}, {"strength", strength_json(w, g.domain())}});
  for (const auto& [u, v] : g.attacks()) att.push_back({u.name(), v.name()});
  for (const auto& [u, v] : g.supports()) sup.push_back({u.name(), v.name()});
  return {{"arguments", args}, {"attacks", att}, {"supports", sup}};
}

Af parse_af(const json& doc, const std::string& where) {
  const json& args = arguments_at(doc, where);
  std::set<std::string> ids;
  ArgSet as;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string at = where + "/arguments/" + std::to_string(i);
    if (!args[i].is_object() || !args[i].contains("id")) schema(at, "expected an object with an id");
    if (args[i].contains("strength") && !args[i]["strength"].is_null())
      schema(at + "/strength", "frameworks carry no strengths");
    std::string name = text_at(args[i]["id"], at + "/id");
    if (!ids.insert(name).second)
      throw Error(ErrorCode::DuplicateArg, at + ": argument " + name + " listed twice");
    as.insert(ArgId(name));
  }
  if (doc.contains("supports") && !(doc["supports"].is_array() && doc["supports"].empty()))
    schema(where + "/supports", "frameworks have no supports");
  EdgeSet att;
  for (const auto& [u, v] : edges_at(doc, "attacks", ids, where)) att.emplace(ArgId(u), ArgId(v));
  return make_af(std::move(as), std::move(att));
}

json serialize_af(const Af& af) {
  json args = json::array(), att = json::array();
  for (const auto& a : af.arguments) args.push_back({{"id", a.name()}});
  for (const auto& [u, v] : af.attacks) att.push_back({u.name(), v.name()});
  return {{"arguments", args}, {"attacks", att}, {"supports", json::array()}};
}

ScenarioFile parse_scenario_file(const json& doc) {
  if (!doc.is_object()) schema("", "expected a scenario object");
  ScenarioFile f;
  for (const char* key : {"before", "after"})
    if (!doc.contains(key) || !doc[key].is_object()) schema(std::string("/") + key, "expected a graph");
  f.before = doc["before"];
  f.after = doc["after"];
  if (!doc.contains("topics") || !doc["topics"].is_array() || doc["topics"].size() != 2)
    schema("/topics", "expected two argument ids");
  f.topic_x = text_at(doc["topics"][0], "/topics/0");
  f.topic_y = text_at(doc["topics"][1], "/topics/1");
  auto opt_text = [&](const char* key) -> std::optional<std::string> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc[key].is_string()) schema(std::string("/") + key, "expected a string");
    return doc[key].get<std::string>();
  };
  f.semantics = opt_text("semantics");
  f.qbaf_class = opt_text("class");
  f.mode = opt_text("mode");
  if (doc.contains("epsilon")) {
    if (!doc["epsilon"].is_number()) schema("/epsilon", "expected a number");
    f.epsilon = doc["epsilon"].get<double>();
  }
  return f;
}

json serialize_scenario_file(const ScenarioFile& f) {
  json doc = {{"before", f.before}, {"after", f.after}, {"topics", {f.topic_x, f.topic_y}}};
  if (f.semantics) doc["semantics"] = *f.semantics;
  if (f.qbaf_class) doc["class"] = *f.qbaf_class;
  if (f.mode) doc["mode"] = *f.mode;
  if (f.epsilon) doc["epsilon"] = *f.epsilon;
  return doc;
}

QbafClass parse_class(const std::string& s) {
  if (s == "acyclic") return QbafClass::Acyclic;
  if (s == "all") return QbafClass::All;
  schema("/class", "expected acyclic or all, got '" + s + "'");
}

ConsistencyMode parse_mode(const std::string& s) {
  if (s == "strict") return ConsistencyMode::Strict;
  if (s == "weak") return ConsistencyMode::Weak;
  schema("/mode", "expected strict or weak, got '" + s + "'");
}

ExplanationKind parse_kind(const std::string& s) {
  if (s == "ssi") return ExplanationKind::SSI;
  if (s == "csi") return ExplanationKind::CSI;
  if (s == "nsi") return ExplanationKind::NSI;
  schema("/kind", "expected ssi, csi or nsi, got '" + s + "'");
}

Scenario to_scenario(const ScenarioFile& f) {
  SemanticsSpec sem;
  try {
    sem = SemanticsSpec::by_name(f.semantics.value_or("naive-sum"));
  } catch (const Error&) {
    schema("/semantics", "unknown semantics '" + *f.semantics + "'");
  }
  QbafClass cls = parse_class(f.qbaf_class.value_or(sem.is_stable() ? "all" : "acyclic"));
  ConsistencyMode mode = parse_mode(f.mode.value_or("strict"));
  double eps = f.epsilon.value_or(kDefaultEpsilon);
  ArgId x(f.topic_x), y(f.topic_y);
  if (sem.is_stable()) {
    if (cls != QbafClass::All) schema("/class", "frameworks are explained over all graphs");
    Qbaf g = af_to_qbaf(parse_af(f.before, "/before"));
    Qbaf g2 = af_to_qbaf(parse_af(f.after, "/after"));
    return Scenario(std::move(g), std::move(g2), x, y, sem, cls, mode, eps);
  }
  Qbaf g = parse_qbaf(f.before, sem.domain(), "/before");
  Qbaf g2 = parse_qbaf(f.after, sem.domain(), "/after");
  return Scenario(std::move(g), std::move(g2), x, y, sem, cls, mode, eps);
}

std::string format_family(const std::vector<ArgSet>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ',';
    out += '{';
    bool first = true;
    for (const auto& a : family[i]) {
      if (!first) out += ',';
      out += a.name();
      first = false;
    }
    out += '}';
  }
  return out + "}";
}

json family_json(const std::vector<ArgSet>& family) {
  json out = json::array();
  for (const auto& s : family) {
    json set = json::array();
    for (const auto& a : s) set.push_back(a.name());
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace qbafx
