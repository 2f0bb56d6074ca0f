#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qbafx/change.hpp"
#include "qbafx/search.hpp"
#include "qbafx/stable.hpp"

namespace qbafx {

using json = nlohmann::json;

json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

Qbaf parse_qbaf(const json& doc, const StrengthDomain& domain, const std::string& where = "");
json serialize_qbaf(const Qbaf& g);

Af parse_af(const json& doc, const std::string& where = "");
json serialize_af(const Af& af);

struct ScenarioFile {
  json before;
  json after;
  std::string topic_x;
  std::string topic_y;
  // absent fields fall back to naive-sum, acyclic, strict and the default epsilon
  std::optional<std::string> semantics;
  std::optional<std::string> qbaf_class;
  std::optional<std::string> mode;
  std::optional<double> epsilon;
};

ScenarioFile parse_scenario_file(const json& doc);
json serialize_scenario_file(const ScenarioFile& f);

QbafClass parse_class(const std::string& s);
ConsistencyMode parse_mode(const std::string& s);
ExplanationKind parse_kind(const std::string& s);

Scenario to_scenario(const ScenarioFile& f);

std::string format_strength(const Strength& v, const StrengthDomain& domain);
json strength_json(const Strength& v, const StrengthDomain& domain);
std::string format_family(const std::vector<ArgSet>& family);
json family_json(const std::vector<ArgSet>& family);

}  // namespace qbafx
