#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crossbial/zoo.hpp"

namespace crossbial {

using Json = nlohmann::json;

inline constexpr const char* kWorkspaceSchema = "crossbial.workspace/1";
inline constexpr const char* kReportSchema = "crossbial.report/1";
const char* version_string();

// Rationals are strings "p" or "p/q"; cyclotomic values are
// {"conductor": n, "coeffs": [...]} in the power basis.
Json to_json(const Scalar& s);
Json to_json(const SpaceLabel& s);
Json to_json(const LinMap& f);
Json to_json(const BiunitalPair& b);
Json to_json(const CheckReport& r);

// Each parser reports failures as parse errors prefixed by the JSON pointer
// of the offending node.
Scalar scalar_from_json(const Json& j, const std::string& where = "");
SpaceLabel space_from_json(const Json& j, const std::string& where = "");
LinMap linmap_from_json(const Json& j, const std::string& where = "");
BiunitalPair pair_from_json(const Json& j, const std::string& where = "");

struct Workspace {
  int conductor = 1;
  std::map<std::string, SpaceLabel> spaces;
  std::map<std::string, BiunitalPair> structures;
  std::map<std::string, LinMap> maps;

  void add_space(const SpaceLabel& s);
  void add_structure(const std::string& name, const BiunitalPair& b);
  void add_map(const std::string& name, const LinMap& f);
  const BiunitalPair& structure(const std::string& name) const;
  const LinMap& map(const std::string& name) const;
  bool has_map(const std::string& name) const { return maps.count(name) > 0; }
};

Json to_json(const Workspace& w);
Workspace workspace_from_json(const Json& j);
// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);
Workspace load_workspace(const std::string& path);
void save_workspace(const Workspace& w, const std::string& path);
Workspace parse_workspace(const std::string& text);

// Structures H, B1, B2 and maps i1, i2, p1, p2, mu_l, nu_l, mu_r, nu_r.
Workspace workspace_from_entry(const ZooEntry& e);
Workspace workspace_from_datum(const HopfDatum& d);
HopfDatum datum_from_workspace(const Workspace& w);
ProjectionSystem system_from_workspace(const Workspace& w);

struct ReportDocument {
  std::vector<std::string> command;
  std::vector<std::pair<std::string, CheckReport>> checks;
  Json results = Json::object();
  std::optional<double> elapsed_ms;

  bool pass() const;
  Json to_json() const;
  std::string text() const;
};

}  // namespace crossbial
