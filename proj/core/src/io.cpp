#include "crossbial/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "crossbial/error.hpp"

namespace crossbial {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(ErrorKind::Parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string child(const std::string& where, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return where + "/" + k;
}

std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

std::uint64_t index_from_json(const Json& j, std::uint64_t bound, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(where, "expected a non-negative integer");
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v >= bound) parse_fail(where, "index " + std::to_string(v) + " out of range " + std::to_string(bound));
  return v;
}

SpaceList spaces_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of spaces");
  SpaceList out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(space_from_json(j[i], child(where, i)));
  return out;
}

Json spaces_to_json(const SpaceList& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(to_json(x));
  return a;
}

void collect_conductors(const LinMap& f, std::set<int>& out) {
  for (std::uint64_t c = 0; c < f.cols(); ++c)
    for (const Entry& e : f.column(c))
      if (!e.value.is_rational()) out.insert(e.value.conductor());
}

void collect_conductors(const BiunitalPair& b, std::set<int>& out) {
  for (const LinMap* f : {&b.m, &b.eta, &b.delta, &b.eps}) collect_conductors(*f, out);
  if (b.S) collect_conductors(*b.S, out);
}

}  // namespace

const char* version_string() { return "0.3.0"; }

Json to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational().str();
  Json c = Json::array();
  for (const Rational& r : s.coeffs()) c.push_back(r.str());
  return Json{{"conductor", s.conductor()}, {"coeffs", c}};
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    if (j.is_object()) {
      const Json& n = field(j, "conductor", where);
      if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 10000)
        parse_fail(child(where, "conductor"), "conductor must be a positive integer");
      const Json& c = field(j, "coeffs", where);
      if (!c.is_array()) parse_fail(child(where, "coeffs"), "expected an array");
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_string()) parse_fail(child(child(where, "coeffs"), i), "expected a rational string");
        coeffs.push_back(Rational::parse(c[i].get<std::string>()));
      }
      return Scalar::cyclotomic(n.get<int>(), std::move(coeffs));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse && std::string(e.what()).rfind(where.empty() ? "/" : where, 0) == 0) throw;
    parse_fail(where, e.what());
  }
  parse_fail(where, "expected a rational string or a cyclotomic object");
}

Json to_json(const SpaceLabel& s) { return Json{{"name", s.name}, {"dim", s.dim}}; }

SpaceLabel space_from_json(const Json& j, const std::string& where) {
  const Json& n = field(j, "name", where);
  const Json& d = field(j, "dim", where);
  if (!n.is_string()) parse_fail(child(where, "name"), "expected a string");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > (1 << 20))
    parse_fail(child(where, "dim"), "expected a positive integer");
  return SpaceLabel{n.get<std::string>(), d.get<int>()};
}

Json to_json(const LinMap& f) {
  Json entries = Json::array();
  for (std::uint64_t c = 0; c < f.cols(); ++c)
    for (const Entry& e : f.column(c)) entries.push_back(Json::array({e.row, c, to_json(e.value)}));
  return Json{{"dom", spaces_to_json(f.dom())}, {"cod", spaces_to_json(f.cod())}, {"entries", entries}};
}

LinMap linmap_from_json(const Json& j, const std::string& where) {
  SpaceList dom = spaces_from_json(field(j, "dom", where), child(where, "dom"));
  SpaceList cod = spaces_from_json(field(j, "cod", where), child(where, "cod"));
  if (total_dim(dom) > (1u << 24) || total_dim(cod) > (1u << 24)) parse_fail(where, "map too large");
  LinMap f(dom, cod);
  const Json& entries = field(j, "entries", where);
  const std::string ew = child(where, "entries");
  if (!entries.is_array()) parse_fail(ew, "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string w = child(ew, i);
    const Json& e = entries[i];
    if (!e.is_array() || e.size() != 3) parse_fail(w, "expected [row, col, value]");
    const std::uint64_t r = index_from_json(e[0], f.rows(), child(w, 0));
    const std::uint64_t c = index_from_json(e[1], f.cols(), child(w, 1));
    f.add(r, c, scalar_from_json(e[2], child(w, 2)));
  }
  return f;
}

Json to_json(const BiunitalPair& b) {
  Json j{{"space", to_json(b.space)},
         {"m", to_json(b.m)},
         {"eta", to_json(b.eta)},
         {"delta", to_json(b.delta)},
         {"eps", to_json(b.eps)}};
  if (b.S) j["S"] = to_json(*b.S);
  return j;
}

BiunitalPair pair_from_json(const Json& j, const std::string& where) {
  BiunitalPair b;
  b.space = space_from_json(field(j, "space", where), child(where, "space"));
  const SpaceList x{b.space}, xx{b.space, b.space};
  auto get = [&](const char* key, const SpaceList& dom, const SpaceList& cod) {
    const std::string w = child(where, key);
    LinMap f = linmap_from_json(field(j, key, where), w);
    if (!(f.dom() == dom) || !(f.cod() == cod))
      parse_fail(w, "expected a map " + describe(dom) + " -> " + describe(cod));
    return f;
  };
  b.m = get("m", xx, x);
  b.eta = get("eta", {}, x);
  b.delta = get("delta", x, xx);
  b.eps = get("eps", x, {});
  if (j.contains("S")) b.S = get("S", x, x);
  return b;
}

Json to_json(const CheckReport& r) {
  Json a = Json::array();
  for (const AxiomResult& x : r.axioms()) {
    Json j{{"name", x.name}, {"pass", x.pass}};
    if (x.counterexample) {
      const Counterexample& c = *x.counterexample;
      j["counterexample"] = Json{{"output", c.output}, {"input", c.input}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
    }
    if (!x.detail.empty()) j["detail"] = x.detail;
    a.push_back(std::move(j));
  }
  return a;
}

// ---------------------------------------------------------------------------

void Workspace::add_space(const SpaceLabel& s) {
  auto it = spaces.find(s.name);
  if (it != spaces.end() && !(it->second == s))
    fail(ErrorKind::Domain, "space '" + s.name + "' declared with two dimensions");
  spaces[s.name] = s;
}

void Workspace::add_structure(const std::string& name, const BiunitalPair& b) {
  add_space(b.space);
  std::set<int> cs;
  collect_conductors(b, cs);
  for (int c : cs) {
    if (conductor != 1 && conductor != c) fail(ErrorKind::Domain, "workspace mixes conductors");
    conductor = c;
  }
  structures[name] = b;
}

void Workspace::add_map(const std::string& name, const LinMap& f) {
  for (const auto& s : f.dom()) add_space(s);
  for (const auto& s : f.cod()) add_space(s);
  std::set<int> cs;
  collect_conductors(f, cs);
  for (int c : cs) {
    if (conductor != 1 && conductor != c) fail(ErrorKind::Domain, "workspace mixes conductors");
    conductor = c;
  }
  maps[name] = f;
}

const BiunitalPair& Workspace::structure(const std::string& name) const {
  auto it = structures.find(name);
  if (it == structures.end()) fail(ErrorKind::Parse, "workspace has no structure '" + name + "'");
  return it->second;
}

const LinMap& Workspace::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) fail(ErrorKind::Parse, "workspace has no map '" + name + "'");
  return it->second;
}

Json to_json(const Workspace& w) {
  Json spaces = Json::array();
  for (const auto& [_, s] : w.spaces) spaces.push_back(to_json(s));
  Json structures = Json::object(), maps = Json::object();
  for (const auto& [k, b] : w.structures) structures[k] = to_json(b);
  for (const auto& [k, f] : w.maps) maps[k] = to_json(f);
  return Json{{"schema", kWorkspaceSchema},
              {"conductor", w.conductor},
              {"spaces", spaces},
              {"structures", structures},
              {"maps", maps}};
}

Workspace workspace_from_json(const Json& j) {
  const Json& schema = field(j, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != kWorkspaceSchema)
    parse_fail("/schema", std::string("expected \"") + kWorkspaceSchema + "\"");
  const Json& cond = field(j, "conductor", "");
  if (!cond.is_number_integer() || cond.get<long long>() < 1) parse_fail("/conductor", "expected a positive integer");
  Workspace w;
  w.conductor = cond.get<int>();
  const Json& spaces = field(j, "spaces", "");
  if (!spaces.is_array()) parse_fail("/spaces", "expected an array");
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    SpaceLabel s = space_from_json(spaces[i], child("/spaces", i));
    if (w.spaces.count(s.name)) parse_fail(child("/spaces", i), "duplicate space '" + s.name + "'");
    w.spaces[s.name] = s;
  }
  auto check_labels = [&](const SpaceList& list, const std::string& where) {
    for (const auto& s : list) {
      auto it = w.spaces.find(s.name);
      if (it == w.spaces.end() || !(it->second == s)) parse_fail(where, "undeclared space '" + s.name + "'");
    }
  };
  auto check_scalars = [&](const LinMap& f, const std::string& where) {
    std::set<int> cs;
    collect_conductors(f, cs);
    for (int c : cs)
      if (c != w.conductor)
        parse_fail(where, "scalar of conductor " + std::to_string(c) + " in a workspace of conductor " +
                              std::to_string(w.conductor));
  };
  const Json& structures = field(j, "structures", "");
  if (!structures.is_object()) parse_fail("/structures", "expected an object");
  for (const auto& [k, v] : structures.items()) {
    const std::string where = child("/structures", k);
    BiunitalPair b = pair_from_json(v, where);
    check_labels(SpaceList{b.space}, where + "/space");
    for (const LinMap* f : {&b.m, &b.eta, &b.delta, &b.eps}) check_scalars(*f, where);
    if (b.S) check_scalars(*b.S, where);
    w.structures[k] = std::move(b);
  }
  const Json& maps = field(j, "maps", "");
  if (!maps.is_object()) parse_fail("/maps", "expected an object");
  for (const auto& [k, v] : maps.items()) {
    const std::string where = child("/maps", k);
    LinMap f = linmap_from_json(v, where);
    check_labels(f.dom(), where + "/dom");
    check_labels(f.cod(), where + "/cod");
    check_scalars(f, where);
    w.maps[k] = std::move(f);
  }
  return w;
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

Workspace parse_workspace(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("/: ") + e.what());
  }
  return workspace_from_json(j);
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

void save_workspace(const Workspace& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write " + path);
  out << canonical(to_json(w));
  if (!out) fail(ErrorKind::Io, "write to " + path + " failed");
}

Workspace workspace_from_datum(const HopfDatum& d) {
  if (d.braiding.kind() != BraidingKind::VectFlip)
    fail(ErrorKind::Unsupported, "only data over the flip braiding can be saved");
  Workspace w;
  w.add_structure("B1", d.B1);
  w.add_structure("B2", d.B2);
  w.add_map("mu_l", d.mu_l);
  w.add_map("nu_l", d.nu_l);
  w.add_map("mu_r", d.mu_r);
  w.add_map("nu_r", d.nu_r);
  return w;
}

Workspace workspace_from_entry(const ZooEntry& e) {
  Workspace w = workspace_from_datum(e.datum);
  w.add_structure("H", e.H);
  w.add_map("i1", e.system.i1);
  w.add_map("i2", e.system.i2);
  w.add_map("p1", e.system.p1);
  w.add_map("p2", e.system.p2);
  return w;
}

HopfDatum datum_from_workspace(const Workspace& w) {
  HopfDatum d{w.structure("B1"), w.structure("B2"), w.map("mu_l"), w.map("nu_l"), w.map("mu_r"), w.map("nu_r"),
              BraidingProvider::vect_flip()};
  validate_datum(d);
  return d;
}

ProjectionSystem system_from_workspace(const Workspace& w) {
  return ProjectionSystem{w.structure("H"), w.map("i1"), w.map("i2"), w.map("p1"), w.map("p2")};
}

// ---------------------------------------------------------------------------

bool ReportDocument::pass() const {
  for (const auto& [_, r] : checks)
    if (!r.pass()) return false;
  return true;
}

Json ReportDocument::to_json() const {
  Json checks_json = Json::array();
  for (const auto& [name, r] : checks)
    checks_json.push_back(Json{{"group", name}, {"pass", r.pass()}, {"axioms", crossbial::to_json(r)}});
  Json j{{"schema", kReportSchema},
         {"version", version_string()},
         {"command", command},
         {"checks", checks_json},
         {"results", results},
         {"verdict", pass() ? "pass" : "fail"}};
  if (elapsed_ms) j["timing"] = Json{{"elapsed_ms", *elapsed_ms}};
  return j;
}

std::string ReportDocument::text() const {
  std::ostringstream os;
  for (const auto& [name, r] : checks) {
    os << "[" << name << "]\n";
    for (const AxiomResult& a : r.axioms()) {
      os << "  " << (a.pass ? "PASS" : "FAIL") << "  " << a.name;
      if (!a.detail.empty()) os << " (" << a.detail << ")";
      os << "\n";
      if (a.counterexample) {
        const Counterexample& c = *a.counterexample;
        os << "        at output (";
        for (std::size_t i = 0; i < c.output.size(); ++i) os << (i ? "," : "") << c.output[i];
        os << ") input (";
        for (std::size_t i = 0; i < c.input.size(); ++i) os << (i ? "," : "") << c.input[i];
        os << "): " << c.lhs.str() << " vs " << c.rhs.str() << "\n";
      }
    }
  }
  if (!results.empty())
    for (const auto& [k, v] : results.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  os << "verdict: " << (pass() ? "pass" : "fail") << "\n";
  if (elapsed_ms) os << "elapsed: " << *elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace crossbial
