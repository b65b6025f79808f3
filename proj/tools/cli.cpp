#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crossbial/error.hpp"
#include "crossbial/groups.hpp"
#include "crossbial/io.hpp"

namespace crossbial::cli {

namespace {

using Terms = std::vector<std::pair<std::uint64_t, Scalar>>;

struct Options {
  std::string format = "text";
  bool timing = false;
  std::string in, out, structure = "H", kind, name, spec, chi = "chi";
  int n = 2, q_exp = 1, N = 2, nu = 1, max_n = 8, alpha = 0;
};

int max_dim() {
  const char* v = std::getenv("CROSSBIAL_MAX_DIM");
  if (!v || !*v) return 64;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0' || x < 1) fail(ErrorKind::Configuration, std::string("CROSSBIAL_MAX_DIM must be a positive integer, got '") + v + "'");
  return static_cast<int>(x);
}

void cap(std::uint64_t dim, const std::string& what) {
  const int limit = max_dim();
  if (dim > static_cast<std::uint64_t>(limit))
    fail(ErrorKind::Configuration, what + " has dimension " + std::to_string(dim) + ", above CROSSBIAL_MAX_DIM=" +
                                       std::to_string(limit));
}

void cap(const Workspace& w) {
  for (const auto& [name, s] : w.structures) cap(s.dim(), "structure '" + name + "'");
}

Workspace load(const Options& o) {
  if (o.in.empty()) fail(ErrorKind::Usage, "--in is required");
  Workspace w = load_workspace(o.in);
  cap(w);
  return w;
}

void maybe_save(const Workspace& w, const Options& o) {
  if (!o.out.empty()) save_workspace(w, o.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OreParams ore_from_json(const Json& j) {
  try {
    OreParams p;
    p.group = j.at("group").get<std::vector<int>>();
    p.t = j.at("t").get<int>();
    p.g = j.at("g").get<std::vector<std::vector<int>>>();
    p.g_star = j.at("g_star").get<std::vector<std::vector<int>>>();
    return p;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("ore spec: ") + e.what());
  }
}

StructureKind parse_kind(const std::string& k) {
  if (k == "algebra") return StructureKind::Algebra;
  if (k == "coalgebra") return StructureKind::Coalgebra;
  if (k == "bialgebra") return StructureKind::Bialgebra;
  if (k == "hopf") return StructureKind::Hopf;
  fail(ErrorKind::Usage, "unknown structure kind '" + k + "'");
}

Json pattern_json(const HopfDatum& d) {
  Classification c = classify(d);
  Json containing = Json::array();
  for (Family f : c.containing) containing.push_back(to_string(f));
  return Json{{"pattern", c.pattern.str()}, {"family", to_string(c.family)}, {"containing", containing}};
}

void entry_report(ReportDocument& doc, const ZooEntry& e) {
  cap(e.H.dim(), e.name);
  doc.checks.emplace_back(e.H.space.name, check_axioms(e.H, e.H.S ? StructureKind::Hopf : StructureKind::Bialgebra));
  doc.checks.emplace_back("Hopf datum", check_hopf_datum(e.datum));
  doc.results["entry"] = e.name;
  doc.results["dim"] = e.H.dim();
  doc.results["classification"] = pattern_json(e.datum);
}

// ---------------------------------------------------------------------------

ReportDocument zoo_list(const Options&) {
  ReportDocument doc;
  doc.results["entries"] = zoo_names();
  return doc;
}

ReportDocument zoo_build(const Options& o) {
  ReportDocument doc;
  Workspace w;
  if (o.kind == "radford") {
    RadfordParams p{o.n, o.q_exp, o.N, o.nu};
    validate(p);
    cap(static_cast<std::uint64_t>(p.r()) * p.N, "radford" + p.str());
    ZooEntry e = radford(p);
    entry_report(doc, e);
    w = workspace_from_entry(e);
  } else if (o.kind == "group") {
    cap(o.N, "kC_N");
    HopfAlgebraData H = group_algebra(o.N);
    doc.checks.emplace_back(H.space.name, check_axioms(H, StructureKind::Hopf));
    w.add_structure("H", H);
  } else if (o.kind == "ore") {
    if (o.spec.empty()) fail(ErrorKind::Usage, "--spec is required for ore");
    Json j;
    try {
      j = Json::parse(read_file(o.spec));
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::Parse, std::string("ore spec: ") + e.what());
    }
    ZooEntry e = ore_finite(ore_from_json(j));
    entry_report(doc, e);
    w = workspace_from_entry(e);
  } else if (o.kind == "entry") {
    ZooEntry e = zoo_entry(o.name);
    entry_report(doc, e);
    w = workspace_from_entry(e);
  } else if (o.kind == "bicharacter") {
    cap(static_cast<std::uint64_t>(o.N) * o.N, "kC_N×C_N");
    HopfAlgebraData H = group_algebra(std::vector<int>{o.N, o.N});
    const Scalar z = root_of_unity(o.N, 1);
    const std::uint64_t D = H.dim(), N = o.N;
    LinMap chi = LinMap::from_columns(SpaceList{H.space, H.space}, {}, [&](std::uint64_t c) {
      return Terms{{0, z.pow(static_cast<long long>((c / D) % N * ((c % D) / N)))}};
    });
    doc.checks.emplace_back(H.space.name, check_axioms(H, StructureKind::Hopf));
    w.add_structure("H", H);
    w.add_map("chi", chi);
  } else if (o.kind == "pairing") {
    cap(o.N, "kC_N");
    HopfAlgebraData H = group_algebra(o.N), A = dual_group_algebra(o.N);
    w.add_structure("H", H);
    w.add_structure("A", A);
    w.add_map("form", standard_pairing(H, A));
    doc.checks.emplace_back("pairing", validate_pairing(DualPairing{H, A, w.map("form")}));
  } else {
    fail(ErrorKind::Usage, "unknown zoo kind '" + o.kind + "'");
  }
  maybe_save(w, o);
  return doc;
}

ReportDocument check_cmd(const Options& o) {
  Workspace w = load(o);
  ReportDocument doc;
  const BiunitalPair& b = w.structure(o.structure);
  doc.checks.emplace_back(o.structure, check_axioms(b, parse_kind(o.kind)));
  return doc;
}

ReportDocument datum_cmd(const Options& o, const std::string& sub) {
  Workspace w = load(o);
  HopfDatum d = datum_from_workspace(w);
  cap(static_cast<std::uint64_t>(d.B1.dim()) * d.B2.dim(), "B1⊗B2");
  ReportDocument doc;
  if (sub == "check") {
    doc.checks.emplace_back("Hopf datum", check_hopf_datum(d));
  } else if (sub == "order") {
    OrderResult r = recursion_order(d, o.max_n);
    CheckReport c;
    c.add_verdict("order found within cap", r.order.has_value());
    c.add_verdict("Phi stable at the order", r.stable_at_order);
    doc.checks.emplace_back("recursion order", c);
    doc.results["order"] = r.order ? Json(*r.order) : Json(nullptr);
    doc.results["cap"] = r.cap;
  } else if (sub == "classify") {
    TrivalenceResult t = trivalence(d);
    CheckReport c;
    c.add_verdict("trivial (co)actions match unit/counit bialgebra maps", t.equivalence_holds);
    doc.checks.emplace_back("trivalence", c);
    doc.results["classification"] = pattern_json(d);
    doc.results["trivalent"] = t.trivalent;
    doc.results["witnesses"] = t.witnesses;
  } else if (sub == "build") {
    ZooEntry e = entry_from_datum("datum", d);
    doc.checks.emplace_back("cross product", check_axioms(e.H, StructureKind::Bialgebra));
    maybe_save(workspace_from_entry(e), o);
  }
  return doc;
}

ReportDocument cross_cmd(const Options& o, const std::string& sub) {
  Workspace w = load(o);
  ProjectionSystem sys = system_from_workspace(w);
  ReportDocument doc;
  if (sub == "decompose") {
    Decomposition dec = decompose(sys);
    HopfDatum d = bat_to_hopf_datum(dec.bat);
    doc.checks.emplace_back("m_A∘(i1⊗i2)", morphism_report(dec.iso, build_cross_product(dec.bat), sys.A));
    doc.checks.emplace_back("Hopf datum", check_hopf_datum(d));
    doc.results["classification"] = pattern_json(d);
    Workspace out = workspace_from_datum(d);
    out.add_structure("H", sys.A);
    maybe_save(out, o);
  } else {
    CheckReport r = verify_trivalent_equivalences(sys);
    CheckReport agree;
    for (const AxiomResult& a : r.axioms()) {
      if (a.name == "verdicts agree") agree.add_verdict(a.name, a.pass);
      else doc.results[a.name] = a.pass;
    }
    doc.checks.emplace_back("trivalent equivalences", agree);
  }
  return doc;
}

ReportDocument twist_cmd(const Options& o, const std::string& sub) {
  Workspace w = load(o);
  const BiunitalPair& b = w.structure(o.structure);
  TwoCocycle c{b, w.map(o.chi), std::nullopt};
  ReportDocument doc;
  if (sub == "validate") {
    doc.checks.emplace_back("2-cocycle", validate_cocycle(c));
  } else {
    BiunitalPair t = twist(b, c);
    doc.checks.emplace_back("twisted", check_axioms(t, t.S ? StructureKind::Hopf : StructureKind::Bialgebra));
    doc.results["multiplication changed"] = !(t.m == b.m);
    Workspace out;
    out.add_structure("H", t);
    maybe_save(out, o);
  }
  return doc;
}

ReportDocument pairing_cmd(const Options& o, const std::string& sub) {
  Workspace w = load(o);
  DualPairing p{w.structure("H"), w.structure("A"), w.map("form")};
  ReportDocument doc;
  if (sub == "check") {
    doc.checks.emplace_back("pairing", validate_pairing(p));
  } else {
    MatchedPairResult r = matched_pair_from_pairing(p, BraidingProvider::vect_flip());
    CheckReport c;
    c.add_verdict("matched pair iff involutive braiding", r.is_matched_pair == r.braiding_involutive);
    doc.checks.emplace_back("matched pair", c);
    doc.results["is_matched_pair"] = r.is_matched_pair;
    doc.results["braiding_involutive"] = r.braiding_involutive;
  }
  return doc;
}

ReportDocument double_biproduct_cmd(const Options& o) {
  cap(static_cast<std::uint64_t>(o.N) * 4, "C⊗H⊗B");
  DoubleBiproductInput in = sweedler_crossed_modules(o.N);
  in.rho = LinMap::from_columns(SpaceList{in.B.space, in.C.space}, {}, [&](std::uint64_t c) {
    Terms t;
    if (c == 0) t.emplace_back(0, Scalar(1));
    if (c == 3 && o.alpha != 0) t.emplace_back(0, Scalar(o.alpha));
    return t;
  });
  DoubleBiproductResult r = double_biproduct(in);
  ReportDocument doc;
  doc.checks.emplace_back("double biproduct", r.report);
  doc.results["dim"] = r.Z.dim();
  doc.results["multiplication changed"] = !(r.Z_twisted.m == r.Z.m);
  Workspace out;
  out.add_structure("Z", r.Z);
  out.add_structure("Z_twisted", r.Z_twisted);
  out.add_map("rho_hat", r.rho_hat.chi);
  maybe_save(out, o);
  return doc;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Io:
    case ErrorKind::Usage:
    case ErrorKind::Configuration:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<ReportDocument()> action;
  CLI::App app{"Exact verification of cross product bialgebras and Hopf data", "crossbial"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "Append wall-clock timing to the report");

  auto in_opt = [&](CLI::App* a) { a->add_option("--in", o.in, "Workspace file")->required(); };
  auto out_opt = [&](CLI::App* a) { a->add_option("-o,--out", o.out, "Output workspace file"); };

  CLI::App* zoo = app.add_subcommand("zoo", "Build example structures");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "List the named zoo entries")->callback([&] { action = [&] { return zoo_list(o); }; });
  CLI::App* build = zoo->add_subcommand("build", "Build a zoo structure");
  build->add_option("kind", o.kind, "radford | group | ore | entry | bicharacter | pairing")->required();
  build->add_option("--n", o.n, "Radford n");
  build->add_option("--q-exp", o.q_exp, "Radford q exponent");
  build->add_option("--N", o.N, "Group order");
  build->add_option("--nu", o.nu, "Radford nu");
  build->add_option("--spec", o.spec, "Ore parameter file");
  build->add_option("--name", o.name, "Zoo entry name");
  out_opt(build);
  build->callback([&] { action = [&] { return zoo_build(o); }; });

  CLI::App* check = app.add_subcommand("check", "Check the axioms of a stored structure");
  check->add_option("kind", o.kind, "algebra | coalgebra | bialgebra | hopf")->required();
  in_opt(check);
  check->add_option("--structure", o.structure, "Structure name");
  check->callback([&] { action = [&] { return check_cmd(o); }; });

  CLI::App* datum = app.add_subcommand("datum", "Hopf data");
  datum->require_subcommand(1);
  for (const char* sub : {"check", "order", "classify", "build"}) {
    CLI::App* s = datum->add_subcommand(sub);
    in_opt(s);
    if (std::string(sub) == "order") s->add_option("--max-n", o.max_n, "Largest order tried");
    if (std::string(sub) == "build") out_opt(s);
    const std::string name = sub;
    s->callback([&, name] { action = [&, name] { return datum_cmd(o, name); }; });
  }

  CLI::App* cross = app.add_subcommand("cross", "Projection systems and cross products");
  cross->require_subcommand(1);
  for (const char* sub : {"decompose", "verify"}) {
    CLI::App* s = cross->add_subcommand(sub);
    in_opt(s);
    if (std::string(sub) == "decompose") out_opt(s);
    const std::string name = sub;
    s->callback([&, name] { action = [&, name] { return cross_cmd(o, name); }; });
  }

  CLI::App* twist = app.add_subcommand("twist", "2-cocycles and twisting");
  twist->require_subcommand(1);
  for (const char* sub : {"validate", "apply"}) {
    CLI::App* s = twist->add_subcommand(sub);
    in_opt(s);
    s->add_option("--structure", o.structure, "Host structure name");
    s->add_option("--chi", o.chi, "Cocycle map name");
    if (std::string(sub) == "apply") out_opt(s);
    const std::string name = sub;
    s->callback([&, name] { action = [&, name] { return twist_cmd(o, name); }; });
  }

  CLI::App* pairing = app.add_subcommand("pairing", "Dual pairings and matched pairs");
  pairing->require_subcommand(1);
  for (const char* sub : {"check", "matched-pair"}) {
    CLI::App* s = pairing->add_subcommand(sub);
    in_opt(s);
    const std::string name = sub;
    s->callback([&, name] { action = [&, name] { return pairing_cmd(o, name); }; });
  }

  CLI::App* dbp = app.add_subcommand("double-biproduct", "Double biproduct of crossed-module bialgebras");
  dbp->require_subcommand(1);
  CLI::App* dbuild = dbp->add_subcommand("build");
  dbuild->add_option("--N", o.N, "Order of the cyclic group");
  dbuild->add_option("--alpha", o.alpha, "Value of rho on x⊗x");
  out_opt(dbuild);
  dbuild->callback([&] { action = [&] { return double_biproduct_cmd(o); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    ReportDocument doc = action();
    doc.command = args;
    if (o.timing)
      doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out << (o.format == "json" ? canonical(doc.to_json()) : doc.text());
    return doc.pass() ? 0 : 1;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace crossbial::cli
