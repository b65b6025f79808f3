#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "crossbial/error.hpp"
#include "crossbial/io.hpp"

using namespace crossbial;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return Invocation{code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("crossbial-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& f) const { return (dir_ / f).string(); }

  fs::path dir_;
};

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Domain;
}

}  // namespace

TEST(Json, ScalarsRoundTrip) {
  for (const Scalar& s : {Scalar(0), Scalar(Rational(-7, 3)), root_of_unity(5, 2) + Scalar(Rational(1, 2))}) {
    EXPECT_EQ(scalar_from_json(to_json(s)), s);
  }
  EXPECT_EQ(to_json(Scalar(Rational(2, 4))), Json("1/2"));
}

TEST(Json, MalformedRationalIsAParseErrorWithPointer) {
  Json j = to_json(LinMap::identity(SpaceLabel{"X", 2}));
  j["entries"][1][2] = "1/0";
  try {
    linmap_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("/entries/1/2"), std::string::npos) << e.what();
  }
}

TEST(Json, EmptyWorkspaceRoundTrips) {
  Workspace w;
  const std::string text = canonical(to_json(w));
  EXPECT_EQ(canonical(to_json(parse_workspace(text))), text);
}

TEST(Json, SweedlerWorkspaceRoundTripsByteForByte) {
  Workspace w = workspace_from_entry(radford({2, 1, 2, 1}));
  const std::string text = canonical(to_json(w));
  Workspace back = parse_workspace(text);
  EXPECT_EQ(canonical(to_json(back)), text);
  EXPECT_EQ(back.structure("H").m, w.structure("H").m);
  HopfDatum d = datum_from_workspace(back);
  EXPECT_TRUE(check_hopf_datum(d).pass());
}

TEST(Json, CyclotomicWorkspaceRoundTrips) {
  Workspace w = workspace_from_entry(radford({3, 1, 3, 1}));
  const std::string text = canonical(to_json(w));
  EXPECT_EQ(canonical(to_json(parse_workspace(text))), text);
}

TEST(Json, SchemaViolations) {
  EXPECT_EQ(parse_kind("{"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind(R"({"schema": "other/1"})"), ErrorKind::Parse);
  Json j = to_json(workspace_from_entry(radford({2, 1, 2, 1})));
  j["structures"]["H"]["m"]["entries"][0] = "oops";
  EXPECT_EQ(parse_kind(j.dump()), ErrorKind::Parse);
}

TEST_F(TempDir, RadfordPipelineChecksAndOrders) {
  const std::string s = path("s.json");
  Invocation b = run({"zoo", "build", "radford", "--n", "2", "--q-exp", "1", "--N", "2", "--nu", "1", "-o", s});
  ASSERT_EQ(b.code, 0) << b.err;
  ASSERT_TRUE(fs::exists(s));
  Invocation c = run({"check", "hopf", "--in", s});
  EXPECT_EQ(c.code, 0) << c.out << c.err;
  Invocation o = run({"--format", "json", "datum", "order", "--in", s, "--max-n", "8"});
  ASSERT_EQ(o.code, 0) << o.err;
  Json report = Json::parse(o.out);
  EXPECT_EQ(report["schema"], "crossbial.report/1");
  EXPECT_EQ(report["verdict"], "pass");
  ASSERT_TRUE(report["results"]["order"].is_number_integer());
  EXPECT_LE(report["results"]["order"].get<int>(), 2);
}

TEST_F(TempDir, CorruptedProductFailsWithNamedAxiom) {
  const std::string s = path("s.json"), bad = path("corrupted.json");
  ASSERT_EQ(run({"zoo", "build", "radford", "--n", "2", "--N", "2", "-o", s}).code, 0);
  Json j = Json::parse(std::ifstream(s));
  Json& entries = j["structures"]["H"]["m"]["entries"];
  entries.push_back(Json::array({1, 0, "1"}));
  std::ofstream(bad) << j.dump();
  Invocation c = run({"--format", "json", "check", "hopf", "--in", bad});
  EXPECT_EQ(c.code, 1);
  Json report = Json::parse(c.out);
  EXPECT_EQ(report["verdict"], "fail");
  bool named = false;
  for (const auto& a : report["checks"][0]["axioms"])
    if (a["name"] == "associativity" && !a["pass"].get<bool>()) named = true;
  EXPECT_TRUE(named) << c.out;
}

TEST_F(TempDir, ReportsAreDeterministic) {
  const std::string s = path("s.json");
  ASSERT_EQ(run({"zoo", "build", "entry", "--name", "ore-C2", "-o", s}).code, 0);
  Invocation a = run({"--format", "json", "datum", "classify", "--in", s});
  Invocation b = run({"--format", "json", "datum", "classify", "--in", s});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Invocation t = run({"--format", "json", "--timing", "datum", "classify", "--in", s});
  Json jt = Json::parse(t.out), ja = Json::parse(a.out);
  EXPECT_TRUE(jt.contains("timing"));
  EXPECT_FALSE(ja.contains("timing"));
  jt.erase("timing");
  jt["command"] = ja["command"];
  EXPECT_EQ(jt, ja);
}

TEST_F(TempDir, CrossTwistPairingAndDoubleBiproduct) {
  const std::string r = path("r.json"), b = path("b.json"), t = path("t.json"), p = path("p.json");
  ASSERT_EQ(run({"zoo", "build", "radford", "--n", "3", "--N", "3", "-o", r}).code, 0);
  EXPECT_EQ(run({"cross", "verify", "--in", r}).code, 0);
  EXPECT_EQ(run({"cross", "decompose", "--in", r}).code, 0);
  EXPECT_EQ(run({"datum", "check", "--in", r}).code, 0);
  ASSERT_EQ(run({"zoo", "build", "bicharacter", "--N", "3", "-o", b}).code, 0);
  EXPECT_EQ(run({"twist", "validate", "--in", b}).code, 0);
  EXPECT_EQ(run({"twist", "apply", "--in", b, "-o", t}).code, 0);
  EXPECT_EQ(run({"check", "hopf", "--in", t}).code, 0);
  ASSERT_EQ(run({"zoo", "build", "pairing", "--N", "3", "-o", p}).code, 0);
  EXPECT_EQ(run({"pairing", "check", "--in", p}).code, 0);
  Invocation m = run({"--format", "json", "pairing", "matched-pair", "--in", p});
  EXPECT_EQ(m.code, 0);
  EXPECT_TRUE(Json::parse(m.out)["results"]["is_matched_pair"].get<bool>());
  EXPECT_EQ(run({"double-biproduct", "build", "--N", "2", "--alpha", "-1"}).code, 0);
}

TEST_F(TempDir, UsageAndIoErrorsExitTwo) {
  EXPECT_EQ(run({"--bogus"}).code, 2);
  EXPECT_EQ(run({"check", "hopf"}).code, 2);
  EXPECT_EQ(run({"check", "hopf", "--in", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "zoo", "list"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  std::ofstream(path("junk.json")) << "{not json";
  EXPECT_EQ(run({"check", "hopf", "--in", path("junk.json")}).code, 2);
}

TEST_F(TempDir, DimensionCapFromEnvironment) {
  const std::string s = path("s.json");
  ASSERT_EQ(run({"zoo", "build", "radford", "--n", "2", "--N", "4", "-o", s}).code, 0);
  ::setenv("CROSSBIAL_MAX_DIM", "4", 1);
  Invocation c = run({"check", "hopf", "--in", s});
  ::unsetenv("CROSSBIAL_MAX_DIM");
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("CROSSBIAL_MAX_DIM"), std::string::npos);
}
