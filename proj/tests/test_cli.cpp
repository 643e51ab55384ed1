#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/cli/app.hpp"
#include "toric/cli/report.hpp"
#include "toric/cli/spec_parser.hpp"

using namespace toric;
using namespace toric::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "toric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(SpecParser, Kinds) {
  auto p = parse_domain_spec("polydisk:1,3/2");
  EXPECT_EQ(p.kind(), RegionKind::Rectangle);
  EXPECT_EQ(p.y_intercept().rational(), Rational(3, 2));
  EXPECT_EQ(parse_domain_spec("quad:4,5,1,2").kind(), RegionKind::ConcavePolygon);
  auto lp = parse_domain_spec("lp:3/2,1");
  EXPECT_EQ(lp.kind(), RegionKind::LpBall);
  EXPECT_TRUE(lp.is_concave());
  EXPECT_EQ(parse_domain_spec("ellipsoid:1,2").kind(), RegionKind::Triangle);
  EXPECT_TRUE(parse_domain_spec("convex-poly:1,0;1,1;0,1").is_convex());
  EXPECT_TRUE(parse_domain_spec("convex-poly:0,0;1,0;1,1;0,1").is_convex());
  EXPECT_TRUE(parse_domain_spec("concave-poly:1,0;1/3,1/3;0,1").is_concave());
}

TEST(SpecParser, SlashSeparatedPointsWhenUnambiguous) {
  auto a = parse_domain_spec("concave-poly:3/0;1/1;0/3");
  auto b = parse_domain_spec("concave-poly:3,0;1,1;0,3");
  EXPECT_EQ(a.vertices(), b.vertices());
}

TEST(SpecParser, ErrorsCarryPositions) {
  try {
    parse_domain_spec("polydisk:1,x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 11u);
  }
  EXPECT_THROW(parse_domain_spec("blob:1"), ParseError);
  EXPECT_THROW(parse_domain_spec("polydisk"), ParseError);
  EXPECT_THROW(parse_domain_spec("quad:1,2,3"), ParseError);
  try {
    parse_domain_spec("convex-poly:2,0;1/2,1/2;0,2");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "validation failures are not parse errors";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("not convex"), std::string::npos) << e.what();
  }
}

TEST(Cli, WeightsWorkedExample) {
  auto r = run_cli({"weights", "--quad", "4,5,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["result"]["weights"], Json::parse(R"(["3","1","1","1","1"])"));
  auto c = run_cli({"weights", "--quad", "1,1,1,1", "--convex"}).json();
  EXPECT_EQ(c["result"]["head"], "2");
}

TEST(Cli, PackReportsTraceAndInvariants) {
  auto j = run_cli({"pack", "--t", "2", "--weights", "1,1,1,1"}).json();
  EXPECT_EQ(j["result"]["result"], "Yes");
  EXPECT_EQ(j["result"]["conserved"]["linear"], "2");
  EXPECT_FALSE(j["result"]["steps"].empty());
  auto s = run_cli({"pack", "--weights", "1,1,1,1,1,1,1,1", "--solve", "--tol", "1/1000"}).json();
  EXPECT_LE(Rational::parse(s["result"]["bracket"]["no"].get<std::string>()), Rational(17, 6));
  EXPECT_GE(Rational::parse(s["result"]["bracket"]["yes"].get<std::string>()), Rational(17, 6));
}

TEST(Cli, VerdictPolydisk) {
  auto r = run_cli({"verdict", "--domain", "polydisk:1,9/5"});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["result"]["status"], "Knotted");
  EXPECT_EQ(j["result"]["alpha_window"][0]["exact"], "411/266");
  EXPECT_EQ(j["result"]["alpha_window"][1]["exact"], "14/9");
  EXPECT_FALSE(j["result"]["certificates"].empty());
  EXPECT_FALSE(j["result"]["certificates"][0]["route"][0]["packing"]["steps"].is_null());
}

TEST(Cli, AssertKnottedExitCodes) {
  EXPECT_EQ(run_cli({"verdict", "--domain", "polydisk:1,2", "--assert-knotted"}).code, 1);
  EXPECT_EQ(run_cli({"--assert-knotted", "verdict", "--domain", "polydisk:1,3/2"}).code, 0);
  EXPECT_EQ(run_cli({"verdict", "--domain", "polydisk:1,2"}).code, 0);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verdict", "--domain", "polydisk:1"}).code, 2);
  EXPECT_EQ(run_cli({"weights", "--quad", "1,1,2,0"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, ProductVerdict) {
  auto j = run_cli({"verdict", "--product", "--domain", "polydisk:1,1", "--factors", "21/10,3"}).json();
  EXPECT_EQ(j["result"]["status"], "Knotted");
}

TEST(Cli, DeltaAndBarcode) {
  auto d = run_cli({"delta", "--domain", "polydisk:1,1"}).json();
  EXPECT_EQ(d["result"]["delta_ell_upper"]["exact"], "3/2");
  auto b = run_cli({"filtered", "barcode", "--domain", "polydisk:1,1", "--delta", "1/10", "--degree", "3",
                    "--level", "3/2", "--to", "9/5"})
               .json();
  EXPECT_EQ(b["result"]["rank"], 2);
  EXPECT_EQ(b["result"]["inclusion_rank"], 2);
}

TEST(Cli, SelftestAndSeedSources) {
  auto r = run_cli({"filtered", "selftest", "--cases", "20", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["result"]["pass"], true);
  EXPECT_EQ(j["provenance"]["seed"], 7);
  setenv("TORIC_SEED", "99", 1);
  EXPECT_EQ(run_cli({"filtered", "selftest", "--cases", "5"}).json()["provenance"]["seed"], 99);
  unsetenv("TORIC_SEED");
  EXPECT_EQ(run_cli({"filtered", "selftest", "--cases", "5"}).json()["provenance"]["seed"], 1);
}

TEST(Cli, DeterministicReports) {
  const std::vector<std::vector<std::string>> cmds = {
      {"filtered", "selftest", "--cases", "30", "--seed", "3"},
      {"phi", "verify", "--samples", "500", "--seed", "4"},
      {"phi", "square", "--c", "1.1", "--samples", "500", "--symplectic-samples", "20", "--seed", "5"},
      {"verdict", "--domain", "lp:3/2,1"}};
  for (const auto& c : cmds) {
    auto a = run_cli(c), b = run_cli(c);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0) << a.err;
  }
}

TEST(Cli, ReportRoundTrip) {
  auto r = run_cli({"verdict", "--domain", "quad:4,5,1,2", "--timing"});
  auto j = r.json();
  EXPECT_TRUE(j.contains("timing_ms"));
  Report rep = Report::from_json(j);
  EXPECT_EQ(rep.to_json(), j);
  auto plain = run_cli({"verdict", "--domain", "quad:4,5,1,2"}).json();
  EXPECT_FALSE(plain.contains("timing_ms"));
}

TEST(Cli, RationalsAreStrings) {
  auto j = run_cli({"verdict", "--domain", "quad:4,5,1,2"}).json();
  EXPECT_TRUE(j["result"]["delta_ell_upper"]["exact"].is_string());
  EXPECT_TRUE(j["result"]["delta_u_lower"]["exact"].is_string());
  auto lp = run_cli({"verdict", "--domain", "lp:3/2,1"}).json();
  EXPECT_TRUE(lp["result"]["delta_ell_upper"].contains("error_bar"));
}

TEST(Cli, PhiEvalAndConfigOverrides) {
  auto j = run_cli({"phi", "eval", "--w", "0.5,0.2", "--z", "0.3,-1"}).json();
  EXPECT_LT(j["result"]["agreement"].get<double>(), 1e-9);
  const auto path = std::filesystem::temp_directory_path() / "toric_test_config.txt";
  {
    std::ofstream f(path);
    f << "# tolerances\nagreement = 1e-8\nsymplectic=2e-6\n";
  }
  auto c = run_cli({"--config", path.string(), "phi", "verify", "--samples", "100"}).json();
  EXPECT_EQ(c["provenance"]["tolerances"]["agreement"], 1e-8);
  EXPECT_EQ(c["provenance"]["tolerances"]["symplectic"], 2e-6);
  auto t = run_cli({"phi", "verify", "--samples", "100", "--tolerances", "unit_norm=1e-11"}).json();
  EXPECT_EQ(t["provenance"]["tolerances"]["unit_norm"], 1e-11);
  EXPECT_EQ(run_cli({"phi", "verify", "--tolerances", "bogus=1"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, SquareEmitsCsv) {
  const auto path = std::filesystem::temp_directory_path() / "toric_square.csv";
  auto r = run_cli({"phi", "square", "--c", "1.1", "--samples", "300", "--symplectic-samples", "10",
                    "--emit-csv", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(f, line)) ++lines;
  EXPECT_EQ(lines, 301u);
  std::filesystem::remove(path);
  auto past = run_cli({"phi", "square", "--c", "1.2", "--samples", "2000", "--symplectic-samples", "10"});
  EXPECT_EQ(past.code, 0);
  EXPECT_TRUE(past.json()["result"]["pass"].is_null());
  EXPECT_GT(past.json()["result"]["parabola_unsafe"].get<int>(), 0);
}
