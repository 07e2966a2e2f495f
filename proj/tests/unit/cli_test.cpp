#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "statmon/cli.hpp"
#include "statmon/serialization.hpp"

namespace statmon {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "statmon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("statmon_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, CheckInsideOnBoundary) {
  const auto r = run({"check", "--v", "0.6,0.6,-0.6"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["inside"].get<bool>());
  EXPECT_NEAR(j["sqrt_margin"].get<double>(), 0.0, 1e-9);
}

TEST(Cli, CheckOutside) {
  const auto r = run({"check", "--v", "1,1,-1"});
  EXPECT_EQ(r.code, kExitOutside);
  EXPECT_FALSE(Json::parse(r.out)["inside"].get<bool>());
}

TEST(Cli, CheckValidation) {
  EXPECT_EQ(run({"check", "--v", "1,2"}).code, kExitInvalid);
  EXPECT_EQ(run({"check", "--v", "2,0,0"}).code, kExitInvalid);
  EXPECT_EQ(run({"check", "--v", "0,0,0", "--theta-grid", "0"}).code, kExitInvalid);
  const auto r = run({"check", "--v", "a,b,c"});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, ExtremalExample) {
  const auto r = run({"extremal", "--fix", "AB=1", "--objective", "BC:-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), 0.5, 1e-9);
  EXPECT_EQ(j["v"], Json::parse("[1.0,-0.5,-0.5]"));
}

TEST(Cli, ExtremalInfersFourBoxes) {
  const auto r = run({"extremal", "--fix", "AB=1,CD=1", "--objective", "AC:-1,AD:-1,BC:-1,BD:-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["value"].get<double>(), 2.0, 1e-9);
}

TEST(Cli, ExtremalInfeasibleAndInvalid) {
  EXPECT_EQ(run({"extremal", "--fix", "AB=1,BC=-1", "--objective", "AC:1"}).code, kExitOutside);
  EXPECT_EQ(run({"extremal", "--fix", "AB=0.5", "--objective", "AC:1"}).code, kExitInvalid);
  EXPECT_EQ(run({"extremal", "--objective", "AF:1"}).code, kExitInvalid);
}

TEST(Cli, StateAndV) {
  const auto s = run({"state", "--name", "eq6"});
  ASSERT_EQ(s.code, kExitOk);
  EXPECT_EQ(Json::parse(s.out)["n"], 3);
  const auto v = run({"v", "--state", "nontransitive_3_5"});
  ASSERT_EQ(v.code, kExitOk);
  EXPECT_EQ(Json::parse(v.out)["v"], Json::parse("[0.6,0.6,-0.6]"));
  EXPECT_EQ(run({"state", "--name", "nope"}).code, kExitInvalid);
  EXPECT_EQ(run({"state"}).code, kExitInvalid);
}

TEST(Cli, StateFileRoundTrip) {
  const auto path = temp_file("state.json");
  ASSERT_EQ(run({"state", "--name", "chi:1.0,0.4,+,-", "--out", path.string()}).code, kExitOk);
  const auto from_file = run({"state", "--file", path.string()});
  ASSERT_EQ(from_file.code, kExitOk);
  EXPECT_EQ(from_file.out, slurp(path));
  const auto v = run({"v", "--state", path.string()});
  EXPECT_EQ(v.code, kExitOk);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"state", "--file", path.string()}).code, kExitInvalid);
}

TEST(Cli, SurfaceToFile) {
  const auto path = temp_file("mesh.csv");
  const auto r = run({"surface", "--theta-steps", "8", "--phi-steps", "4", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["points"], 8 * 4 * 4 + 4);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "v_AB,v_BC,v_AC,theta,phi,s1,s2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8 * 4 * 4 + 4 + 1);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"surface", "--theta-steps", "1", "--phi-steps", "4"}).code, kExitInvalid);
}

TEST(Cli, AuditDeterministic) {
  const auto a = run({"audit", "--samples", "3000", "--seed", "42", "--mixed"});
  const auto b = run({"audit", "--samples", "3000", "--seed", "42", "--mixed"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["mixed_samples"], 3000);
  EXPECT_EQ(run({"audit", "--samples", "0", "--seed", "1"}).code, kExitInvalid);
}

TEST(Cli, Scenario) {
  const auto path = temp_file("scenario.json");
  {
    std::ofstream f(path);
    f << R"({"n": 4, "fixed": {"AB": 1, "AC": 1, "BC": 1}, "free": ["AD","BD","CD"]})";
  }
  const auto r = run({"scenario", "--file", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["improvement"], true);
  EXPECT_NEAR(j["spectral_bound"].get<double>(), 1.0 / 3.0, 1e-9);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  EXPECT_EQ(run({"scenario", "--file", path.string()}).code, kExitInvalid);
  std::filesystem::remove(path);
}

TEST(Cli, Selftest) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SubcommandRules) {
  EXPECT_EQ(run({}).code, kExitInvalid);
  EXPECT_EQ(run({"bogus"}).code, kExitInvalid);
  EXPECT_EQ(run({"check", "--v", "0,0,0", "--unknown"}).code, kExitInvalid);
  EXPECT_EQ(run({"check", "--v", "0,0,0", "selftest"}).code, kExitInvalid);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace statmon
