#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace cnbethe::cli;
using Json = nlohmann::json;

namespace {

RunConfig make(std::string command, std::string sub = {}) {
  RunConfig c;
  c.command = std::move(command);
  c.subcommand = std::move(sub);
  return c;
}

int run_tool(const std::string& args, std::string* output = nullptr) {
  const auto out = std::filesystem::temp_directory_path() / "cnbethe_cli_test.out";
  const std::string cmd = std::string(CNBETHE_TOOL_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CliParse, Lists) {
  EXPECT_EQ(parse_list("1.1,2.3"), (std::vector<double>{1.1, 2.3}));
  EXPECT_ANY_THROW(parse_list("1.1,x"));
  const auto g = parse_grid("1e3:1e9:7");
  EXPECT_EQ(g.size(), 7u);
  EXPECT_ANY_THROW(parse_grid("1e3:1e9"));
  EXPECT_ANY_THROW(parse_grid("1e9:1e3:5"));
}

TEST(CliConsistency, DeltaRegularPasses) {
  auto c = make("consistency");
  c.n = 3;
  c.regular = true;
  c.samples = 200;
  c.seed = 7;
  const auto r = run(c);
  EXPECT_EQ(r.code, ExitCode::Ok);
  const auto doc = Json::parse(r.document);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_TRUE(doc["all_pass"].get<bool>());
}

TEST(CliConsistency, PdpRegularBraidFailsAsExpected) {
  auto c = make("consistency");
  c.model = "pdp";
  c.n = 3;
  c.regular = true;
  const auto r = run(c);
  EXPECT_EQ(r.code, ExitCode::Ok);
  const auto doc = Json::parse(r.document);
  bool seen = false;
  for (const auto& rel : doc["relations"]) {
    if (rel["relation"] == "braid") {
      EXPECT_EQ(rel["expectation"], "fails");
      EXPECT_EQ(rel["outcome"], "fail");
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(CliConsistency, InvalidRank) {
  auto c = make("consistency");
  c.n = 0;
  EXPECT_EQ(run(c).code, ExitCode::Usage);
}

TEST(CliBuild, TableSizeAndDeterminism) {
  auto c = make("build");
  c.n = 2;
  c.k = {1.1, 2.3};
  const auto a = run(c), b = run(c);
  EXPECT_EQ(a.code, ExitCode::Ok);
  EXPECT_EQ(a.document, b.document);
  EXPECT_EQ(Json::parse(a.document)["entries"].size(), 8u);
}

TEST(CliBuild, PdpRegularReportsWitness) {
  auto c = make("build");
  c.model = "pdp";
  c.n = 3;
  c.regular = true;
  const auto r = run(c);
  EXPECT_EQ(r.code, ExitCode::ExpectationViolated);
  const auto w = Json::parse(r.document)["witness"];
  EXPECT_NE(w["first_word"], w["second_word"]);
}

TEST(CliBuild, MomentaCountMismatch) {
  auto c = make("build");
  c.n = 3;
  c.k = {1.0, 2.0};
  EXPECT_EQ(run(c).code, ExitCode::Usage);
}

TEST(CliVerify, BoundaryDuality) {
  auto b = make("verify", "boundary");
  b.n = 2;
  b.probes = 20;
  EXPECT_EQ(run(b).code, ExitCode::Ok);

  auto d = make("verify", "duality");
  d.n = 2;
  d.c1 = 1.0;
  d.c2 = 2.0;
  d.points = 20;
  const auto r = run(d);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_LE(Json::parse(r.document)["max_psi_difference"].get<double>(), 1e-12);
}

TEST(CliVerify, EigenAndCsv) {
  auto e = make("verify", "eigen");
  e.n = 2;
  e.k = {1.0, 2.0};
  e.format = Format::Csv;
  const auto r = run(e);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_EQ(r.extension, "csv");
  EXPECT_EQ(r.document.rfind("# schema_version=1", 0), 0u);
  EXPECT_NE(r.document.find("# seed=7"), std::string::npos);
}

TEST(CliVerify, UnknownSubcommand) { EXPECT_EQ(run(make("verify", "nothing")).code, ExitCode::Usage); }

TEST(CliScatter, SlopeAndGrid) {
  auto s = make("scatter");
  s.parity = "even";
  s.c = 2.0;
  const auto r = run(s);
  EXPECT_EQ(r.code, ExitCode::Ok);
  EXPECT_NEAR(Json::parse(r.document)["slope"].get<double>(), -0.5, 0.05);

  auto odd = make("scatter");
  odd.parity = "odd";
  const auto rows = Json::parse(run(odd).document)["rows"];
  EXPECT_NEAR(rows.back()["B"][0].get<double>(), -1.0, 1e-4);

  auto p = make("scatter");
  p.model = "pdp";
  p.parity = "odd";
  p.lambda = 0.5;
  const auto pr = Json::parse(run(p).document)["rows"];
  EXPECT_LT(pr.back()["abs_dev"].get<double>(), pr.front()["abs_dev"].get<double>());

  auto bad = make("scatter");
  bad.v0 = "0.5:10:3";
  EXPECT_EQ(run(bad).code, ExitCode::Usage);
  bad.v0 = "garbage";
  EXPECT_EQ(run(bad).code, ExitCode::Usage);
}

TEST(CliReps, SumRule) {
  auto c = make("reps");
  c.n = 3;
  auto doc = Json::parse(run(c).document);
  EXPECT_EQ(doc["sum_of_squares"], 48);
  c.n = 4;
  EXPECT_EQ(Json::parse(run(c).document)["sum_of_squares"], 384);
  c.n = 1;
  EXPECT_EQ(Json::parse(run(c).document)["irreps"].size(), 2u);
  c.n = 7;
  EXPECT_EQ(run(c).code, ExitCode::Usage);
}

TEST(CliOutput, EnvironmentDirectory) {
  auto c = make("verify", "boundary");
  EXPECT_EQ(output_path(c, "json"), std::getenv("CNBETHE_OUTPUT_DIR") ? output_path(c, "json") : std::string{});
  c.out = "/tmp/x.json";
  EXPECT_EQ(output_path(c, "json"), "/tmp/x.json");
  c.out.clear();
  setenv("CNBETHE_OUTPUT_DIR", "/tmp/cnb", 1);
  EXPECT_EQ(output_path(c, "csv"), "/tmp/cnb/verify_boundary.csv");
  unsetenv("CNBETHE_OUTPUT_DIR");
}

TEST(CliBinary, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_tool("consistency --model delta --N 3 --rep regular --samples 50 --seed 7"), 0);
  EXPECT_EQ(run_tool("consistency --N 0"), 2);
  EXPECT_EQ(run_tool("build --model pdp --N 3 --rep regular"), 1);
  EXPECT_EQ(run_tool("build --model delta --N 2 --sector ++ --k 1.1,2.3", &out), 0);
  EXPECT_EQ(Json::parse(out)["entry_count"], 8);
  EXPECT_EQ(run_tool("verify boundary --model delta --N 2 --sector=mm --probes 5"), 0);
  EXPECT_EQ(run_tool("scatter --model delta --parity even --k 1 --c 2 --v0 1e3:1e9:7 --format csv", &out), 0);
  EXPECT_NE(out.find("V0,re(B),im(B),abs_dev"), std::string::npos);
  EXPECT_EQ(run_tool("reps --N 4"), 0);
  EXPECT_EQ(run_tool("--help"), 0);
  EXPECT_EQ(run_tool("bogus"), 2);
  EXPECT_EQ(run_tool("consistency --N notanumber"), 2);
  EXPECT_EQ(run_tool("verify"), 2);
}

TEST(CliBinary, WritesToOutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "cnbethe_cli_outdir";
  std::filesystem::create_directories(dir);
  const std::string cmd = "CNBETHE_OUTPUT_DIR=" + dir.string() + " " + CNBETHE_TOOL_PATH + " reps --N 2 2>/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "reps.json"));
  std::filesystem::remove_all(dir);
}
