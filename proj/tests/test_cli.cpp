// End-to-end tests for the hrg command-line tool.  Every test launches the
// real binary (path in the HRG_CLI_BIN environment variable) and inspects
// its exit code, its JSON output, and the files it writes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "hrg/degrees.hpp"
#include "hrg/io.hpp"
#include "hrg/lattice.hpp"
#include "hrg/multipartite.hpp"

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* path = std::getenv("HRG_CLI_BIN");
  EXPECT_NE(path, nullptr) << "HRG_CLI_BIN must point at the hrg binary";
  return path ? path : "";
}

// Runs the tool with the given arguments, returning its exit code and
// stdout.  `env_prefix` lets a test override environment variables, e.g.
// "HRG_CAP=100".
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string command;
  if (!env_prefix.empty()) command += "env " + env_prefix + " ";
  command += "'" + cli_path() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name) {
  return testing::TempDir() + "cli_" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.is_open()) << path;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  ASSERT_TRUE(out.is_open()) << path;
  out << text;
}

// Drops the embedded manifest comment, leaving the graph payload only.
std::string strip_manifest(const std::string& text) {
  std::stringstream in(text);
  std::string line, kept;
  while (std::getline(in, line))
    if (line.rfind("#manifest ", 0) != 0) kept += line + "\n";
  return kept;
}

TEST(CliBuild, WritesALoadableGraphFileWithManifest) {
  const std::string path = temp_file("el.graph");
  RunResult r = run_cli("build --construction el --n 2 --q 2 --s 2 --out " +
                        path);
  ASSERT_EQ(r.exit_code, 0) << r.out;

  json summary = json::parse(r.out);
  EXPECT_EQ(summary["vertices"], 2016);
  EXPECT_EQ(summary["parts"], (std::vector<std::int64_t>{672, 672, 672}));
  EXPECT_EQ(summary["manifest"]["command"], "build");
  EXPECT_EQ(summary["manifest"]["parameters"]["construction"], "el");
  EXPECT_EQ(summary["manifest"]["seed"], 24301);
  EXPECT_TRUE(summary["manifest"].contains("tool_version"));
  EXPECT_TRUE(summary["manifest"]["timestamps"].contains("started"));

  const std::string text = read_file(path);
  EXPECT_EQ(text.rfind("#hrg v1\n", 0), 0u);
  EXPECT_NE(text.find("\n#manifest {\"command\":\"build\""), std::string::npos);

  hrg::PartiteGraph g = hrg::load_graph(path);
  EXPECT_EQ(g.num_vertices(), 2016);
  EXPECT_EQ(g.nparts(), 3);
}

TEST(CliBuild, StairFileEqualsTheLibraryGraph) {
  const std::string path = temp_file("stair.graph");
  RunResult r = run_cli("build --construction stair --n 3 --k 2 --out " + path);
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(hrg::load_graph(path), hrg::stair_graph(3, 2));
}

TEST(CliBuild, PayloadIsIdenticalAcrossRuns) {
  const std::string a = temp_file("det_a.graph");
  const std::string b = temp_file("det_b.graph");
  ASSERT_EQ(run_cli("build --construction knight --out " + a).exit_code, 0);
  ASSERT_EQ(run_cli("build --construction knight --out " + b).exit_code, 0);
  EXPECT_EQ(strip_manifest(read_file(a)), strip_manifest(read_file(b)));
}

TEST(CliBuild, SymmetrizeReadsTheActingGroupFromTheCommandLine) {
  const std::string base = temp_file("aff.graph");
  const std::string fixed = temp_file("aff_id.graph");
  ASSERT_EQ(
      run_cli("build --construction affine --m 3 --k 2 --out " + base)
          .exit_code,
      0);
  RunResult r = run_cli("build --construction symmetrize --in " + base +
                        " --group id3 --out " + fixed);
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["vertices"], 12);

  // Degree mismatch between the group and the graph's parts is a usage error.
  EXPECT_EQ(run_cli("build --construction symmetrize --in " + base +
                    " --group s4 --out " + temp_file("unused.graph"))
                .exit_code,
            3);
}

TEST(CliBuild, RejectsBadUsage) {
  EXPECT_EQ(run_cli("build --construction bogus --out " + temp_file("x.graph"))
                .exit_code,
            3);
  EXPECT_EQ(run_cli("build --construction el --n 2 --out " +
                    temp_file("x.graph"))
                .exit_code,
            3);  // missing --q/--s
  EXPECT_EQ(run_cli("build --out " + temp_file("x.graph")).exit_code,
            3);  // missing --construction entirely
}

TEST(CliBuild, VertexCapFromTheEnvironmentGivesCapacityExit) {
  EXPECT_EQ(run_cli("build --construction el --n 2 --q 2 --s 2 --out " +
                        temp_file("capped.graph"),
                    "HRG_CAP=100")
                .exit_code,
            2);
}

TEST(CliBuild, DotExportIsLimitedToSmallGraphs) {
  const std::string graph = temp_file("small.graph");
  const std::string dot = temp_file("small.dot");
  ASSERT_EQ(run_cli("build --construction stair --n 3 --k 2 --out " + graph +
                    " --dot " + dot)
                .exit_code,
            0);
  EXPECT_EQ(read_file(dot).rfind("graph {", 0), 0u);

  EXPECT_EQ(run_cli("build --construction stair --n 3 --k 9 --out " +
                    temp_file("big.graph") + " --dot " + temp_file("big.dot"))
                .exit_code,
            2);
}

TEST(CliVerify, AllChecksPassOnARegularComplex) {
  const std::string path = temp_file("verify_el.graph");
  ASSERT_EQ(run_cli("build --construction el --n 2 --q 2 --s 2 --out " + path)
                .exit_code,
            0);
  const std::string report_path = temp_file("verify_el.json");
  RunResult r = run_cli("verify --in " + path + " --out " + report_path);
  ASSERT_EQ(r.exit_code, 0) << r.out;

  json report = json::parse(r.out);
  EXPECT_TRUE(report["all_pass"]);
  ASSERT_EQ(report["checks"].size(), 4u);
  for (const json& check : report["checks"])
    EXPECT_EQ(check["verdict"], "pass") << check.dump();
  EXPECT_EQ(report["checks"][0]["check"], "regularity");
  EXPECT_EQ(report["checks"][0]["values"]["profile"],
            (std::vector<std::int64_t>{32, 4}));
  EXPECT_EQ(json::parse(read_file(report_path)), report);
}

TEST(CliVerify, DisjointUnionFailsGalleryWithTheEmptyFace) {
  const std::string path = temp_file("disjoint.graph");
  write_file(path, "#hrg v1\n#part 0 2\n#part 1 2\n0 2\n1 3\n");
  RunResult r = run_cli("verify --in " + path + " --checks gallery");
  EXPECT_EQ(r.exit_code, 1);

  json report = json::parse(r.out);
  EXPECT_FALSE(report["all_pass"]);
  const json& check = report["checks"][0];
  EXPECT_EQ(check["check"], "gallery");
  EXPECT_EQ(check["verdict"], "fail");
  EXPECT_TRUE(check["witness"]["disconnected_link_of"]["vertices"].empty());
}

TEST(CliVerify, NamedSubgroupSystemsReportPerAxiomVerdicts) {
  RunResult good = run_cli("verify --sgs affine-3 --all-pairs");
  EXPECT_EQ(good.exit_code, 0);
  json good_report = json::parse(good.out);
  EXPECT_TRUE(good_report["all_pass"]);
  ASSERT_EQ(good_report["checks"].size(), 3u);

  RunResult broken = run_cli("verify --sgs affine-3-broken");
  EXPECT_EQ(broken.exit_code, 1);
  json broken_report = json::parse(broken.out);
  EXPECT_FALSE(broken_report["all_pass"]);
  bool saw_strict_chain_failure = false;
  for (const json& check : broken_report["checks"]) {
    if (check["check"] == "sgs-strict-chain") {
      EXPECT_EQ(check["verdict"], "fail");
      EXPECT_TRUE(check["witness"].contains("tau"));
      saw_strict_chain_failure = true;
    }
  }
  EXPECT_TRUE(saw_strict_chain_failure);

  EXPECT_EQ(run_cli("verify --sgs no-such-system").exit_code, 3);
  EXPECT_EQ(run_cli("verify").exit_code, 3);  // neither --in nor --sgs
}

TEST(CliSpectrum, VerdictDrivesTheExitCode) {
  const std::string path = temp_file("spectrum_stair.graph");
  ASSERT_EQ(run_cli("build --construction stair --n 3 --k 3 --out " + path)
                .exit_code,
            0);

  RunResult fail = run_cli("spectrum --in " + path + " --lambda-target 0.49");
  EXPECT_EQ(fail.exit_code, 1);
  json fail_report = json::parse(fail.out);
  EXPECT_EQ(fail_report["verdict"], "fail");
  EXPECT_NEAR(fail_report["values"]["max_link_lambda2"].get<double>(), 0.5,
              1e-9);
  EXPECT_TRUE(fail_report["witness"].contains("worst_link_face"));

  RunResult pass = run_cli("spectrum --in " + path + " --lambda-target 1.0");
  EXPECT_EQ(pass.exit_code, 0);
  EXPECT_EQ(json::parse(pass.out)["verdict"], "pass");
}

TEST(CliSpectrum, JobCountLeavesTheValuesUnchanged) {
  const std::string path = temp_file("spectrum_jobs.graph");
  ASSERT_EQ(run_cli("build --construction stair --n 3 --k 2 --out " + path)
                .exit_code,
            0);
  json serial = json::parse(
      run_cli("spectrum --in " + path + " --lambda-target 0.51 --jobs 1").out);
  json parallel = json::parse(
      run_cli("spectrum --in " + path + " --lambda-target 0.51 --jobs 3").out);
  EXPECT_EQ(serial["values"], parallel["values"]);
  EXPECT_EQ(serial["verdict"], parallel["verdict"]);
}

TEST(CliSpectrum, UndefinedCertificateIsInformational) {
  const std::string path = temp_file("impure.graph");
  // A triangle {0,1,3} plus the edge 0-2, which extends to no triangle, so
  // the complex is not pure and the certificate does not apply.
  write_file(path,
             "#hrg v1\n#part 0 1\n#part 1 2\n#part 2 1\n0 1\n0 2\n0 3\n1 3\n");
  RunResult r = run_cli("spectrum --in " + path + " --lambda-target 0.9");
  EXPECT_EQ(r.exit_code, 4);
  json report = json::parse(r.out);
  EXPECT_EQ(report["verdict"], "undefined");
  EXPECT_TRUE(report["values"].contains("reason"));
}

TEST(CliDegrees, PrintsClosedFormProfilesAsDecimalStrings) {
  RunResult knight = run_cli("degrees --family affine-adhoc --r 1");
  ASSERT_EQ(knight.exit_code, 0);
  EXPECT_EQ(json::parse(knight.out)["profile"],
            (std::vector<std::string>{"200", "36", "12", "4"}));

  RunResult spaced = run_cli("degrees --family affine-3r --r 2");
  ASSERT_EQ(spaced.exit_code, 0);
  EXPECT_EQ(json::parse(spaced.out)["profile"],
            (std::vector<std::string>{"30", "6"}));

  // Values past 64 bits survive as strings: the top entry is 4 * 3^35.
  RunResult wide = run_cli("degrees --family el-adhoc --n 4 --q 3");
  ASSERT_EQ(wide.exit_code, 0);
  hrg::DegreeFormulaInput input;
  input.family = hrg::DegreeFamily::kElAdhoc;
  input.n = 4;
  input.q = 3;
  hrg::BigDegreeProfile expected = hrg::el_profile(input);
  json profile = json::parse(wide.out)["profile"];
  ASSERT_EQ(profile.size(), expected.dims.size());
  for (std::size_t i = 0; i < expected.dims.size(); ++i)
    EXPECT_EQ(profile[i], expected.dims[i].get_str());

  EXPECT_EQ(run_cli("degrees --family no-such-family").exit_code, 3);
  EXPECT_EQ(run_cli("degrees --family el-base").exit_code, 3);  // missing --q
}

TEST(CliMisc, VersionAndHelpExitCleanly) {
  RunResult version = run_cli("--version");
  EXPECT_EQ(version.exit_code, 0);
  EXPECT_NE(version.out.find("."), std::string::npos);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("").exit_code, 3);  // a subcommand is required
}

}  // namespace
