// Copyright 2026 The lexlint Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lexlint_cli/cli.h"
#include "srcml_builder.h"

namespace lexlint::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = LEXLINT_FIXTURE_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("lexlint_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

TEST(Cli, EnvVarsFixtureAsJson) {
  const auto r = run_cli({"analyze", "--input", kFixtures + "/B.6/env_vars.xml", "--format",
                          "json", "--deterministic"});
  EXPECT_EQ(r.code, kExitClean) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["violations"].size(), 1u);
  EXPECT_EQ(j["violations"][0]["rule_id"], "B.6");
  EXPECT_EQ(j["summary"]["B.6"], 1);
}

TEST(Cli, EmptyArchiveHasNoViolations) {
  TempDir dir;
  write(dir / "empty.xml", testing::render_archive({}));
  const auto r = run_cli({"analyze", "-i", (dir / "empty.xml").string(), "-f", "json"});
  EXPECT_EQ(r.code, kExitClean) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"analyze", "--input", "/nonexistent/lexlint/missing/"}).code, kExitInput);
  EXPECT_EQ(run_cli({"analyze"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  const std::string env = kFixtures + "/B.6/env_vars.xml";
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--fail-on-violation"}).code, kExitViolations);
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--fail-on-violation", "--rules", "A.*"}).code,
            kExitClean);
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--rules", "Q.*"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--language", "cobol"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"analyze", "-i", env, "--config", "/nonexistent/cfg.json"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"--version"}).code, kExitClean);
  EXPECT_EQ(run_cli({"rules"}).code, kExitClean);
}

TEST(Cli, MalformedArchiveIsInputError) {
  TempDir dir;
  write(dir / "bad.xml", "<unit");
  const auto r = run_cli({"analyze", "-i", (dir / "bad.xml").string()});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("bad.xml"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SourceInputWithoutConverterNamesFormat) {
  TempDir dir;
  write(dir / "A.java", "class A {}");
  const char* old = std::getenv("PATH");
  const std::string saved = old ? old : "";
  setenv("PATH", dir.path().c_str(), 1);
  const auto r = run_cli({"analyze", "-i", dir.path().string()});
  setenv("PATH", saved.c_str(), 1);
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("srcML"), std::string::npos);
}

TEST(Cli, ConfigFileSuppressesEnvVars) {
  TempDir dir;
  write(dir / "cfg.json", R"({"collection_types": ["EnvVars"]})");
  const auto r = run_cli({"analyze", "-i", kFixtures + "/B.6/env_vars.xml", "-c",
                          (dir / "cfg.json").string(), "-f", "json"});
  EXPECT_EQ(r.code, kExitClean) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["violations"].empty());
}

TEST(Cli, WarningsGoToDiagnosticsNotReport) {
  TempDir dir;
  std::string cpp = testing::render_unit({}, Language::kJava, "main.cpp");
  cpp.replace(cpp.find("language=\"Java\""), 15, "language=\"C++\"");
  write(dir / "mixed.xml", testing::render_archive({cpp}));
  const auto r = run_cli({"analyze", "-i", (dir / "mixed.xml").string(), "-f", "csv"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(r.out.find("warning"), std::string::npos);
}

TEST(Cli, OutputFileAndEvaluate) {
  TempDir dir;
  const auto report = (dir / "report.csv").string();
  auto r = run_cli({"analyze", "-i", kFixtures + "/C.1", "-f", "csv", "-o", report,
                    "--deterministic"});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  EXPECT_TRUE(r.out.empty());
  write(dir / "truth.csv",
        "file,line,rule_id,label\n"
        "C.1/get_completion_result.cs,2,C.1,TP\n"
        "C.1/start_stopwatch.java,4,C.1,fp\n");
  r = run_cli({"evaluate", "--report", report, "--truth", (dir / "truth.csv").string()});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  EXPECT_NE(r.out.find("macro precision: 50.00%"), std::string::npos) << r.out;
  r = run_cli({"evaluate", "-r", report, "-t", (dir / "truth.csv").string(), "-f", "json"});
  ASSERT_EQ(r.code, kExitClean);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["micro_precision"].get<double>(), 0.5);
  EXPECT_EQ(run_cli({"evaluate", "-r", report, "-t", "/nonexistent.csv"}).code, kExitInput);
}

}  // namespace
}  // namespace lexlint::cli
