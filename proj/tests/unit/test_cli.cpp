#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "enls_lab/commands.hpp"
#include "enls_lab/config.hpp"
#include "enls/errors.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using enls::lab::RunOptions;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("enls_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "run.ini";
  std::ofstream(p) << text;
  return p;
}

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::string& command, const fs::path& config, const fs::path& out,
           bool deterministic = true, bool dry_run = false) {
  RunOptions o;
  o.command = command;
  o.config_path = config;
  o.out = out;
  o.seed = 5;
  o.deterministic = deterministic;
  o.dry_run = dry_run;
  std::ostringstream so, se;
  const int code = enls::lab::run(o, so, se);
  return {code, so.str(), se.str()};
}

nlohmann::json summary(const fs::path& out) { return nlohmann::json::parse(slurp(out / "summary.json")); }

const fs::path kConfigs = ENLS_CONFIG_DIR;

}  // namespace

TEST(Config, ParsesSectionsAndReportsFields) {
  const auto c = enls::lab::Config::from_string("[grid]\nlength = 2.5\nmodes = 16\n[run]\nflag = yes\nlist = 1, 2,4\n");
  EXPECT_DOUBLE_EQ(c.number("grid", "length"), 2.5);
  EXPECT_EQ(c.integer("grid", "modes"), 16);
  EXPECT_TRUE(c.boolean("run", "flag", false));
  EXPECT_EQ(c.numbers("run", "list", {}), (std::vector<double>{1, 2, 4}));
  EXPECT_DOUBLE_EQ(c.number("grid", "absent", 7.0), 7.0);
  EXPECT_EQ(c.resolved()["grid"]["absent"], 7.0);
  try {
    c.number("solver", "dt");
    FAIL();
  } catch (const enls::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("[solver] dt"), std::string::npos);
  }
  EXPECT_THROW(c.integer("grid", "length"), enls::ConfigError);
}

TEST(Config, ParseErrorsCarryLineNumbers) {
  try {
    enls::lab::Config::from_string("[grid]\nlength = 1\nthis line is broken\n", "bad.ini");
    FAIL();
  } catch (const enls::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.ini:3"), std::string::npos) << e.what();
  }
}

TEST(Config, EnvironmentOverrides) {
  auto c = enls::lab::Config::from_string("[solver]\nt_end = 1\n");
  setenv("ENLS_SOLVER_T_END", "0.25", 1);
  c.apply_environment();
  unsetenv("ENLS_SOLVER_T_END");
  EXPECT_DOUBLE_EQ(c.number("solver", "t_end"), 0.25);
}

TEST(Cli, PlanReportsExactExponent) {
  const fs::path out = scratch("plan");
  const Result r = run("plan", kConfigs / "plan.ini", out);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto plan = nlohmann::json::parse(slurp(out / "plan.json"));
  EXPECT_EQ(plan["exponent"], "-37/28");
  EXPECT_TRUE(summary(out)["pass"].get<bool>());
  EXPECT_FALSE(summary(out).contains("wall_seconds"));
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
}

TEST(Cli, VerifyBoundsWithZeroSamplesIsEmpty) {
  const fs::path out = scratch("bounds0");
  const fs::path cfg = write_config(out, "[multiplier]\nN = 16\ns = -0.125\n[bounds]\nsamples = 0\n");
  const Result r = run("verify-bounds", cfg, out);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out / "bounds.csv"), "case,a,b,N,samples,discarded,max_ratio,min_ratio\n");
}

TEST(Cli, MissingFieldFailsWithName) {
  const fs::path out = scratch("missing");
  const fs::path cfg = write_config(out, "[grid]\nmodes = 64\n[solver]\ndt = 1e-3\nt_end = 0.01\n");
  const Result r = run("simulate", cfg, out);
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("[grid] length"), std::string::npos) << r.err;
  const auto s = summary(out);
  EXPECT_FALSE(s["pass"].get<bool>());
  EXPECT_NE(s["errors"][0].get<std::string>().find("[grid] length"), std::string::npos);
}

TEST(Cli, DryRunPrintsResolvedConfigAndWritesNothing) {
  const fs::path out = scratch("dry") / "never";
  const Result r = run("simulate", kConfigs / "simulate.ini", out, true, true);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(fs::exists(out));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["grid"]["modes"], 256);
  EXPECT_EQ(j["config"]["solver"]["dealias"], true);
  EXPECT_EQ(j["seed"], 5);
}

TEST(Cli, DeterministicRerunsAreByteIdentical) {
  const fs::path dir = scratch("rerun");
  const fs::path cfg = write_config(dir,
                                    "[grid]\nlength = 6.283185307179586\nmodes = 32\n"
                                    "[solver]\ndt = 5e-5\nt_end = 4e-3\nsnapshot_stride = 10\n"
                                    "[multiplier]\nN = 3\ns = -0.125\n"
                                    "[data]\nkind = random\nband = 9\nl2 = 1.5\n"
                                    "[bounds]\nsamples = 200\n");
  for (const std::string cmd : {"energies", "verify-bounds"}) {
    ASSERT_EQ(run(cmd, cfg, dir / (cmd + "_a")).code, 0);
    ASSERT_EQ(run(cmd, cfg, dir / (cmd + "_b")).code, 0);
    int csvs = 0;
    for (const auto& e : fs::directory_iterator(dir / (cmd + "_a"))) {
      if (e.path().extension() != ".csv") continue;
      ++csvs;
      EXPECT_EQ(slurp(e.path()), slurp(dir / (cmd + "_b") / e.path().filename())) << e.path();
    }
    EXPECT_GT(csvs, 0);
    EXPECT_EQ(slurp(dir / (cmd + "_a") / "summary.json"), slurp(dir / (cmd + "_b") / "summary.json"));
  }
}

TEST(Cli, SeedChangesRandomOutputs) {
  const fs::path dir = scratch("seed");
  const fs::path cfg = write_config(dir, "[multiplier]\nN = 16\ns = -0.125\n[bounds]\nsamples = 100\ndmvt_samples = 0\n");
  ASSERT_EQ(run("verify-bounds", cfg, dir / "a").code, 0);
  RunOptions o;
  o.command = "verify-bounds";
  o.config_path = cfg;
  o.out = dir / "b";
  o.seed = 6;
  o.deterministic = true;
  std::ostringstream so, se;
  ASSERT_EQ(enls::lab::run(o, so, se), 0);
  EXPECT_NE(slurp(dir / "a" / "bounds.csv"), slurp(dir / "b" / "bounds.csv"));
}

TEST(Cli, ReferenceSweepSlope) {
  const fs::path out = scratch("sweep");
  const Result r = run("sweep-decay", kConfigs / "sweep.ini", out);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto s = summary(out);
  ASSERT_TRUE(s["metrics"].contains("slope"));
  EXPECT_LE(s["metrics"]["slope"].get<double>(), -1.25);
  EXPECT_TRUE(s["metrics"].contains("residual"));
}

TEST(Cli, BinaryExitCodes) {
  const fs::path dir = scratch("binary");
  const std::string bin = ENLS_LAB_BINARY;
  const std::string ok = bin + " plan --config " + (kConfigs / "plan.ini").string() + " --out " +
                         (dir / "ok").string() + " > /dev/null";
  EXPECT_EQ(std::system(ok.c_str()), 0);
  const fs::path bad = write_config(dir, "[plan]\nT = 10\ns = -2/5\n");
  const std::string infeasible =
      bin + " plan --config " + bad.string() + " --out " + (dir / "bad").string() + " > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(infeasible.c_str())), 1);
  EXPECT_FALSE(summary(dir / "bad")["pass"].get<bool>());
  const std::string unknown = bin + " frobnicate > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(unknown.c_str())), 2);
  const std::string env = "ENLS_PLAN_T=1000 " + bin + " plan --config " + (kConfigs / "plan.ini").string() +
                          " --out " + (dir / "env").string() + " > /dev/null";
  EXPECT_EQ(std::system(env.c_str()), 0);
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(slurp(dir / "env" / "plan.json"))["T"].get<double>(), 1000.0);
}
