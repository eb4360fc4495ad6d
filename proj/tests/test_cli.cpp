#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "helpers/paths.hpp"

using fse::testing::fixture_path;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string tag = std::to_string(++counter);
  const std::string out_path = "cli_stdout_" + tag + ".tmp";
  const std::string err_path = "cli_stderr_" + tag + ".tmp";

  std::string command = env_prefix;
  if (!command.empty()) command += " ";
  command += std::string(FSE_CLI_PATH) + " " + args;
  command += " >" + out_path + " 2>" + err_path;

  const int status = std::system(command.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("evaluate prints a parseable json report and exits 0") {
  CliResult r = run_cli("evaluate --input " +
                        fixture_path("discretized_inconsistent.csv") +
                        " --select none --discretize none --name audit");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["name"] == "audit");
  CHECK(doc["consistency"]["rate"]["exact"] == "1/4");
  CHECK(doc["consistency"]["rate"]["value"] == 0.25);
  CHECK(doc["verdict"] == "needs_more_features");
}

TEST_CASE("evaluate with the default pipeline succeeds on nominal data") {
  CliResult r = run_cli("evaluate --input " +
                        fixture_path("discretized_consistent.csv"));
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["consistency"]["rate"]["exact"] == "0/1");
  CHECK(doc["verdict"] == "adequate");
}

TEST_CASE("evaluate in text format mentions the verdict") {
  CliResult r = run_cli("evaluate --input " +
                        fixture_path("discretized_consistent.csv") +
                        " --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("verdict: adequate") != std::string::npos);
}

TEST_CASE("a missing input file exits 2 and keeps stdout empty") {
  CliResult r = run_cli("evaluate --input no_such_file.csv");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("single-label data is a data error") {
  CliResult r = run_cli("evaluate --input " + fixture_path("single_label.csv"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("relief on a three-label base is a configuration error") {
  CliResult r = run_cli("evaluate --input " + fixture_path("three_labels.csv") +
                        " --select relief");
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("evaluate").exit_code == 1);
  CHECK(run_cli("evaluate --input x.csv --select bogus").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("help and version exit 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CliResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("inspect reports the floor and ceiling of the rate") {
  CliResult text = run_cli("inspect --input " +
                           fixture_path("discretized_inconsistent.csv"));
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("minority proportion: 0.375 (3/8)") != std::string::npos);
  CHECK(text.out.find("theoretical max: 0.5 (1/2)") != std::string::npos);

  CliResult json = run_cli("inspect --input " +
                           fixture_path("discretized_inconsistent.csv") +
                           " --format json");
  REQUIRE(json.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(json.out);
  CHECK(doc["examples"] == 8);
  CHECK(doc["minority"]["exact"] == "3/8");
  CHECK(doc["label_histogram"]["success"] == 5);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string args = "evaluate --input " +
                           fixture_path("discretized_inconsistent.csv") +
                           " --select none --discretize none";
  CliResult first = run_cli(args);
  CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());
}

TEST_CASE("synth output feeds straight back into evaluate") {
  const std::string csv = "cli_synth_roundtrip.tmp.csv";
  CliResult gen = run_cli("synth --kind consistent --seed 4 --examples 60 " +
                          std::string("--output ") + csv);
  REQUIRE(gen.exit_code == 0);

  CliResult eval =
      run_cli("evaluate --input " + csv + " --select none --discretize none");
  CHECK(eval.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(eval.out);
  CHECK(doc["consistency"]["rate"]["exact"] == "0/1");
  std::remove(csv.c_str());
}

TEST_CASE("worst-case synthesis hits the theoretical ceiling") {
  const std::string csv = "cli_synth_worst.tmp.csv";
  CliResult gen = run_cli(
      "synth --kind worst --labels 3 --descriptions 2 --copies 2 --output " +
      csv);
  REQUIRE(gen.exit_code == 0);

  CliResult eval =
      run_cli("evaluate --input " + csv + " --select none --discretize none");
  REQUIRE(eval.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(eval.out);
  CHECK(doc["consistency"]["rate"]["exact"] == "2/3");
  std::remove(csv.c_str());
}

TEST_CASE("the seed environment variable matches the explicit flag") {
  CliResult flagged = run_cli("synth --kind noisy --noise 0.5 --seed 5");
  CliResult from_env = run_cli("synth --kind noisy --noise 0.5", "FSE_SEED=5");
  CliResult other = run_cli("synth --kind noisy --noise 0.5 --seed 6");
  REQUIRE(flagged.exit_code == 0);
  REQUIRE(from_env.exit_code == 0);
  CHECK(flagged.out == from_env.out);
  CHECK(flagged.out != other.out);
}

TEST_CASE("discretize rewrites numeric columns as interval tokens") {
  CliResult r =
      run_cli("discretize --input " + fixture_path("three_labels.csv"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("size,shape,label\n", 0) == 0);
  CHECK(r.out.find("\"]-inf, 4.5]\"") != std::string::npos);
  CHECK(r.out.find("\"]4.5, 14]\"") != std::string::npos);
  CHECK(r.out.find("\"]14, +inf]\"") != std::string::npos);
}

TEST_CASE("score lists one line per feature in text format") {
  CliResult r = run_cli("score --input " +
                        fixture_path("discretized_inconsistent.csv"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("m1\t") != std::string::npos);
  CHECK(r.out.find("m2\t") != std::string::npos);
  CHECK(r.out.find("m3\t") != std::string::npos);
}

TEST_CASE("score emits a json array on request") {
  CliResult r = run_cli("score --input " +
                        fixture_path("discretized_inconsistent.csv") +
                        " --select chi2 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["feature"] == "m1");
  CHECK(doc[0]["method"] == "chi2");
}

TEST_CASE("score refuses the 'none' method") {
  CliResult r = run_cli("score --input " +
                        fixture_path("discretized_inconsistent.csv") +
                        " --select none");
  CHECK(r.exit_code == 3);
}

TEST_CASE("results go to a file when --output is given") {
  const std::string path = "cli_output_file.tmp.json";
  CliResult direct = run_cli("evaluate --input " +
                             fixture_path("discretized_inconsistent.csv") +
                             " --select none --name same");
  CliResult filed = run_cli("evaluate --input " +
                            fixture_path("discretized_inconsistent.csv") +
                            " --select none --name same --output " + path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("a sidecar declares kinds and the label alphabet") {
  const std::string csv = "cli_sidecar.tmp.csv";
  const std::string meta = "cli_sidecar.tmp.json";
  CliResult gen = run_cli("synth --kind consistent --seed 2 --examples 40 " +
                          std::string("--output ") + csv +
                          " --sidecar-out " + meta);
  REQUIRE(gen.exit_code == 0);

  CliResult inspect =
      run_cli("inspect --input " + csv + " --sidecar " + meta +
              " --format json");
  REQUIRE(inspect.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(inspect.out);
  CHECK(doc["examples"] == 40);
  CHECK(doc["features"]["r1"] == "numeric");
  std::remove(csv.c_str());
  std::remove(meta.c_str());
}
