// Acceptance gate: one self-contained check per shipped guarantee, each
// printed as a single [PASS]/[FAIL] line. Exits nonzero when any fails.
// All comparisons are exact (rational equality or bit-equal doubles); the
// only tolerances are the two wall-clock budgets asserted inline.

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fse/consistency.hpp"
#include "fse/csv.hpp"
#include "fse/discretize.hpp"
#include "fse/errors.hpp"
#include "fse/example_base.hpp"
#include "fse/filters.hpp"
#include "fse/pipeline.hpp"
#include "fse/rng.hpp"
#include "fse/synth.hpp"
#include "helpers/generators.hpp"
#include "helpers/oracles.hpp"
#include "helpers/paths.hpp"

using namespace fse;
using fse::testing::fixture_path;
using fse::testing::naive_inconsistency;
using fse::testing::oracle_mdl_cuts;
using fse::testing::random_base;
using fse::testing::RandomBaseParams;

namespace {

struct Gate {
  int failures = 0;

  void run(const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << name << "\n";
    } else {
      std::cout << "[FAIL] " << name << ": " << detail << "\n";
      ++failures;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fixture_rates() {
  const auto start = std::chrono::steady_clock::now();

  ExampleBase clean = load_csv(fixture_path("discretized_consistent.csv"), {});
  ExampleBase dirty =
      load_csv(fixture_path("discretized_inconsistent.csv"), {});
  const Rational zero = inconsistency_rate(clean).rate;
  const Rational quarter = inconsistency_rate(dirty).rate;

  if (zero != Rational(0, 1)) {
    return "consistent fixture measured " + zero.to_string();
  }
  if (quarter != Rational(1, 4)) {
    return "inconsistent fixture measured " + quarter.to_string();
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    return "took " + std::to_string(elapsed) + "s (budget 1s)";
  }
  return "";
}

std::string rate_bounds() {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 mix(1);

  for (unsigned seed = 1; seed <= 1000; ++seed) {
    RandomBaseParams params;
    params.seed = seed;
    params.label_count = 2 + mix.next_below(4);    // 2..5
    params.feature_count = 1 + mix.next_below(6);  // 1..6
    params.example_count = 1 + mix.next_below(200);  // 1..200
    ExampleBase base = random_base(params);
    ConsistencyResult r = inconsistency_rate(base);

    if (r.rate < Rational(0, 1)) {
      return "negative rate at seed " + std::to_string(seed);
    }
    const Rational cap = theoretical_max(base.schema().labels().size());
    if (cap < r.rate) {
      return "rate above 1 - 1/|L| at seed " + std::to_string(seed);
    }
    const Rational minority = minority_bound(base);
    if (minority < r.rate) {
      return "rate above the minority proportion at seed " +
             std::to_string(seed);
    }
  }

  for (std::size_t labels : {std::size_t{2}, std::size_t{3}, std::size_t{4},
                             std::size_t{5}}) {
    for (std::size_t descriptions : {std::size_t{1}, std::size_t{2},
                                     std::size_t{5}, std::size_t{9}}) {
      for (std::size_t copies : {std::size_t{1}, std::size_t{3},
                                 std::size_t{7}}) {
        ExampleBase worst = gen_worst(labels, descriptions, copies);
        if (inconsistency_rate(worst).rate != theoretical_max(labels)) {
          return "worst-case base missed the bound at L=" +
                 std::to_string(labels) + " d=" + std::to_string(descriptions) +
                 " c=" + std::to_string(copies);
        }
      }
    }
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    return "took " + std::to_string(elapsed) + "s (budget 30s)";
  }
  return "";
}

std::string irrelevant_features_floor() {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.label_count = 2;
    spec.relevant = 0;
    spec.irrelevant = 3;
    spec.example_count = 160;
    spec.noise_rate = 1.0;
    ExampleBase base = gen_noisy(spec);

    EvaluationReport report = evaluate(base, "noise-only");
    if (!report.selection.features.empty()) {
      return "seed " + std::to_string(seed) + " selected " +
             std::to_string(report.selection.features.size()) + " features";
    }
    if (report.consistency.rate != minority_bound(base)) {
      return "seed " + std::to_string(seed) + " reported " +
             report.consistency.rate.to_string() + " instead of the minority " +
             minority_bound(base).to_string();
    }
  }
  return "";
}

std::string monotonicity() {
  SplitMix64 mix(17);

  for (unsigned seed = 1; seed <= 200; ++seed) {
    RandomBaseParams params;
    params.seed = seed;
    params.label_count = 2 + mix.next_below(3);
    params.feature_count = 1 + mix.next_below(4);  // <= 4 features
    params.example_count = 2 + mix.next_below(49);
    ExampleBase base = random_base(params);

    const std::size_t f = base.schema().features().size();
    const std::size_t masks = std::size_t{1} << f;
    std::vector<Rational> rate(masks);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      FeatureSubset subset;
      for (std::size_t i = 0; i < f; ++i) {
        if (mask & (std::size_t{1} << i)) {
          subset.features.push_back(base.schema().features()[i].name);
        }
      }
      rate[mask] = inconsistency_rate(base, subset).rate;
    }
    for (std::size_t small = 0; small < masks; ++small) {
      for (std::size_t large = 0; large < masks; ++large) {
        if ((small & large) != small) continue;
        if (rate[small] < rate[large]) {
          return "adding features raised the rate at seed " +
                 std::to_string(seed);
        }
      }
    }
  }

  SplitMix64 cuts_mix(23);
  for (unsigned seed = 1; seed <= 200; ++seed) {
    RandomBaseParams params;
    params.seed = 4000 + seed;
    params.feature_count = 2;
    params.example_count = 6 + cuts_mix.next_below(40);
    params.value_grid = 6;
    params.mix_nominal = false;
    ExampleBase base = random_base(params);

    IntervalScheme coarse{"f1", {2.5}};
    IntervalScheme fine{"f1", {0.5, 2.5, 4.5}};
    const Rational with_coarse =
        inconsistency_rate(apply_schemes(base, {coarse})).rate;
    const Rational with_fine =
        inconsistency_rate(apply_schemes(base, {fine})).rate;
    if (with_fine > with_coarse) {
      return "adding cut points raised the rate at seed " +
             std::to_string(seed);
    }
  }

  for (unsigned seed = 1; seed <= 200; ++seed) {
    RandomBaseParams params;
    params.seed = 8000 + seed;
    params.label_count = 2 + seed % 3;
    params.feature_count = 1 + seed % 4;
    params.example_count = 1 + seed % 8;  // <= 8 examples
    params.value_grid = 3;
    ExampleBase base = random_base(params);
    if (inconsistency_rate(base).rate != naive_inconsistency(base)) {
      return "brute-force mismatch at seed " + std::to_string(seed);
    }
  }
  return "";
}

struct MdlEnumeration {
  std::size_t cases = 0;
  std::size_t with_cuts = 0;
  std::string failure;
};

void enumerate_counts(std::vector<std::size_t>& cells, std::size_t index,
                      std::size_t remaining, MdlEnumeration* out) {
  if (!out->failure.empty()) return;
  if (index == cells.size()) {
    std::size_t total = 0;
    for (std::size_t c : cells) total += c;
    if (total == 0) return;

    std::vector<double> values;
    std::vector<std::string> labels;
    values.reserve(total);
    labels.reserve(total);
    for (std::size_t cell = 0; cell < cells.size(); ++cell) {
      const double value = static_cast<double>(cell / 2);
      const std::string label = cell % 2 == 0 ? "A" : "B";
      for (std::size_t k = 0; k < cells[cell]; ++k) {
        values.push_back(value);
        labels.push_back(label);
      }
    }

    const std::vector<double> got = mdl_cuts(values, labels);
    const std::vector<double> want = oracle_mdl_cuts(values, labels);
    ++out->cases;
    if (!want.empty()) ++out->with_cuts;
    if (got != want) {
      std::string cfg;
      for (std::size_t c : cells) cfg += std::to_string(c) + ",";
      out->failure = "cut mismatch on cell counts [" + cfg + "]";
    }
    return;
  }
  for (std::size_t c = 0; c <= remaining; ++c) {
    cells[index] = c;
    enumerate_counts(cells, index + 1, remaining - c, out);
  }
  cells[index] = 0;
}

std::string mdl_reference_agreement() {
  if (mdl_cuts({1, 2, 3, 10, 11, 12}, {"A", "A", "A", "B", "B", "B"}) !=
      std::vector<double>{6.5}) {
    return "separable fixture did not produce the single cut 6.5";
  }
  if (!mdl_cuts({1, 2}, {"A", "B"}).empty()) {
    return "two alternating examples produced a cut";
  }

  // Every base of <= 8 examples over 4 values x 2 labels, as cell counts.
  MdlEnumeration result;
  std::vector<std::size_t> cells(8, 0);
  enumerate_counts(cells, 0, 8, &result);
  if (!result.failure.empty()) return result.failure;
  if (result.cases != 12869) {
    return "enumeration covered " + std::to_string(result.cases) +
           " bases, expected 12869";
  }
  if (result.with_cuts == 0) {
    return "enumeration never produced a cut, oracle comparison is vacuous";
  }
  return "";
}

std::string filter_sanity() {
  FeatureSchema schema({{"f", FeatureKind::Nominal, {"a", "b"}}}, "label",
                       {"+", "-"});
  auto nominal_base = [&](const std::vector<std::pair<const char*, const char*>>&
                              rows) {
    std::vector<Example> examples;
    for (const auto& [token, label] : rows) {
      examples.push_back({{{Value::token(token)}}, label});
    }
    return ExampleBase(schema, std::move(examples));
  };

  ExampleBase constant = nominal_base(
      {{"a", "+"}, {"a", "-"}, {"a", "+"}, {"a", "-"}});
  if (info_gain(constant, "f") != 0.0) {
    return "constant feature scored nonzero info gain";
  }

  ExampleBase independent = nominal_base(
      {{"a", "+"}, {"a", "-"}, {"b", "+"}, {"b", "-"}});
  if (info_gain(independent, "f") != 0.0) {
    return "label-independent feature scored nonzero info gain";
  }

  ExampleBase determining = nominal_base(
      {{"a", "+"}, {"a", "+"}, {"b", "-"}, {"b", "-"}, {"b", "-"}});
  if (info_gain(determining, "f") != label_entropy(determining)) {
    return "determining feature missed the label entropy";
  }

  RandomBaseParams params;
  params.seed = 3;
  params.label_count = 2;
  params.feature_count = 3;
  params.example_count = 80;
  ExampleBase base = random_base(params);
  ReliefParams relief;
  relief.seed = 99;
  std::vector<FeatureScore> first = relief_weights(base, relief);
  std::vector<FeatureScore> second = relief_weights(base, relief);
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].value != second[i].value) {
      return "relief weights differ between two seeded runs";
    }
  }

  FeatureSchema two({{"ind", FeatureKind::Numeric, {}},
                     {"pad", FeatureKind::Numeric, {}}},
                    "label", {"+", "-"});
  std::vector<Example> rows;
  SplitMix64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const bool positive = i % 2 == 0;
    rows.push_back({{{Value::number(positive ? 1.0 : 0.0),
                      Value::number(static_cast<double>(rng.next_below(9)))}},
                    positive ? "+" : "-"});
  }
  ExampleBase indicator(two, std::move(rows));
  if (relief_score(indicator, "ind") != 1.0) {
    return "perfect indicator feature did not score 1.0";
  }
  return "";
}

std::string nested_subset_chain() {
  GeneratorSpec spec;
  spec.seed = 1;
  spec.label_count = 2;
  spec.relevant = 2;
  spec.irrelevant = 2;
  spec.example_count = 240;
  ExampleBase base = gen_consistent(spec);

  const EvaluationConfig raw = EvaluationConfig::raw_audit();
  BatchResult batch = evaluate_many(
      {{"irrelevant-only", project(base, {"i1", "i2"}), raw},
       {"plus-partial", project(base, {"i1", "i2", "r1"}), raw},
       {"plus-determining", project(base, {"i1", "i2", "r1", "r2"}), raw}});
  if (!batch.errors.empty()) {
    return "batch error: " + batch.errors[0].message;
  }

  Rational none;
  Rational partial;
  Rational full;
  for (const EvaluationReport& r : batch.reports) {
    if (r.input.name == "irrelevant-only") none = r.consistency.rate;
    if (r.input.name == "plus-partial") partial = r.consistency.rate;
    if (r.input.name == "plus-determining") full = r.consistency.rate;
  }

  if (!(full < partial && partial < none)) {
    return "chain not strictly decreasing: " + none.to_string() + " -> " +
           partial.to_string() + " -> " + full.to_string();
  }
  if (!full.is_zero()) {
    return "full feature set did not reach 0: " + full.to_string();
  }
  if (batch.reports[0].input.name != "plus-determining" ||
      batch.reports[2].input.name != "irrelevant-only") {
    return "batch ranking does not follow the rates";
  }
  return "";
}

std::string cli_determinism() {
  auto run = [](const std::string& tag) -> std::string {
    const std::string out_path = "acceptance_cli_" + tag + ".tmp";
    const std::string command = std::string(FSE_CLI_PATH) +
                                " evaluate --input " +
                                fixture_path("discretized_inconsistent.csv") +
                                " --name determinism >" + out_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      std::remove(out_path.c_str());
      return "";
    }
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    return buf.str();
  };

  const std::string first = run("a");
  const std::string second = run("b");
  if (first.empty() || second.empty()) {
    return "CLI run failed or produced no output";
  }
  if (first != second) {
    return "two identical invocations produced different bytes";
  }
  return "";
}

}  // namespace

int main() {
  Gate gate;
  gate.run("fixture bases measure exactly 0 and 1/4", fixture_rates);
  gate.run("rate bounds hold on 1000 random bases and the worst case is tight",
           rate_bounds);
  gate.run("all-irrelevant bases select nothing and report the minority floor",
           irrelevant_features_floor);
  gate.run("rates never increase when features or cut points are added",
           monotonicity);
  gate.run("mdl discretizer matches the exhaustive reference", mdl_reference_agreement);
  gate.run("filter scores hit their exact anchors", filter_sanity);
  gate.run("nested feature sets drive the rate strictly down to zero",
           nested_subset_chain);
  gate.run("identical CLI invocations emit identical bytes", cli_determinism);

  if (gate.failures > 0) {
    std::cout << gate.failures << " acceptance check(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance checks passed\n";
  return 0;
}
