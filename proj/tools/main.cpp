#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fse/csv.hpp"
#include "fse/discretize.hpp"
#include "fse/errors.hpp"
#include "fse/filters.hpp"
#include "fse/pipeline.hpp"
#include "fse/synth.hpp"
#include "fse/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitConfig = 3;

struct InputArgs {
  std::string path;
  std::string sidecar;
  std::string label = "label";
  bool label_set = false;
};

void add_input_options(CLI::App* cmd, InputArgs* args) {
  cmd->add_option("--input", args->path, "input CSV file")->required();
  cmd->add_option("--sidecar", args->sidecar,
                  "JSON schema sidecar (label column, label set, kinds)");
  cmd->add_option("--label", args->label, "label column name")
      ->default_val("label");
}

fse::ExampleBase load_input(const CLI::App* cmd, const InputArgs& args) {
  fse::LoadOptions options;
  if (!args.sidecar.empty()) options = fse::load_sidecar(args.sidecar);
  if (cmd->count("--label") > 0) options.label_column = args.label;
  return fse::load_csv(args.path, options);
}

struct SelectionArgs {
  std::string method = "infogain";
  double threshold = 0.0;
  std::optional<std::size_t> top_k;
  std::size_t relief_samples = 0;
  std::uint64_t seed = 0;
};

void add_selection_options(CLI::App* cmd, SelectionArgs* args) {
  cmd->add_option("--select", args->method,
                  "feature filter: infogain, chi2, relief, none")
      ->default_val("infogain")
      ->check(CLI::IsMember({"infogain", "chi2", "relief", "none"}));
  cmd->add_option("--threshold", args->threshold,
                  "keep features scoring strictly above this")
      ->default_val(0.0);
  cmd->add_option("--top-k", args->top_k,
                  "keep the k best-scoring features instead of thresholding");
  cmd->add_option("--relief-samples", args->relief_samples,
                  "relief sample count (0 = one per example)")
      ->default_val(0);
  cmd->add_option("--seed", args->seed, "seed for relief sampling")
      ->envname("FSE_SEED")
      ->default_val(0);
}

fse::ScoreMethod parse_method(const std::string& name) {
  if (name == "infogain") return fse::ScoreMethod::InfoGain;
  if (name == "chi2") return fse::ScoreMethod::ChiSquared;
  return fse::ScoreMethod::Relief;
}

std::optional<fse::SelectionPolicy> parse_policy(const SelectionArgs& args) {
  if (args.method == "none") return std::nullopt;
  const fse::ScoreMethod method = parse_method(args.method);
  if (args.top_k) return fse::SelectionPolicy::top(method, *args.top_k);
  return fse::SelectionPolicy::with_threshold(method, args.threshold);
}

struct DiscretizeArgs {
  std::string method = "mdl";
  std::size_t bins = 2;
};

void add_discretize_options(CLI::App* cmd, DiscretizeArgs* args) {
  cmd->add_option("--discretize", args->method,
                  "binning for numeric features: mdl, width, freq, none")
      ->default_val("mdl")
      ->check(CLI::IsMember({"mdl", "width", "freq", "none"}));
  cmd->add_option("--bins", args->bins, "bin count for width/freq binning")
      ->default_val(2);
}

std::optional<fse::DiscretizationMethod> parse_discretization(
    const DiscretizeArgs& args) {
  if (args.method == "none") return std::nullopt;
  if (args.method == "width") {
    return fse::DiscretizationMethod::equal_width(args.bins);
  }
  if (args.method == "freq") {
    return fse::DiscretizationMethod::equal_frequency(args.bins);
  }
  return fse::DiscretizationMethod::mdl();
}

// Results go out in one piece: either the full document or nothing.
void emit(const std::string& output_path, const std::string& document) {
  if (output_path.empty() || output_path == "-") {
    std::cout << document;
    std::cout.flush();
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw fse::DataError(fse::Errc::IoError,
                         "cannot open '" + output_path + "' for writing");
  }
  out << document;
  if (!out.flush()) {
    throw fse::DataError(fse::Errc::IoError,
                         "write to '" + output_path + "' failed");
  }
}

int run_evaluate(const InputArgs& input, const SelectionArgs& selection,
                 const DiscretizeArgs& discretize, const CLI::App* cmd,
                 double tau, const std::string& format,
                 const std::string& name_flag, const std::string& output) {
  fse::ExampleBase base = load_input(cmd, input);

  fse::EvaluationConfig config;
  config.selection = parse_policy(selection);
  config.discretization = parse_discretization(discretize);
  config.relief.sample_count = selection.relief_samples;
  config.relief.seed = selection.seed;
  config.verdict_fraction = tau;

  const std::string name = name_flag.empty() ? input.path : name_flag;
  const fse::EvaluationReport report = fse::evaluate(base, name, config);

  if (format == "json") {
    emit(output, fse::report_json(report).dump(2) + "\n");
  } else {
    emit(output, fse::report_text(report));
  }
  return 0;
}

int run_score(const InputArgs& input, const SelectionArgs& selection,
              const CLI::App* cmd, const std::string& format,
              const std::string& output) {
  fse::ExampleBase base = load_input(cmd, input);
  if (selection.method == "none") {
    throw fse::ConfigError(fse::Errc::ConfigIncompatible,
                           "score needs a concrete method, not 'none'");
  }

  fse::ReliefParams relief;
  relief.sample_count = selection.relief_samples;
  relief.seed = selection.seed;
  const std::vector<fse::FeatureScore> scores =
      fse::score_all(base, parse_method(selection.method), relief);

  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const fse::FeatureScore& s : scores) {
      doc.push_back({{"feature", s.feature},
                     {"method", fse::score_method_name(s.method)},
                     {"score", s.value}});
    }
    emit(output, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (const fse::FeatureScore& s : scores) {
      text += s.feature + "\t" + fse::render_number(s.value) + "\n";
    }
    emit(output, text);
  }
  return 0;
}

int run_discretize(const InputArgs& input, const DiscretizeArgs& discretize,
                   const CLI::App* cmd, const std::string& output) {
  fse::ExampleBase base = load_input(cmd, input);
  const std::optional<fse::DiscretizationMethod> method =
      parse_discretization(discretize);
  if (!method) {
    throw fse::ConfigError(fse::Errc::ConfigIncompatible,
                           "discretize needs a method, not 'none'");
  }

  std::vector<fse::IntervalScheme> schemes;
  for (const fse::FeatureDescriptor& f : base.schema().features()) {
    if (f.kind != fse::FeatureKind::Numeric) continue;
    schemes.push_back(fse::scheme_for_feature(base, f.name, *method));
  }
  const fse::ExampleBase binned = fse::apply_schemes(base, schemes);

  std::ostringstream csv;
  fse::write_csv(csv, binned);
  emit(output, csv.str());
  return 0;
}

int run_inspect(const InputArgs& input, const CLI::App* cmd,
                const std::string& format, const std::string& output) {
  fse::ExampleBase base = load_input(cmd, input);
  const auto histogram = fse::label_histogram(base);
  const fse::Rational minority = fse::minority_bound(histogram);
  const fse::Rational max_rate =
      fse::theoretical_max(base.schema().labels().size());

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["examples"] = base.size();
    doc["labels"] = base.schema().labels();
    nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
    for (const fse::FeatureDescriptor& f : base.schema().features()) {
      kinds[f.name] = fse::feature_kind_name(f.kind);
    }
    doc["features"] = kinds;
    doc["label_histogram"] = histogram;
    doc["minority"] = {{"value", minority.to_double()},
                       {"exact", minority.to_string()}};
    doc["theoretical_max"] = {{"value", max_rate.to_double()},
                              {"exact", max_rate.to_string()}};
    emit(output, doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "examples: " << base.size() << "\n";
    text << "labels (" << base.schema().labels().size() << "):";
    for (const std::string& l : base.schema().labels()) text << " " << l;
    text << "\n";
    for (const fse::FeatureDescriptor& f : base.schema().features()) {
      text << "feature " << f.name << ": " << fse::feature_kind_name(f.kind)
           << "\n";
    }
    text << "label histogram:";
    for (const auto& [label, count] : histogram) {
      text << " " << label << "=" << count;
    }
    text << "\n";
    text << "minority proportion: " << fse::render_number(minority.to_double())
         << " (" << minority.to_string() << ")\n";
    text << "theoretical max: " << fse::render_number(max_rate.to_double())
         << " (" << max_rate.to_string() << ")\n";
    emit(output, text.str());
  }
  return 0;
}

struct SynthArgs {
  std::string kind = "consistent";
  std::uint64_t seed = 1;
  std::size_t examples = 100;
  std::size_t labels = 2;
  std::size_t relevant = 2;
  std::size_t irrelevant = 2;
  double noise = 0.0;
  std::size_t descriptions = 1;
  std::size_t copies = 1;
  std::string output;
  std::string sidecar_out;
};

int run_synth(const SynthArgs& args) {
  fse::GeneratorSpec spec;
  spec.seed = args.seed;
  spec.example_count = args.examples;
  spec.label_count = args.labels;
  spec.relevant = args.relevant;
  spec.irrelevant = args.irrelevant;
  spec.noise_rate = args.noise;

  std::optional<fse::ExampleBase> base;
  if (args.kind == "consistent") {
    base = fse::gen_consistent(spec);
  } else if (args.kind == "noisy") {
    base = fse::gen_noisy(spec);
  } else {
    base = fse::gen_worst(args.labels, args.descriptions, args.copies);
  }

  std::ostringstream csv;
  fse::write_csv(csv, *base);
  emit(args.output, csv.str());
  if (!args.sidecar_out.empty()) {
    fse::save_sidecar(args.sidecar_out, *base);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("evaluates how well a feature set separates labeled examples");
  app.set_version_flag("--version", fse::kVersion);
  app.require_subcommand(1);

  InputArgs input;
  SelectionArgs selection;
  DiscretizeArgs discretize;
  double tau = 0.5;
  std::string format = "json";
  std::string name_flag;
  std::string output;

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "run the full three-step evaluation");
  add_input_options(evaluate, &input);
  add_selection_options(evaluate, &selection);
  add_discretize_options(evaluate, &discretize);
  evaluate->add_option("--tau", tau,
                       "inadequate when rate > tau * minority proportion")
      ->default_val(0.5)
      ->check(CLI::Range(0.0, 1.0));
  evaluate->add_option("--format", format, "output format: json or text")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "text"}));
  evaluate->add_option("--name", name_flag,
                       "report name (defaults to the input path)");
  evaluate->add_option("--output", output, "output file ('-' = stdout)");

  InputArgs score_input;
  SelectionArgs score_selection;
  std::string score_format = "text";
  std::string score_output;
  CLI::App* score = app.add_subcommand("score", "per-feature relevance scores");
  add_input_options(score, &score_input);
  add_selection_options(score, &score_selection);
  score->add_option("--format", score_format, "output format: json or text")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));
  score->add_option("--output", score_output, "output file ('-' = stdout)");

  InputArgs disc_input;
  DiscretizeArgs disc_args;
  std::string disc_output;
  CLI::App* disc = app.add_subcommand(
      "discretize", "bin numeric features and emit the discretized CSV");
  add_input_options(disc, &disc_input);
  add_discretize_options(disc, &disc_args);
  disc->add_option("--output", disc_output, "output file ('-' = stdout)");

  InputArgs inspect_input;
  std::string inspect_format = "text";
  std::string inspect_output;
  CLI::App* inspect = app.add_subcommand("inspect", "summarize an example base");
  add_input_options(inspect, &inspect_input);
  inspect
      ->add_option("--format", inspect_format, "output format: json or text")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));
  inspect->add_option("--output", inspect_output, "output file ('-' = stdout)");

  SynthArgs synth_args;
  CLI::App* synth =
      app.add_subcommand("synth", "generate a synthetic example base as CSV");
  synth
      ->add_option("--kind", synth_args.kind,
                   "generator: consistent, noisy, worst")
      ->default_val("consistent")
      ->check(CLI::IsMember({"consistent", "noisy", "worst"}));
  synth->add_option("--seed", synth_args.seed, "generator seed")
      ->envname("FSE_SEED")
      ->default_val(1);
  synth->add_option("--examples", synth_args.examples, "example count")
      ->default_val(100);
  synth->add_option("--labels", synth_args.labels, "label alphabet size")
      ->default_val(2);
  synth
      ->add_option("--relevant", synth_args.relevant,
                   "label-determining feature count")
      ->default_val(2);
  synth
      ->add_option("--irrelevant", synth_args.irrelevant,
                   "label-independent feature count")
      ->default_val(2);
  synth
      ->add_option("--noise", synth_args.noise,
                   "fraction of labels re-rolled at random (noisy only)")
      ->default_val(0.0);
  synth
      ->add_option("--descriptions", synth_args.descriptions,
                   "distinct descriptions (worst only)")
      ->default_val(1);
  synth
      ->add_option("--copies", synth_args.copies,
                   "examples per description and label (worst only)")
      ->default_val(1);
  synth->add_option("--output", synth_args.output,
                    "output file ('-' = stdout)");
  synth->add_option("--sidecar-out", synth_args.sidecar_out,
                    "also write a JSON schema sidecar here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (evaluate->parsed()) {
      return run_evaluate(input, selection, discretize, evaluate, tau, format,
                          name_flag, output);
    }
    if (score->parsed()) {
      return run_score(score_input, score_selection, score, score_format,
                       score_output);
    }
    if (disc->parsed()) {
      return run_discretize(disc_input, disc_args, disc, disc_output);
    }
    if (inspect->parsed()) {
      return run_inspect(inspect_input, inspect, inspect_format,
                         inspect_output);
    }
    if (synth->parsed()) {
      return run_synth(synth_args);
    }
  } catch (const fse::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fse::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
