#include "fse/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fse/errors.hpp"
#include "fse/version.hpp"

namespace fse {

const char* verdict_name(Verdict verdict) {
  return verdict == Verdict::Adequate ? "adequate" : "needs_more_features";
}

EvaluationReport evaluate(const ExampleBase& base, const std::string& name,
                          const EvaluationConfig& config) {
  if (!(config.verdict_fraction >= 0.0 && config.verdict_fraction <= 1.0)) {
    throw ConfigError(Errc::ConfigIncompatible,
                      "verdict fraction must lie in [0, 1]");
  }

  EvaluationReport report;
  report.config = config;
  report.input.name = name;
  report.input.example_count = base.size();
  report.input.feature_count = base.schema().features().size();
  report.input.label_count = base.schema().labels().size();
  report.input.label_histogram = label_histogram(base);

  report.selection = config.selection
                         ? select_features(base, *config.selection,
                                           config.relief)
                         : full_subset(base);

  ExampleBase working = project(base, report.selection);
  if (config.discretization && !report.selection.features.empty()) {
    for (const FeatureDescriptor& f : working.schema().features()) {
      if (f.kind != FeatureKind::Numeric) continue;
      report.schemes.push_back(
          scheme_for_feature(working, f.name, *config.discretization));
    }
    working = apply_schemes(working, report.schemes);
  }

  report.consistency = inconsistency_rate(working);

  const double rate = report.consistency.rate.to_double();
  const double allowed =
      config.verdict_fraction * report.consistency.minority.to_double();
  report.verdict =
      rate > allowed ? Verdict::NeedsMoreFeatures : Verdict::Adequate;
  return report;
}

BatchResult evaluate_many(const std::vector<BatchRequest>& requests) {
  if (requests.empty()) {
    throw ConfigError(Errc::EmptyInput, "batch has no entries");
  }

  BatchResult result;
  for (const BatchRequest& request : requests) {
    try {
      result.reports.push_back(
          evaluate(request.base, request.name, request.config));
    } catch (const Error& e) {
      result.errors.push_back(
          {request.name, std::string(errc_name(e.code())) + ": " + e.what()});
    }
  }

  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const EvaluationReport& a, const EvaluationReport& b) {
                     if (a.consistency.rate != b.consistency.rate) {
                       return a.consistency.rate < b.consistency.rate;
                     }
                     return a.input.name < b.input.name;
                   });
  return result;
}

namespace {

nlohmann::ordered_json policy_json(const SelectionPolicy& policy) {
  nlohmann::ordered_json j;
  j["method"] = score_method_name(policy.method);
  if (policy.mode == SelectionPolicy::Mode::Threshold) {
    j["mode"] = "threshold";
    j["threshold"] = policy.threshold;
  } else {
    j["mode"] = "top_k";
    j["top_k"] = policy.top_k;
  }
  return j;
}

nlohmann::ordered_json scheme_json(const IntervalScheme& scheme) {
  nlohmann::ordered_json j;
  j["feature"] = scheme.feature;
  j["cuts"] = scheme.cuts;
  nlohmann::ordered_json intervals = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < scheme.interval_count(); ++i) {
    intervals.push_back(scheme.interval_token(i));
  }
  j["intervals"] = intervals;
  return j;
}

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["value"] = r.to_double();
  j["exact"] = r.to_string();
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.input.name;

  nlohmann::ordered_json input;
  input["examples"] = report.input.example_count;
  input["features"] = report.input.feature_count;
  input["labels"] = report.input.label_count;
  input["label_histogram"] = report.input.label_histogram;
  j["input"] = input;

  nlohmann::ordered_json selection;
  selection["enabled"] = report.selection.provenance.has_value();
  if (report.selection.provenance) {
    selection["policy"] = policy_json(report.selection.provenance->policy);
    nlohmann::ordered_json scores = nlohmann::ordered_json::array();
    for (const FeatureScore& s : report.selection.provenance->scores) {
      scores.push_back({{"feature", s.feature},
                        {"method", score_method_name(s.method)},
                        {"score", s.value}});
    }
    selection["scores"] = scores;
  }
  selection["selected"] = report.selection.features;
  j["selection"] = selection;

  nlohmann::ordered_json discretization;
  discretization["enabled"] = report.config.discretization.has_value();
  if (report.config.discretization) {
    discretization["method"] =
        discretization_kind_name(report.config.discretization->kind);
    if (report.config.discretization->kind !=
        DiscretizationMethod::Kind::Mdl) {
      discretization["bins"] = report.config.discretization->bins;
    }
  }
  nlohmann::ordered_json schemes = nlohmann::ordered_json::array();
  for (const IntervalScheme& s : report.schemes) {
    schemes.push_back(scheme_json(s));
  }
  discretization["schemes"] = schemes;
  j["discretization"] = discretization;

  nlohmann::ordered_json consistency;
  consistency["rate"] = rational_json(report.consistency.rate);
  consistency["minority"] = rational_json(report.consistency.minority);
  consistency["theoretical_max"] =
      rational_json(report.consistency.max_possible);
  consistency["examples"] = report.consistency.example_count;
  consistency["distinct_descriptions"] = report.consistency.description_count;
  consistency["majority_sum"] = report.consistency.majority_sum;
  nlohmann::ordered_json descriptions = nlohmann::ordered_json::array();
  for (const DescriptionStats& d : report.consistency.descriptions) {
    nlohmann::ordered_json entry;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const Value& v : d.description.values) values.push_back(v.render());
    entry["values"] = values;
    entry["label_counts"] = d.label_counts;
    entry["majority"] = d.majority;
    entry["majority_label"] = d.majority_label;
    descriptions.push_back(entry);
  }
  consistency["descriptions"] = descriptions;
  j["consistency"] = consistency;

  j["verdict"] = verdict_name(report.verdict);

  nlohmann::ordered_json config;
  config["selection"] = report.config.selection
                            ? policy_json(*report.config.selection)
                            : nlohmann::ordered_json(nullptr);
  if (report.config.discretization) {
    nlohmann::ordered_json method;
    method["method"] =
        discretization_kind_name(report.config.discretization->kind);
    if (report.config.discretization->kind !=
        DiscretizationMethod::Kind::Mdl) {
      method["bins"] = report.config.discretization->bins;
    }
    config["discretization"] = method;
  } else {
    config["discretization"] = nullptr;
  }
  config["relief"] = {{"samples", report.config.relief.sample_count},
                      {"seed", report.config.relief.seed}};
  config["verdict_fraction"] = report.config.verdict_fraction;
  j["config"] = config;

  j["version"] = kVersion;
  return j;
}

std::string report_text(const EvaluationReport& report) {
  std::ostringstream out;
  out << "feature set: " << report.input.name << "\n";
  out << "examples: " << report.input.example_count
      << ", features: " << report.input.feature_count
      << ", labels: " << report.input.label_count << "\n";

  out << "selected features (" << report.selection.features.size() << "):";
  if (report.selection.features.empty()) {
    out << " none";
  } else {
    for (const std::string& f : report.selection.features) out << " " << f;
  }
  out << "\n";
  if (report.selection.provenance) {
    for (const FeatureScore& s : report.selection.provenance->scores) {
      out << "  score[" << s.feature << "] = " << render_number(s.value)
          << " (" << score_method_name(s.method) << ")\n";
    }
  }

  for (const IntervalScheme& s : report.schemes) {
    out << "intervals[" << s.feature << "]:";
    for (std::size_t i = 0; i < s.interval_count(); ++i) {
      out << " " << s.interval_token(i);
    }
    out << "\n";
  }

  out << "inconsistency: " << render_number(report.consistency.rate.to_double())
      << " (" << report.consistency.rate.to_string() << ")\n";
  out << "minority proportion: "
      << render_number(report.consistency.minority.to_double()) << " ("
      << report.consistency.minority.to_string() << ")\n";
  out << "theoretical max: "
      << render_number(report.consistency.max_possible.to_double()) << " ("
      << report.consistency.max_possible.to_string() << ")\n";
  out << "distinct descriptions: " << report.consistency.description_count
      << "\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  return out.str();
}

}  // namespace fse
