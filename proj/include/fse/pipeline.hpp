#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fse/consistency.hpp"
#include "fse/discretize.hpp"
#include "fse/example_base.hpp"
#include "fse/filters.hpp"

namespace fse {

/// End-to-end evaluation settings: how to filter features (step 1), how to
/// discretize the numeric survivors (step 2), and where to draw the verdict
/// line on the measured rate (step 3). Either step may be disabled; with
/// both disabled the evaluation is a raw consistency audit of the base.
struct EvaluationConfig {
  std::optional<SelectionPolicy> selection =
      SelectionPolicy::with_threshold(ScoreMethod::InfoGain, 0.0);
  std::optional<DiscretizationMethod> discretization =
      DiscretizationMethod::mdl();
  ReliefParams relief;

  // The base is judged inadequate when its rate exceeds this fraction of
  // the minority proportion (the rate a featureless majority guesser
  // already achieves). Must lie in [0, 1].
  double verdict_fraction = 0.5;

  static EvaluationConfig defaults() { return {}; }

  /// Measures the base exactly as given: no filtering, no discretization.
  /// Numeric values then compare by identity, which suits data whose
  /// feature values are already discrete.
  static EvaluationConfig raw_audit() {
    EvaluationConfig c;
    c.selection.reset();
    c.discretization.reset();
    return c;
  }
};

enum class Verdict { Adequate, NeedsMoreFeatures };

const char* verdict_name(Verdict verdict);

struct InputSummary {
  std::string name;
  std::size_t example_count = 0;
  std::size_t feature_count = 0;
  std::size_t label_count = 0;
  std::map<std::string, std::size_t> label_histogram;
};

struct EvaluationReport {
  InputSummary input;
  FeatureSubset selection;  // all schema features when step 1 is disabled
  std::vector<IntervalScheme> schemes;
  ConsistencyResult consistency;
  Verdict verdict = Verdict::Adequate;
  EvaluationConfig config;
};

/// Runs the three-step evaluation: select features, discretize the numeric
/// ones that survived, measure the inconsistency of the resulting base.
/// When nothing survives selection, discretization is skipped and the rate
/// equals the minority proportion by construction (one shared description).
EvaluationReport evaluate(
    const ExampleBase& base, const std::string& name,
    const EvaluationConfig& config = EvaluationConfig::defaults());

struct BatchRequest {
  std::string name;
  ExampleBase base;
  EvaluationConfig config;
};

struct BatchError {
  std::string name;
  std::string message;
};

/// Reports ranked ascending by inconsistency rate (ties by name); failures
/// collected per item instead of aborting the batch.
struct BatchResult {
  std::vector<EvaluationReport> reports;
  std::vector<BatchError> errors;
};

BatchResult evaluate_many(const std::vector<BatchRequest>& requests);

/// Canonical JSON rendering with fixed key order; two identical evaluations
/// serialize to identical bytes (no timestamps).
nlohmann::ordered_json report_json(const EvaluationReport& report);

std::string report_text(const EvaluationReport& report);

}  // namespace fse
