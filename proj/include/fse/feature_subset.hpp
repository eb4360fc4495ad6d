#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace fse {

enum class ScoreMethod { InfoGain, ChiSquared, Relief };

const char* score_method_name(ScoreMethod method);

struct FeatureScore {
  std::string feature;
  ScoreMethod method = ScoreMethod::InfoGain;
  double value = 0.0;
};

/// How a subset gets picked from per-feature scores. Threshold keeps
/// features scoring strictly above t; TopK keeps the k best, ties broken
/// by schema order.
struct SelectionPolicy {
  enum class Mode { Threshold, TopK };

  Mode mode = Mode::Threshold;
  ScoreMethod method = ScoreMethod::InfoGain;
  double threshold = 0.0;
  std::size_t top_k = 1;

  static SelectionPolicy with_threshold(ScoreMethod m, double t) {
    SelectionPolicy p;
    p.mode = Mode::Threshold;
    p.method = m;
    p.threshold = t;
    return p;
  }

  static SelectionPolicy top(ScoreMethod m, std::size_t k) {
    SelectionPolicy p;
    p.mode = Mode::TopK;
    p.method = m;
    p.top_k = k;
    return p;
  }
};

struct SelectionProvenance {
  SelectionPolicy policy;
  std::vector<FeatureScore> scores;  // every candidate feature, schema order
};

/// A set of selected feature names, kept in schema order. May be empty:
/// that is the "no feature survives filtering" outcome and collapses the
/// description space to a single point.
struct FeatureSubset {
  std::vector<std::string> features;
  std::optional<SelectionProvenance> provenance;

  FeatureSubset() = default;
  FeatureSubset(std::vector<std::string> names)  // NOLINT(google-explicit-constructor)
      : features(std::move(names)) {}
  FeatureSubset(std::initializer_list<std::string> names)
      : features(names) {}
};

}  // namespace fse
