#include "fse/filters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>

#include "fse/discretize.hpp"
#include "fse/errors.hpp"
#include "fse/rng.hpp"

namespace fse {

const char* score_method_name(ScoreMethod method) {
  switch (method) {
    case ScoreMethod::InfoGain: return "infogain";
    case ScoreMethod::ChiSquared: return "chi2";
    case ScoreMethod::Relief: return "relief";
  }
  return "unknown";
}

namespace {

// value index x label index counts plus both marginals, with deterministic
// index orders (vocabulary order x schema label order).
struct Contingency {
  std::vector<std::vector<std::size_t>> cells;  // [value][label]
  std::vector<std::size_t> value_totals;
  std::vector<std::size_t> label_totals;
  std::size_t total = 0;
};

Contingency contingency_table(const ExampleBase& base, std::size_t col) {
  const FeatureDescriptor& f = base.schema().features()[col];
  const std::size_t nv = f.vocabulary.size();
  const std::size_t nl = base.schema().labels().size();

  Contingency t;
  t.cells.assign(nv, std::vector<std::size_t>(nl, 0));
  t.value_totals.assign(nv, 0);
  t.label_totals.assign(nl, 0);

  std::unordered_map<std::string, std::size_t> value_index;
  for (std::size_t i = 0; i < nv; ++i) value_index.emplace(f.vocabulary[i], i);

  for (const Example& ex : base.examples()) {
    const std::size_t v = value_index.at(ex.description.values[col].as_token());
    const std::size_t l = base.schema().label_index(ex.label);
    ++t.cells[v][l];
    ++t.value_totals[v];
    ++t.label_totals[l];
    ++t.total;
  }
  return t;
}

std::size_t nominal_column(const ExampleBase& base, const std::string& feature) {
  const std::size_t col = base.schema().feature_index(feature);
  if (base.schema().features()[col].kind != FeatureKind::Nominal) {
    throw ConfigError(Errc::NumericFeatureUnsupported,
                      "feature '" + feature +
                          "' is numeric; bin it first or score it with relief");
  }
  return col;
}

double entropy_of_counts(const std::vector<std::size_t>& counts,
                         std::size_t total) {
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h += p * std::log2(static_cast<double>(total) / static_cast<double>(c));
  }
  return h;
}

}  // namespace

double label_entropy(const ExampleBase& base) {
  std::vector<std::size_t> counts(base.schema().labels().size(), 0);
  for (const Example& ex : base.examples()) {
    ++counts[base.schema().label_index(ex.label)];
  }
  return entropy_of_counts(counts, base.size());
}

double info_gain(const ExampleBase& base, const std::string& feature) {
  const Contingency t = contingency_table(base, nominal_column(base, feature));

  // When every value maps to a single label, the conditional entropy is an
  // exact zero, so the gain is exactly the label entropy.
  bool determining = true;
  for (const auto& row : t.cells) {
    if (std::count_if(row.begin(), row.end(),
                      [](std::size_t c) { return c > 0; }) > 1) {
      determining = false;
      break;
    }
  }
  if (determining) return label_entropy(base);

  // Mutual-information form: each cell contributes its share of the odds
  // ratio against independence. A table in exact product form (including
  // any constant feature) makes every term log2(1) = 0, hence an exact 0.
  const double n = static_cast<double>(t.total);
  double gain = 0.0;
  for (std::size_t v = 0; v < t.cells.size(); ++v) {
    for (std::size_t l = 0; l < t.cells[v].size(); ++l) {
      const std::size_t c = t.cells[v][l];
      if (c == 0) continue;
      const double joint =
          static_cast<double>(c) * static_cast<double>(t.total);
      const double product = static_cast<double>(t.value_totals[v]) *
                             static_cast<double>(t.label_totals[l]);
      gain += (static_cast<double>(c) / n) * std::log2(joint / product);
    }
  }
  return gain < 0.0 ? 0.0 : gain;
}

double chi_squared(const ExampleBase& base, const std::string& feature) {
  const Contingency t = contingency_table(base, nominal_column(base, feature));

  const double n = static_cast<double>(t.total);
  double stat = 0.0;
  for (std::size_t v = 0; v < t.cells.size(); ++v) {
    for (std::size_t l = 0; l < t.cells[v].size(); ++l) {
      const double expected = static_cast<double>(t.value_totals[v]) *
                              static_cast<double>(t.label_totals[l]) / n;
      if (expected == 0.0) continue;
      const double diff = static_cast<double>(t.cells[v][l]) - expected;
      stat += diff * diff / expected;
    }
  }
  return stat;
}

namespace {

struct ReliefContext {
  const ExampleBase* base = nullptr;
  std::vector<double> ranges;  // per numeric feature, max - min (0 if flat)
};

double feature_diff(const ReliefContext& ctx, std::size_t col,
                    const Example& a, const Example& b) {
  const Value& va = a.description.values[col];
  const Value& vb = b.description.values[col];
  if (ctx.base->schema().features()[col].kind == FeatureKind::Numeric) {
    const double range = ctx.ranges[col];
    if (range == 0.0) return 0.0;
    return std::abs(va.as_number() - vb.as_number()) / range;
  }
  return va.as_token() == vb.as_token() ? 0.0 : 1.0;
}

double example_distance(const ReliefContext& ctx, const Example& a,
                        const Example& b) {
  double d = 0.0;
  const std::size_t cols = ctx.base->schema().features().size();
  for (std::size_t col = 0; col < cols; ++col) {
    d += feature_diff(ctx, col, a, b);
  }
  return d;
}

}  // namespace

std::vector<FeatureScore> relief_weights(const ExampleBase& base,
                                         const ReliefParams& params) {
  const auto& labels = base.schema().labels();
  if (labels.size() != 2) {
    throw ConfigError(Errc::NotBinaryLabels,
                      "relief needs exactly two labels, got " +
                          std::to_string(labels.size()));
  }
  std::size_t per_label[2] = {0, 0};
  for (const Example& ex : base.examples()) {
    ++per_label[base.schema().label_index(ex.label)];
  }
  if (per_label[0] == 0 || per_label[1] == 0) {
    const std::size_t missing = per_label[0] == 0 ? 0 : 1;
    throw DataError(Errc::DegenerateBase,
                    "label '" + labels[missing] + "' has no examples");
  }

  ReliefContext ctx;
  ctx.base = &base;
  const auto& features = base.schema().features();
  ctx.ranges.assign(features.size(), 0.0);
  for (std::size_t col = 0; col < features.size(); ++col) {
    if (features[col].kind != FeatureKind::Numeric) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Example& ex : base.examples()) {
      const double v = ex.description.values[col].as_number();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    ctx.ranges[col] = hi - lo;
  }

  const std::size_t n = base.size();
  const std::size_t m = params.sample_count == 0 ? n : params.sample_count;
  SplitMix64 rng(params.seed);
  std::vector<double> weights(features.size(), 0.0);

  for (std::size_t round = 0; round < m; ++round) {
    const std::size_t pick = static_cast<std::size_t>(rng.next_below(n));
    const Example& x = base.examples()[pick];

    // Nearest neighbors by total distance; ties go to the lowest index so
    // the result is independent of evaluation order.
    std::size_t hit = n;
    std::size_t miss = n;
    double hit_dist = std::numeric_limits<double>::infinity();
    double miss_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pick) continue;
      const Example& other = base.examples()[j];
      const double d = example_distance(ctx, x, other);
      if (other.label == x.label) {
        if (d < hit_dist) {
          hit_dist = d;
          hit = j;
        }
      } else if (d < miss_dist) {
        miss_dist = d;
        miss = j;
      }
    }

    for (std::size_t col = 0; col < features.size(); ++col) {
      if (hit != n) {
        weights[col] -= feature_diff(ctx, col, x, base.examples()[hit]);
      }
      weights[col] += feature_diff(ctx, col, x, base.examples()[miss]);
    }
  }

  std::vector<FeatureScore> scores;
  scores.reserve(features.size());
  for (std::size_t col = 0; col < features.size(); ++col) {
    scores.push_back({features[col].name, ScoreMethod::Relief,
                      weights[col] / static_cast<double>(m)});
  }
  return scores;
}

double relief_score(const ExampleBase& base, const std::string& feature,
                    const ReliefParams& params) {
  const std::size_t col = base.schema().feature_index(feature);
  return relief_weights(base, params)[col].value;
}

double score_feature(const ExampleBase& base, const std::string& feature,
                     ScoreMethod method, const ReliefParams& relief) {
  if (method == ScoreMethod::Relief) {
    return relief_score(base, feature, relief);
  }

  const std::size_t col = base.schema().feature_index(feature);
  const ExampleBase* scored = &base;
  std::optional<ExampleBase> binned;
  if (base.schema().features()[col].kind == FeatureKind::Numeric) {
    // Entropy and chi-squared need a nominal domain: bin this one feature
    // with the supervised discretizer, just for scoring. No cut worth
    // keeping means a constant binned column, which scores exactly 0.
    IntervalScheme scheme =
        scheme_for_feature(base, feature, DiscretizationMethod::mdl());
    binned = apply_schemes(base, {scheme});
    scored = &*binned;
  }
  return method == ScoreMethod::InfoGain ? info_gain(*scored, feature)
                                         : chi_squared(*scored, feature);
}

std::vector<FeatureScore> score_all(const ExampleBase& base, ScoreMethod method,
                                    const ReliefParams& relief) {
  if (method == ScoreMethod::Relief) return relief_weights(base, relief);

  std::vector<FeatureScore> scores;
  scores.reserve(base.schema().features().size());
  for (const FeatureDescriptor& f : base.schema().features()) {
    scores.push_back({f.name, method, score_feature(base, f.name, method)});
  }
  return scores;
}

FeatureSubset select_features(const ExampleBase& base,
                              const SelectionPolicy& policy,
                              const ReliefParams& relief) {
  if (policy.mode == SelectionPolicy::Mode::TopK && policy.top_k == 0) {
    throw ConfigError(Errc::ConfigIncompatible, "top-k must be at least 1");
  }
  if (policy.mode == SelectionPolicy::Mode::Threshold &&
      policy.method != ScoreMethod::Relief && policy.threshold < 0.0) {
    throw ConfigError(Errc::ConfigIncompatible,
                      "threshold must be non-negative for " +
                          std::string(score_method_name(policy.method)));
  }

  std::vector<FeatureScore> scores = score_all(base, policy.method, relief);

  std::vector<std::size_t> kept;
  if (policy.mode == SelectionPolicy::Mode::Threshold) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i].value > policy.threshold) kept.push_back(i);
    }
  } else {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&scores](std::size_t a, std::size_t b) {
                       return scores[a].value > scores[b].value;
                     });
    order.resize(std::min(policy.top_k, order.size()));
    kept = std::move(order);
    std::sort(kept.begin(), kept.end());
  }

  FeatureSubset subset;
  subset.features.reserve(kept.size());
  for (std::size_t i : kept) subset.features.push_back(scores[i].feature);
  subset.provenance = SelectionProvenance{policy, std::move(scores)};
  return subset;
}

}  // namespace fse
