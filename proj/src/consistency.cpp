#include "fse/consistency.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fse/errors.hpp"

namespace fse {

ConsistencyResult inconsistency_rate(const ExampleBase& base,
                                     const FeatureSubset& subset) {
  const ExampleBase projected = project(base, subset);
  const auto& labels = projected.schema().labels();

  // Group examples by description, keeping first-occurrence order and
  // per-label counts in schema label order.
  std::vector<Description> order;
  std::vector<std::vector<std::size_t>> counts;
  std::unordered_map<Description, std::size_t, DescriptionHash> index;
  for (const Example& ex : projected.examples()) {
    auto [it, fresh] = index.try_emplace(ex.description, order.size());
    if (fresh) {
      order.push_back(ex.description);
      counts.emplace_back(labels.size(), 0);
    }
    ++counts[it->second][projected.schema().label_index(ex.label)];
  }

  ConsistencyResult result;
  result.example_count = projected.size();
  result.description_count = order.size();
  result.minority = minority_bound(projected);
  result.max_possible = theoretical_max(labels.size());

  for (std::size_t d = 0; d < order.size(); ++d) {
    DescriptionStats stats;
    stats.description = std::move(order[d]);
    std::size_t best = 0;
    std::size_t best_label = 0;
    for (std::size_t l = 0; l < labels.size(); ++l) {
      const std::size_t c = counts[d][l];
      if (c == 0) continue;
      stats.label_counts[labels[l]] = c;
      stats.total += c;
      if (c > best) {
        best = c;
        best_label = l;
      }
    }
    stats.majority = best;
    stats.majority_label = labels[best_label];
    result.majority_sum += best;
    result.descriptions.push_back(std::move(stats));
  }

  result.rate = Rational(
      static_cast<std::int64_t>(result.example_count - result.majority_sum),
      static_cast<std::int64_t>(result.example_count));
  return result;
}

ConsistencyResult inconsistency_rate(const ExampleBase& base) {
  return inconsistency_rate(base, full_subset(base));
}

Rational theoretical_max(std::size_t label_count) {
  if (label_count < 2) {
    throw ConfigError(Errc::TooFewLabels,
                      "need at least two labels, got " +
                          std::to_string(label_count));
  }
  return Rational(static_cast<std::int64_t>(label_count - 1),
                  static_cast<std::int64_t>(label_count));
}

Rational minority_bound(const std::map<std::string, std::size_t>& histogram) {
  std::size_t total = 0;
  std::size_t top = 0;
  for (const auto& [label, count] : histogram) {
    total += count;
    top = std::max(top, count);
  }
  if (total == 0) {
    throw DataError(Errc::EmptyHistogram, "label histogram has no examples");
  }
  return Rational(static_cast<std::int64_t>(total - top),
                  static_cast<std::int64_t>(total));
}

Rational minority_bound(const ExampleBase& base) {
  return minority_bound(label_histogram(base));
}

DeltaResult inconsistency_delta(const ExampleBase& base,
                                const FeatureSubset& small_subset,
                                const FeatureSubset& large_subset) {
  const std::unordered_set<std::string> large_names(
      large_subset.features.begin(), large_subset.features.end());
  for (const std::string& name : small_subset.features) {
    if (large_names.find(name) == large_names.end()) {
      throw ConfigError(Errc::NotASubset,
                        "'" + name + "' is not in the larger subset");
    }
  }

  DeltaResult result;
  result.smaller = inconsistency_rate(base, small_subset);
  result.larger = inconsistency_rate(base, large_subset);
  result.delta = result.smaller.rate - result.larger.rate;
  return result;
}

}  // namespace fse
