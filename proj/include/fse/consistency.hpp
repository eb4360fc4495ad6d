#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fse/example_base.hpp"
#include "fse/feature_subset.hpp"
#include "fse/rational.hpp"

namespace fse {

/// One distinct description with its per-label example counts. The majority
/// label is presentational: ties break by the schema's label order.
struct DescriptionStats {
  Description description;
  std::map<std::string, std::size_t> label_counts;
  std::size_t total = 0;
  std::size_t majority = 0;
  std::string majority_label;
};

struct ConsistencyResult {
  Rational rate;                      // exact inconsistency rate
  Rational minority;                  // minority-label proportion
  Rational max_possible;              // 1 - 1/|L| for the schema's alphabet
  std::size_t example_count = 0;      // card(B)
  std::size_t description_count = 0;  // card(S_B)
  std::size_t majority_sum = 0;       // sum over descriptions of majority
  std::vector<DescriptionStats> descriptions;  // first-occurrence order
};

/// Fraction of examples that even the best possible description->label rule
/// must get wrong: 1 - (sum of per-description majority counts) / card(B).
/// 0 means the retained descriptions separate the labels perfectly. The
/// two-argument form measures the base projected onto the subset (which may
/// be empty: one shared description, rate = minority proportion).
ConsistencyResult inconsistency_rate(const ExampleBase& base,
                                     const FeatureSubset& subset);
ConsistencyResult inconsistency_rate(const ExampleBase& base);

/// Upper bound 1 - 1/label_count on any inconsistency rate over an alphabet
/// of that size. Requires label_count >= 2.
Rational theoretical_max(std::size_t label_count);

/// Proportion of examples not carrying the modal label: 1 - max(count)/total.
/// The inconsistency rate of any projection of the base is at most this.
Rational minority_bound(const std::map<std::string, std::size_t>& histogram);
Rational minority_bound(const ExampleBase& base);

struct DeltaResult {
  ConsistencyResult smaller;
  ConsistencyResult larger;
  Rational delta;  // smaller-subset rate minus larger-subset rate, >= 0
};

/// Rates of the base projected onto two nested subsets. `small_subset` must
/// be contained in `large_subset` (equality allowed); throws otherwise.
/// Dropping features merges descriptions, so delta is never negative.
DeltaResult inconsistency_delta(const ExampleBase& base,
                                const FeatureSubset& small_subset,
                                const FeatureSubset& large_subset);

}  // namespace fse
