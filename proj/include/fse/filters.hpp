#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fse/example_base.hpp"
#include "fse/feature_subset.hpp"

namespace fse {

/// Shannon entropy of the label distribution, in bits.
double label_entropy(const ExampleBase& base);

/// Mutual information between one nominal feature and the label, in bits.
/// Nonnegative; exactly 0.0 when the feature's value is constant or
/// independent of the label (count table has product form).
double info_gain(const ExampleBase& base, const std::string& feature);

/// Pearson chi-squared statistic of the feature/label contingency table.
/// Cells whose expected count is zero contribute nothing.
double chi_squared(const ExampleBase& base, const std::string& feature);

struct ReliefParams {
  std::size_t sample_count = 0;  // 0 means "use every example once"
  std::uint64_t seed = 0;
};

/// Classic two-class relevance weights: for each sampled example, find the
/// nearest example of the same label (hit) and of the other label (miss)
/// under normalized Manhattan distance over all features, then accumulate
/// miss-difference minus hit-difference per feature, averaged over samples.
/// Requires exactly two labels in the base's alphabet.
std::vector<FeatureScore> relief_weights(const ExampleBase& base,
                                         const ReliefParams& params = {});

double relief_score(const ExampleBase& base, const std::string& feature,
                    const ReliefParams& params = {});

/// Scores one feature with the requested method. Numeric features under
/// InfoGain / ChiSquared are first binned with the MDL discretizer, so a
/// feature the discretizer finds uninformative scores exactly 0.
double score_feature(const ExampleBase& base, const std::string& feature,
                     ScoreMethod method, const ReliefParams& relief = {});

std::vector<FeatureScore> score_all(const ExampleBase& base,
                                    ScoreMethod method,
                                    const ReliefParams& relief = {});

/// Applies the policy to the scores of every schema feature and returns the
/// surviving subset (schema order) with full provenance attached.
FeatureSubset select_features(const ExampleBase& base,
                              const SelectionPolicy& policy,
                              const ReliefParams& relief = {});

}  // namespace fse
