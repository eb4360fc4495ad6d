#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fse/example_base.hpp"

namespace fse {

/// Sorted strictly-increasing cut points for one numeric feature. The cuts
/// carve the real line into right-closed intervals
///   ]-inf, c1], ]c1, c2], ..., ]ck, +inf];
/// no cuts means the single interval ]-inf, +inf].
struct IntervalScheme {
  std::string feature;
  std::vector<double> cuts;

  std::size_t interval_count() const { return cuts.size() + 1; }
  std::size_t interval_of(double v) const;
  std::string interval_token(std::size_t index) const;
};

/// Renders one interval as a token, e.g. "]1000, 1500]" or "]-inf, +inf]".
/// Finite endpoints use the shortest decimal form that round-trips.
std::string render_interval(double lo, double hi);

struct DiscretizationMethod {
  enum class Kind { Mdl, EqualWidth, EqualFrequency };

  Kind kind = Kind::Mdl;
  std::size_t bins = 2;  // EqualWidth / EqualFrequency only

  static DiscretizationMethod mdl() { return {Kind::Mdl, 0}; }
  static DiscretizationMethod equal_width(std::size_t bins) {
    return {Kind::EqualWidth, bins};
  }
  static DiscretizationMethod equal_frequency(std::size_t bins) {
    return {Kind::EqualFrequency, bins};
  }
};

const char* discretization_kind_name(DiscretizationMethod::Kind kind);

/// Entropy-based recursive splitting with the MDL stopping rule: a cut is
/// kept only when its information gain exceeds the code-length cost of
/// announcing it, and intervals with fewer than 3 examples are never split.
/// `values` and `labels` run in parallel; label strings are compared as-is.
std::vector<double> mdl_cuts(const std::vector<double>& values,
                             const std::vector<std::string>& labels);

std::vector<double> equal_width_cuts(const std::vector<double>& values,
                                     std::size_t bins);
std::vector<double> equal_frequency_cuts(const std::vector<double>& values,
                                         std::size_t bins);

/// Builds a scheme for one numeric feature of the base using the given
/// method. Throws if the feature is unknown or nominal.
IntervalScheme scheme_for_feature(const ExampleBase& base,
                                  const std::string& feature,
                                  const DiscretizationMethod& method);

/// Replaces each listed numeric feature by a nominal feature whose values
/// are the interval tokens of its scheme. Features without a scheme pass
/// through untouched. Schemes for unknown or nominal features throw.
ExampleBase apply_schemes(const ExampleBase& base,
                          const std::vector<IntervalScheme>& schemes);

}  // namespace fse
