#include "fse/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "fse/errors.hpp"

namespace fse {

std::size_t IntervalScheme::interval_of(double v) const {
  // Right-closed intervals: a value equal to a cut belongs to the interval
  // that cut closes, so count the cuts strictly below v.
  return static_cast<std::size_t>(
      std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
}

std::string IntervalScheme::interval_token(std::size_t index) const {
  const double lo = index == 0 ? -std::numeric_limits<double>::infinity()
                               : cuts[index - 1];
  const double hi = index == cuts.size()
                        ? std::numeric_limits<double>::infinity()
                        : cuts[index];
  return render_interval(lo, hi);
}

std::string render_interval(double lo, double hi) {
  std::string out = "]";
  out += std::isinf(lo) ? "-inf" : render_number(lo);
  out += ", ";
  out += std::isinf(hi) ? "+inf" : render_number(hi);
  out += "]";
  return out;
}

const char* discretization_kind_name(DiscretizationMethod::Kind kind) {
  switch (kind) {
    case DiscretizationMethod::Kind::Mdl: return "mdl";
    case DiscretizationMethod::Kind::EqualWidth: return "equal_width";
    case DiscretizationMethod::Kind::EqualFrequency: return "equal_frequency";
  }
  return "unknown";
}

namespace {

// One distinct value with its per-label example counts (dense label index).
struct ValueGroup {
  double value = 0.0;
  std::vector<std::size_t> counts;
};

double entropy_bits(const std::vector<std::size_t>& counts, std::size_t n) {
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h += p * std::log2(static_cast<double>(n) / static_cast<double>(c));
  }
  return h;
}

std::size_t label_kinds(const std::vector<std::size_t>& counts) {
  std::size_t k = 0;
  for (std::size_t c : counts) k += c > 0 ? 1 : 0;
  return k;
}

bool pure_same_label(const ValueGroup& a, const ValueGroup& b) {
  std::size_t la = a.counts.size();
  std::size_t lb = la;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    if (a.counts[i] > 0) {
      if (la != a.counts.size()) return false;  // second label in a
      la = i;
    }
    if (b.counts[i] > 0) {
      if (lb != b.counts.size()) return false;
      lb = i;
    }
  }
  return la == lb;
}

// Recursive entropy minimization over groups[lo, hi). A split is kept only
// when its gain beats the code-length cost of announcing it, and intervals
// of fewer than 3 examples are left alone: with one or two examples the
// encoding comparison degenerates and any cut would just memorize the data.
void mdl_recurse(const std::vector<ValueGroup>& groups, std::size_t lo,
                 std::size_t hi, std::vector<double>& cuts) {
  const std::size_t label_count = groups[lo].counts.size();
  std::vector<std::size_t> total(label_count, 0);
  std::size_t n = 0;
  for (std::size_t g = lo; g < hi; ++g) {
    for (std::size_t i = 0; i < label_count; ++i) total[i] += groups[g].counts[i];
    n += std::accumulate(groups[g].counts.begin(), groups[g].counts.end(),
                         std::size_t{0});
  }
  if (n < 3) return;
  const std::size_t k = label_kinds(total);
  if (k < 2) return;
  const double h = entropy_bits(total, n);

  double best_gain = -1.0;
  std::size_t best_split = 0;  // groups[lo, best_split) | groups[best_split, hi)
  double best_cut = 0.0;
  bool best_accepted = false;

  std::vector<std::size_t> left(label_count, 0);
  std::size_t n1 = 0;
  for (std::size_t split = lo + 1; split < hi; ++split) {
    for (std::size_t i = 0; i < label_count; ++i) {
      left[i] += groups[split - 1].counts[i];
    }
    n1 += std::accumulate(groups[split - 1].counts.begin(),
                          groups[split - 1].counts.end(), std::size_t{0});
    // A cut inside a run of one label cannot beat the run's end points.
    if (pure_same_label(groups[split - 1], groups[split])) continue;

    std::vector<std::size_t> right(label_count);
    for (std::size_t i = 0; i < label_count; ++i) right[i] = total[i] - left[i];
    const std::size_t n2 = n - n1;

    const double h1 = entropy_bits(left, n1);
    const double h2 = entropy_bits(right, n2);
    const double nd = static_cast<double>(n);
    const double gain = h - (static_cast<double>(n1) / nd) * h1 -
                        (static_cast<double>(n2) / nd) * h2;
    if (gain <= best_gain) continue;

    const double k1 = static_cast<double>(label_kinds(left));
    const double k2 = static_cast<double>(label_kinds(right));
    const double kd = static_cast<double>(k);
    const double delta = std::log2(std::pow(3.0, kd) - 2.0) - kd * h +
                         k1 * h1 + k2 * h2;
    const double threshold = (std::log2(nd - 1.0) + delta) / nd;

    best_gain = gain;
    best_split = split;
    best_cut = (groups[split - 1].value + groups[split].value) / 2.0;
    best_accepted = gain > threshold;
  }

  if (best_accepted) {
    cuts.push_back(best_cut);
    mdl_recurse(groups, lo, best_split, cuts);
    mdl_recurse(groups, best_split, hi, cuts);
  }
}

}  // namespace

std::vector<double> mdl_cuts(const std::vector<double>& values,
                             const std::vector<std::string>& labels) {
  if (values.size() != labels.size()) {
    throw ConfigError(Errc::LengthMismatch,
                      "values and labels differ in length: " +
                          std::to_string(values.size()) + " vs " +
                          std::to_string(labels.size()));
  }
  if (values.empty()) {
    throw ConfigError(Errc::EmptyInput, "nothing to discretize");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DataError(Errc::UnparseableNumeric,
                      "non-finite value in discretizer input");
    }
  }

  // Dense label indices in lexicographic order, so entropy terms accumulate
  // in one fixed order whatever the input order.
  std::map<std::string, std::size_t> label_index;
  for (const std::string& l : labels) label_index.emplace(l, 0);
  {
    std::size_t i = 0;
    for (auto& entry : label_index) entry.second = i++;
  }

  std::map<double, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = by_value
                  .try_emplace(values[i], label_index.size(), std::size_t{0})
                  .first;
    ++it->second[label_index.at(labels[i])];
  }

  std::vector<ValueGroup> groups;
  groups.reserve(by_value.size());
  for (auto& [value, counts] : by_value) {
    groups.push_back({value, std::move(counts)});
  }

  std::vector<double> cuts;
  mdl_recurse(groups, 0, groups.size(), cuts);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<double> equal_width_cuts(const std::vector<double>& values,
                                     std::size_t bins) {
  if (values.empty()) {
    throw ConfigError(Errc::EmptyInput, "nothing to discretize");
  }
  if (bins == 0) {
    throw ConfigError(Errc::ConfigIncompatible, "bins must be at least 1");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(lo < hi)) return {};

  std::vector<double> cuts;
  cuts.reserve(bins - 1);
  for (std::size_t i = 1; i < bins; ++i) {
    const double c =
        lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(bins));
    if (cuts.empty() || cuts.back() < c) {
      if (c > lo && c < hi) cuts.push_back(c);
    }
  }
  return cuts;
}

std::vector<double> equal_frequency_cuts(const std::vector<double>& values,
                                         std::size_t bins) {
  if (values.empty()) {
    throw ConfigError(Errc::EmptyInput, "nothing to discretize");
  }
  if (bins == 0) {
    throw ConfigError(Errc::ConfigIncompatible, "bins must be at least 1");
  }
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> cuts;
  for (std::size_t i = 1; i < bins; ++i) {
    const std::size_t pos = i * sorted.size() / bins;
    if (pos == 0 || pos >= sorted.size()) continue;
    if (sorted[pos - 1] < sorted[pos]) {
      const double c = (sorted[pos - 1] + sorted[pos]) / 2.0;
      if (cuts.empty() || cuts.back() < c) cuts.push_back(c);
    }
  }
  return cuts;
}

IntervalScheme scheme_for_feature(const ExampleBase& base,
                                  const std::string& feature,
                                  const DiscretizationMethod& method) {
  const std::size_t col = base.schema().feature_index(feature);
  if (base.schema().features()[col].kind != FeatureKind::Numeric) {
    throw ConfigError(Errc::NotNumeric,
                      "feature '" + feature + "' is not numeric");
  }

  std::vector<double> values;
  values.reserve(base.size());
  for (const Example& ex : base.examples()) {
    values.push_back(ex.description.values[col].as_number());
  }

  IntervalScheme scheme;
  scheme.feature = feature;
  switch (method.kind) {
    case DiscretizationMethod::Kind::Mdl: {
      std::vector<std::string> labels;
      labels.reserve(base.size());
      for (const Example& ex : base.examples()) labels.push_back(ex.label);
      scheme.cuts = mdl_cuts(values, labels);
      break;
    }
    case DiscretizationMethod::Kind::EqualWidth:
      scheme.cuts = equal_width_cuts(values, method.bins);
      break;
    case DiscretizationMethod::Kind::EqualFrequency:
      scheme.cuts = equal_frequency_cuts(values, method.bins);
      break;
  }
  return scheme;
}

ExampleBase apply_schemes(const ExampleBase& base,
                          const std::vector<IntervalScheme>& schemes) {
  std::vector<const IntervalScheme*> by_column(base.schema().features().size(),
                                               nullptr);
  for (const IntervalScheme& s : schemes) {
    const std::size_t col = base.schema().feature_index(s.feature);
    if (base.schema().features()[col].kind != FeatureKind::Numeric) {
      throw ConfigError(Errc::NotNumeric,
                        "feature '" + s.feature + "' is not numeric");
    }
    if (by_column[col] != nullptr) {
      throw ConfigError(Errc::DuplicateScheme,
                        "two schemes for feature '" + s.feature + "'");
    }
    if (std::adjacent_find(s.cuts.begin(), s.cuts.end(),
                           [](double a, double b) { return a >= b; }) !=
        s.cuts.end()) {
      throw ConfigError(Errc::ConfigIncompatible,
                        "cuts for '" + s.feature +
                            "' are not strictly increasing");
    }
    by_column[col] = &s;
  }

  std::vector<FeatureDescriptor> features = base.schema().features();
  std::vector<Example> examples = base.examples();
  for (std::size_t col = 0; col < features.size(); ++col) {
    const IntervalScheme* scheme = by_column[col];
    if (scheme == nullptr) continue;

    std::unordered_set<std::string> seen;
    features[col].kind = FeatureKind::Nominal;
    features[col].vocabulary.clear();
    for (Example& ex : examples) {
      Value& cell = ex.description.values[col];
      std::string token =
          scheme->interval_token(scheme->interval_of(cell.as_number()));
      if (seen.insert(token).second) {
        features[col].vocabulary.push_back(token);
      }
      cell = Value::token(std::move(token));
    }
  }

  return ExampleBase(FeatureSchema(std::move(features),
                                   base.schema().label_name(),
                                   base.schema().labels()),
                     std::move(examples));
}

}  // namespace fse
