#pragma once

// Independent reference implementations used to cross-check the library:
// deliberately simple, quadratic, and structured differently from the
// production code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fse/example_base.hpp"
#include "fse/rational.hpp"

namespace fse::testing {

/// Inconsistency by brute force: linear-scan grouping of equal descriptions,
/// then the sum of per-group majority counts.
inline Rational naive_inconsistency(const ExampleBase& base) {
  std::vector<Description> groups;
  std::vector<std::map<std::string, std::size_t>> counts;
  for (const Example& ex : base.examples()) {
    std::size_t g = groups.size();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i] == ex.description) {
        g = i;
        break;
      }
    }
    if (g == groups.size()) {
      groups.push_back(ex.description);
      counts.emplace_back();
    }
    ++counts[g][ex.label];
  }

  std::size_t majority_sum = 0;
  for (const auto& group : counts) {
    std::size_t best = 0;
    for (const auto& [label, count] : group) best = std::max(best, count);
    majority_sum += best;
  }
  return Rational(static_cast<std::int64_t>(base.size() - majority_sum),
                  static_cast<std::int64_t>(base.size()));
}

namespace detail {

inline double oracle_entropy(const std::map<std::string, std::size_t>& counts,
                             std::size_t n) {
  double h = 0.0;
  for (const auto& [label, c] : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h += p * std::log2(static_cast<double>(n) / static_cast<double>(c));
  }
  return h;
}

// pairs must arrive sorted by value. Every midpoint between adjacent
// distinct values is tried; the best-gain cut (leftmost on ties) is kept
// when the encoding-cost inequality allows, and ranges under 3 examples
// are never split.
inline void oracle_mdl_recurse(
    const std::vector<std::pair<double, std::string>>& pairs, std::size_t lo,
    std::size_t hi, std::vector<double>& cuts) {
  const std::size_t n = hi - lo;
  if (n < 3) return;

  std::map<std::string, std::size_t> total;
  for (std::size_t i = lo; i < hi; ++i) ++total[pairs[i].second];
  std::size_t k = 0;
  for (const auto& [label, c] : total) k += c > 0 ? 1 : 0;
  if (k < 2) return;
  const double h = oracle_entropy(total, n);

  double best_gain = -1.0;
  std::size_t best_at = 0;
  double best_cut = 0.0;
  bool best_ok = false;

  for (std::size_t at = lo + 1; at < hi; ++at) {
    if (pairs[at - 1].first == pairs[at].first) continue;

    std::map<std::string, std::size_t> left;
    std::map<std::string, std::size_t> right;
    for (std::size_t i = lo; i < at; ++i) ++left[pairs[i].second];
    for (std::size_t i = at; i < hi; ++i) ++right[pairs[i].second];
    const std::size_t n1 = at - lo;
    const std::size_t n2 = hi - at;

    const double h1 = oracle_entropy(left, n1);
    const double h2 = oracle_entropy(right, n2);
    const double nd = static_cast<double>(n);
    const double gain = h - (static_cast<double>(n1) / nd) * h1 -
                        (static_cast<double>(n2) / nd) * h2;
    if (gain <= best_gain) continue;

    std::size_t k1 = 0;
    for (const auto& [label, c] : left) k1 += c > 0 ? 1 : 0;
    std::size_t k2 = 0;
    for (const auto& [label, c] : right) k2 += c > 0 ? 1 : 0;
    const double kd = static_cast<double>(k);
    const double delta = std::log2(std::pow(3.0, kd) - 2.0) - kd * h +
                         static_cast<double>(k1) * h1 +
                         static_cast<double>(k2) * h2;
    const double threshold = (std::log2(nd - 1.0) + delta) / nd;

    best_gain = gain;
    best_at = at;
    best_cut = (pairs[at - 1].first + pairs[at].first) / 2.0;
    best_ok = gain > threshold;
  }

  if (best_ok) {
    cuts.push_back(best_cut);
    oracle_mdl_recurse(pairs, lo, best_at, cuts);
    oracle_mdl_recurse(pairs, best_at, hi, cuts);
  }
}

}  // namespace detail

inline std::vector<double> oracle_mdl_cuts(
    const std::vector<double>& values, const std::vector<std::string>& labels) {
  std::vector<std::pair<double, std::string>> pairs;
  pairs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    pairs.emplace_back(values[i], labels[i]);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> cuts;
  detail::oracle_mdl_recurse(pairs, 0, pairs.size(), cuts);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace fse::testing
