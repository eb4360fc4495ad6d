#pragma once

#include <cstddef>
#include <cstdint>

#include "fse/example_base.hpp"

namespace fse {

/// Shape of a generated base: `relevant` numeric features that jointly
/// determine the label, `irrelevant` numeric features drawn independently
/// of it, labels "l1".."l<label_count>", features "r1../i1..".
struct GeneratorSpec {
  std::uint64_t seed = 1;
  std::size_t example_count = 100;
  std::size_t label_count = 2;
  std::size_t relevant = 2;
  std::size_t irrelevant = 2;
  double noise_rate = 0.0;  // fraction of labels re-rolled uniformly
};

/// Base whose label is a deterministic function of the relevant features
/// (their bin indices summed mod label_count), so the full feature set has
/// inconsistency exactly 0. Requires relevant >= 1 and noise_rate == 0.
ExampleBase gen_consistent(const GeneratorSpec& spec);

/// As gen_consistent, then relabels round(noise_rate * example_count)
/// randomly chosen examples with uniformly drawn labels. noise_rate must
/// lie in [0, 1]; 0 reproduces gen_consistent exactly. relevant may be 0
/// here: all labels are then noise and every feature is irrelevant.
ExampleBase gen_noisy(const GeneratorSpec& spec);

/// Every one of `descriptions` distinct single-feature descriptions paired
/// with every label, `copies_per_label` times each: the rate attains the
/// upper bound 1 - 1/label_count exactly.
ExampleBase gen_worst(std::size_t label_count, std::size_t descriptions,
                      std::size_t copies_per_label);

}  // namespace fse
