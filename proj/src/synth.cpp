#include "fse/synth.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fse/errors.hpp"
#include "fse/rng.hpp"

namespace fse {
namespace {

constexpr std::uint64_t kIrrelevantGrid = 4;

std::vector<std::string> make_labels(std::size_t label_count) {
  std::vector<std::string> labels;
  labels.reserve(label_count);
  for (std::size_t i = 1; i <= label_count; ++i) {
    labels.push_back("l" + std::to_string(i));
  }
  return labels;
}

FeatureSchema make_schema(std::size_t relevant, std::size_t irrelevant,
                          std::size_t label_count) {
  std::vector<FeatureDescriptor> features;
  features.reserve(relevant + irrelevant);
  for (std::size_t i = 1; i <= relevant; ++i) {
    features.push_back({"r" + std::to_string(i), FeatureKind::Numeric, {}});
  }
  for (std::size_t i = 1; i <= irrelevant; ++i) {
    features.push_back({"i" + std::to_string(i), FeatureKind::Numeric, {}});
  }
  return FeatureSchema(std::move(features), "label",
                       make_labels(label_count));
}

void check_common(const GeneratorSpec& spec) {
  if (spec.label_count < 2) {
    throw ConfigError(Errc::SpecInvalid, "label_count must be at least 2");
  }
  if (spec.example_count == 0) {
    throw ConfigError(Errc::SpecInvalid, "example_count must be at least 1");
  }
  if (spec.relevant + spec.irrelevant == 0) {
    throw ConfigError(Errc::SpecInvalid, "at least one feature is required");
  }
  if (!(spec.noise_rate >= 0.0 && spec.noise_rate <= 1.0)) {
    throw ConfigError(Errc::SpecInvalid, "noise_rate must lie in [0, 1]");
  }
}

// The rows of gen_consistent and gen_noisy before any label rewriting:
// relevant features draw a bin in [0, label_count), the label is the bin
// sum mod label_count (no single relevant feature decides it alone), and
// irrelevant features draw from a small unrelated grid.
std::vector<Example> draw_examples(const GeneratorSpec& spec,
                                   const std::vector<std::string>& labels,
                                   SplitMix64& rng) {
  std::vector<Example> examples;
  examples.reserve(spec.example_count);
  for (std::size_t row = 0; row < spec.example_count; ++row) {
    Example ex;
    ex.description.values.reserve(spec.relevant + spec.irrelevant);
    std::uint64_t bin_sum = 0;
    for (std::size_t f = 0; f < spec.relevant; ++f) {
      const std::uint64_t bin = rng.next_below(spec.label_count);
      bin_sum += bin;
      ex.description.values.push_back(
          Value::number(static_cast<double>(bin)));
    }
    for (std::size_t f = 0; f < spec.irrelevant; ++f) {
      ex.description.values.push_back(Value::number(
          static_cast<double>(rng.next_below(kIrrelevantGrid))));
    }
    ex.label = labels[bin_sum % spec.label_count];
    examples.push_back(std::move(ex));
  }
  return examples;
}

}  // namespace

ExampleBase gen_consistent(const GeneratorSpec& spec) {
  check_common(spec);
  if (spec.relevant == 0) {
    throw ConfigError(Errc::SpecInvalid,
                      "gen_consistent needs at least one relevant feature");
  }
  if (spec.noise_rate != 0.0) {
    throw ConfigError(Errc::SpecInvalid,
                      "gen_consistent requires noise_rate 0; use gen_noisy");
  }

  const std::vector<std::string> labels = make_labels(spec.label_count);
  SplitMix64 rng(spec.seed);
  std::vector<Example> examples = draw_examples(spec, labels, rng);
  return ExampleBase(
      make_schema(spec.relevant, spec.irrelevant, spec.label_count),
      std::move(examples));
}

ExampleBase gen_noisy(const GeneratorSpec& spec) {
  check_common(spec);

  const std::vector<std::string> labels = make_labels(spec.label_count);
  SplitMix64 rng(spec.seed);
  std::vector<Example> examples = draw_examples(spec, labels, rng);

  // Re-roll the labels of a random subset of rows, drawn by a partial
  // shuffle that continues the same generator stream.
  const auto flips = static_cast<std::size_t>(
      std::llround(spec.noise_rate * static_cast<double>(spec.example_count)));
  std::vector<std::size_t> rows(spec.example_count);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  for (std::size_t j = 0; j < flips; ++j) {
    const std::size_t pick =
        j + static_cast<std::size_t>(rng.next_below(spec.example_count - j));
    std::swap(rows[j], rows[pick]);
    examples[rows[j]].label = labels[rng.next_below(spec.label_count)];
  }

  return ExampleBase(
      make_schema(spec.relevant, spec.irrelevant, spec.label_count),
      std::move(examples));
}

ExampleBase gen_worst(std::size_t label_count, std::size_t descriptions,
                      std::size_t copies_per_label) {
  if (label_count < 2) {
    throw ConfigError(Errc::SpecInvalid, "label_count must be at least 2");
  }
  if (descriptions == 0 || copies_per_label == 0) {
    throw ConfigError(Errc::SpecInvalid,
                      "descriptions and copies_per_label must be at least 1");
  }

  const std::vector<std::string> labels = make_labels(label_count);
  std::vector<Example> examples;
  examples.reserve(descriptions * label_count * copies_per_label);
  for (std::size_t d = 0; d < descriptions; ++d) {
    for (const std::string& label : labels) {
      for (std::size_t c = 0; c < copies_per_label; ++c) {
        Example ex;
        ex.description.values.push_back(
            Value::number(static_cast<double>(d)));
        ex.label = label;
        examples.push_back(std::move(ex));
      }
    }
  }

  return ExampleBase(
      FeatureSchema({{"m1", FeatureKind::Numeric, {}}}, "label",
                    std::move(labels)),
      std::move(examples));
}

}  // namespace fse
