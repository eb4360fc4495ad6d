#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "fse/feature_subset.hpp"
#include "fse/value.hpp"

namespace fse {

enum class FeatureKind { Numeric, Nominal };

const char* feature_kind_name(FeatureKind kind);

struct FeatureDescriptor {
  std::string name;
  FeatureKind kind = FeatureKind::Numeric;
  // Distinct observed tokens in first-occurrence order; required non-empty
  // for nominal features, ignored (kept empty) for numeric ones.
  std::vector<std::string> vocabulary;
};

/// Column layout shared by all examples of a base: ordered feature
/// descriptors, the label column's name, and the closed label alphabet
/// (first-occurrence order, at least two entries).
class FeatureSchema {
 public:
  FeatureSchema(std::vector<FeatureDescriptor> features,
                std::string label_name, std::vector<std::string> labels);

  const std::vector<FeatureDescriptor>& features() const { return features_; }
  const std::string& label_name() const { return label_name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t feature_index(const std::string& name) const;
  std::size_t label_index(const std::string& label) const;
  bool has_feature(const std::string& name) const;

  bool operator==(const FeatureSchema& other) const;

 private:
  std::vector<FeatureDescriptor> features_;
  std::string label_name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> feature_index_;
  std::unordered_map<std::string, std::size_t> label_index_;
};

struct Example {
  Description description;
  std::string label;
};

/// Immutable labeled example base. Every example carries one value per
/// schema feature and a label drawn from the schema's alphabet; both are
/// validated on construction. Duplicated descriptions (same or conflicting
/// labels) are kept as-is -- they are what the consistency measure counts.
class ExampleBase {
 public:
  ExampleBase(FeatureSchema schema, std::vector<Example> examples);

  const FeatureSchema& schema() const { return schema_; }
  const std::vector<Example>& examples() const { return examples_; }
  std::size_t size() const { return examples_.size(); }

  bool operator==(const ExampleBase& other) const;

 private:
  FeatureSchema schema_;
  std::vector<Example> examples_;
};

/// New base keeping only the named features (in schema order, regardless of
/// the order given) plus the labels; example order and count preserved.
/// Unknown names throw. The empty subset yields a base with zero feature
/// columns whose examples all share the empty description.
ExampleBase project(const ExampleBase& base, const FeatureSubset& subset);

/// The distinct descriptions occurring in the base under the subset, in
/// first-occurrence order. For the empty subset this is exactly one empty
/// description, whatever the base contents.
std::vector<Description> distinct_descriptions(const ExampleBase& base,
                                               const FeatureSubset& subset);
std::vector<Description> distinct_descriptions(const ExampleBase& base);

/// Number of examples whose subset-projection equals `s` and whose label
/// equals `label`. The label must belong to the schema's alphabet.
std::size_t count_examples(const ExampleBase& base, const FeatureSubset& subset,
                           const Description& s, const std::string& label);

/// Per-label example counts; every alphabet label appears as a key, possibly
/// with count 0. Counts sum to the base size.
std::map<std::string, std::size_t> label_histogram(const ExampleBase& base);

/// Names of all schema features, in schema order.
FeatureSubset full_subset(const ExampleBase& base);

}  // namespace fse
