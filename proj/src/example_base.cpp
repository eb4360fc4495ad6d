#include "fse/example_base.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "fse/errors.hpp"

namespace fse {

const char* feature_kind_name(FeatureKind kind) {
  return kind == FeatureKind::Numeric ? "numeric" : "nominal";
}

FeatureSchema::FeatureSchema(std::vector<FeatureDescriptor> features,
                             std::string label_name,
                             std::vector<std::string> labels)
    : features_(std::move(features)),
      label_name_(std::move(label_name)),
      labels_(std::move(labels)) {
  if (label_name_.empty()) {
    throw DataError(Errc::InvalidSchema, "label column name is empty");
  }
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const FeatureDescriptor& f = features_[i];
    if (f.name.empty()) {
      throw DataError(Errc::InvalidSchema, "feature with empty name");
    }
    if (f.name == label_name_) {
      throw DataError(Errc::InvalidSchema,
                      "feature '" + f.name + "' collides with label column");
    }
    if (!feature_index_.emplace(f.name, i).second) {
      throw DataError(Errc::DuplicateColumn,
                      "duplicate feature '" + f.name + "'");
    }
    if (f.kind == FeatureKind::Nominal) {
      if (f.vocabulary.empty()) {
        throw DataError(Errc::InvalidSchema,
                        "nominal feature '" + f.name + "' has no vocabulary");
      }
      std::unordered_set<std::string> seen(f.vocabulary.begin(),
                                           f.vocabulary.end());
      if (seen.size() != f.vocabulary.size()) {
        throw DataError(Errc::InvalidSchema, "duplicate vocabulary token in '" +
                                                 f.name + "'");
      }
    }
  }
  if (labels_.size() < 2) {
    throw DataError(Errc::SingleLabel,
                    "label alphabet needs at least two labels, got " +
                        std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw DataError(Errc::InvalidSchema, "empty label string");
    }
    if (!label_index_.emplace(labels_[i], i).second) {
      throw DataError(Errc::InvalidSchema,
                      "duplicate label '" + labels_[i] + "'");
    }
  }
}

std::size_t FeatureSchema::feature_index(const std::string& name) const {
  const auto it = feature_index_.find(name);
  if (it == feature_index_.end()) {
    throw ConfigError(Errc::UnknownFeature, "unknown feature '" + name + "'");
  }
  return it->second;
}

std::size_t FeatureSchema::label_index(const std::string& label) const {
  const auto it = label_index_.find(label);
  if (it == label_index_.end()) {
    throw DataError(Errc::UnknownLabel, "unknown label '" + label + "'");
  }
  return it->second;
}

bool FeatureSchema::has_feature(const std::string& name) const {
  return feature_index_.count(name) != 0;
}

bool FeatureSchema::operator==(const FeatureSchema& other) const {
  if (label_name_ != other.label_name_ || labels_ != other.labels_ ||
      features_.size() != other.features_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const FeatureDescriptor& a = features_[i];
    const FeatureDescriptor& b = other.features_[i];
    if (a.name != b.name || a.kind != b.kind || a.vocabulary != b.vocabulary) {
      return false;
    }
  }
  return true;
}

ExampleBase::ExampleBase(FeatureSchema schema, std::vector<Example> examples)
    : schema_(std::move(schema)), examples_(std::move(examples)) {
  if (examples_.empty()) {
    throw DataError(Errc::EmptyBase, "example base has no examples");
  }
  const auto& features = schema_.features();
  for (std::size_t row = 0; row < examples_.size(); ++row) {
    const Example& ex = examples_[row];
    if (ex.description.values.size() != features.size()) {
      throw DataError(Errc::LengthMismatch,
                      "example " + std::to_string(row) + " has " +
                          std::to_string(ex.description.values.size()) +
                          " values, schema has " +
                          std::to_string(features.size()));
    }
    for (std::size_t col = 0; col < features.size(); ++col) {
      const Value& v = ex.description.values[col];
      const FeatureDescriptor& f = features[col];
      if (f.kind == FeatureKind::Numeric) {
        if (!v.is_number() || !std::isfinite(v.as_number())) {
          throw DataError(Errc::UnparseableNumeric,
                          "example " + std::to_string(row) +
                              ": non-finite or non-numeric value for '" +
                              f.name + "'");
        }
      } else {
        if (v.is_number() ||
            std::find(f.vocabulary.begin(), f.vocabulary.end(),
                      v.as_token()) == f.vocabulary.end()) {
          throw DataError(Errc::InvalidSchema,
                          "example " + std::to_string(row) +
                              ": value outside vocabulary of '" + f.name +
                              "'");
        }
      }
    }
    schema_.label_index(ex.label);  // throws UnknownLabel
  }
}

bool ExampleBase::operator==(const ExampleBase& other) const {
  if (!(schema_ == other.schema_) || examples_.size() != other.examples_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < examples_.size(); ++i) {
    if (examples_[i].label != other.examples_[i].label ||
        !(examples_[i].description == other.examples_[i].description)) {
      return false;
    }
  }
  return true;
}

namespace {

// Subset feature positions in schema order, validating names.
std::vector<std::size_t> subset_columns(const ExampleBase& base,
                                        const FeatureSubset& subset) {
  std::vector<std::size_t> cols;
  cols.reserve(subset.features.size());
  for (const std::string& name : subset.features) {
    cols.push_back(base.schema().feature_index(name));
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

Description project_description(const Description& full,
                                const std::vector<std::size_t>& cols) {
  Description d;
  d.values.reserve(cols.size());
  for (std::size_t c : cols) d.values.push_back(full.values[c]);
  return d;
}

}  // namespace

ExampleBase project(const ExampleBase& base, const FeatureSubset& subset) {
  const std::vector<std::size_t> cols = subset_columns(base, subset);
  std::vector<FeatureDescriptor> features;
  features.reserve(cols.size());
  for (std::size_t c : cols) features.push_back(base.schema().features()[c]);

  std::vector<Example> examples;
  examples.reserve(base.size());
  for (const Example& ex : base.examples()) {
    examples.push_back({project_description(ex.description, cols), ex.label});
  }
  return ExampleBase(FeatureSchema(std::move(features),
                                   base.schema().label_name(),
                                   base.schema().labels()),
                     std::move(examples));
}

std::vector<Description> distinct_descriptions(const ExampleBase& base,
                                               const FeatureSubset& subset) {
  const std::vector<std::size_t> cols = subset_columns(base, subset);
  std::vector<Description> out;
  std::unordered_set<Description, DescriptionHash> seen;
  for (const Example& ex : base.examples()) {
    Description d = project_description(ex.description, cols);
    if (seen.insert(d).second) out.push_back(std::move(d));
  }
  return out;
}

std::vector<Description> distinct_descriptions(const ExampleBase& base) {
  return distinct_descriptions(base, full_subset(base));
}

std::size_t count_examples(const ExampleBase& base, const FeatureSubset& subset,
                           const Description& s, const std::string& label) {
  base.schema().label_index(label);  // throws UnknownLabel
  const std::vector<std::size_t> cols = subset_columns(base, subset);
  std::size_t n = 0;
  for (const Example& ex : base.examples()) {
    if (ex.label == label && project_description(ex.description, cols) == s) {
      ++n;
    }
  }
  return n;
}

std::map<std::string, std::size_t> label_histogram(const ExampleBase& base) {
  std::map<std::string, std::size_t> hist;
  for (const std::string& l : base.schema().labels()) hist[l] = 0;
  for (const Example& ex : base.examples()) ++hist[ex.label];
  return hist;
}

FeatureSubset full_subset(const ExampleBase& base) {
  FeatureSubset subset;
  subset.features.reserve(base.schema().features().size());
  for (const FeatureDescriptor& f : base.schema().features()) {
    subset.features.push_back(f.name);
  }
  return subset;
}

}  // namespace fse
