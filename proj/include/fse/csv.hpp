#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fse/example_base.hpp"

namespace fse {

/// Options controlling how a CSV file becomes an example base. When `kinds`
/// or `labels` are absent the loader infers them: a column whose every cell
/// parses as a finite number is numeric, and the label alphabet is the set
/// of labels observed in the file (first-occurrence order). A file whose
/// label column holds a single distinct value is rejected unless `labels`
/// declares an alphabet of two or more.
struct LoadOptions {
  std::string label_column = "label";
  std::map<std::string, FeatureKind> kinds;
  std::vector<std::string> labels;
};

ExampleBase parse_csv(std::istream& in, const LoadOptions& options = {});
ExampleBase load_csv(const std::string& path, const LoadOptions& options = {});

void write_csv(std::ostream& out, const ExampleBase& base);
void save_csv(const std::string& path, const ExampleBase& base);

/// Sidecar schema file (JSON): {"label": "...", "labels": [...],
/// "kinds": {"feature": "numeric"|"nominal", ...}}. All keys optional.
LoadOptions load_sidecar(const std::string& path);
void save_sidecar(const std::string& path, const ExampleBase& base);

}  // namespace fse
