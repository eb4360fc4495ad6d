#include "fse/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "fse/errors.hpp"

namespace fse {
namespace {

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // physical line of each row's start
};

// RFC-4180 reader: comma-separated, double-quote quoting with "" escapes,
// quoted fields may span lines. Records are validated against the header
// width; line numbers are 1-based with the header on line 1.
RawTable read_table(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  RawTable table;

  std::size_t line = 1;
  std::size_t pos = 0;
  const std::size_t end = text.size();
  bool first_record = true;

  while (pos < end) {
    const std::size_t record_line = line;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool record_done = false;

    while (!record_done) {
      if (pos == end) {
        if (quoted) {
          throw DataError(Errc::MalformedCsv,
                          "unterminated quoted field starting near line " +
                              std::to_string(record_line));
        }
        fields.push_back(std::move(field));
        record_done = true;
        break;
      }
      const char c = text[pos];
      if (quoted) {
        if (c == '"') {
          if (pos + 1 < end && text[pos + 1] == '"') {
            field.push_back('"');
            pos += 2;
          } else {
            quoted = false;
            ++pos;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
      } else if (c == '"' && field.empty()) {
        quoted = true;
        ++pos;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        ++pos;
      } else if (c == '\n' || (c == '\r' && pos + 1 < end && text[pos + 1] == '\n')) {
        pos += (c == '\r') ? 2 : 1;
        ++line;
        fields.push_back(std::move(field));
        record_done = true;
      } else {
        field.push_back(c);
        ++pos;
      }
    }

    if (first_record) {
      table.header = std::move(fields);
      first_record = false;
    } else if (!(fields.size() == 1 && fields[0].empty())) {
      // A blank trailing line is not a record.
      table.rows.push_back(std::move(fields));
      table.row_lines.push_back(record_line);
    }
  }

  if (table.header.empty()) {
    throw DataError(Errc::MalformedCsv, "empty input: no header row");
  }
  return table;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

void write_field(std::ostream& out, const std::string& field) {
  if (field.find_first_of(",\"\r\n") != std::string::npos) {
    out << '"';
    for (char c : field) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  } else {
    out << field;
  }
}

}  // namespace

ExampleBase parse_csv(std::istream& in, const LoadOptions& options) {
  RawTable table = read_table(in);

  std::size_t label_col = table.header.size();
  std::unordered_set<std::string> seen_names;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    const std::string& name = table.header[i];
    if (!seen_names.insert(name).second) {
      throw DataError(Errc::DuplicateColumn, "duplicate column '" + name + "'");
    }
    if (name == options.label_column) label_col = i;
  }
  if (label_col == table.header.size()) {
    throw DataError(Errc::MissingLabelColumn,
                    "no column named '" + options.label_column + "'");
  }
  if (table.rows.empty()) {
    throw DataError(Errc::EmptyBase, "no data rows");
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw DataError(Errc::RaggedRow,
                      "line " + std::to_string(table.row_lines[r]) + " has " +
                          std::to_string(row.size()) + " cells, header has " +
                          std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].empty()) {
        throw DataError(Errc::MissingValue,
                        "empty cell at line " +
                            std::to_string(table.row_lines[r]) + ", column '" +
                            table.header[c] + "'");
      }
    }
  }

  // Decide each feature column's kind: explicit hint, else numeric exactly
  // when every cell parses as a finite number.
  std::vector<std::size_t> feature_cols;
  std::vector<FeatureDescriptor> features;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c == label_col) continue;
    feature_cols.push_back(c);
    FeatureDescriptor f;
    f.name = table.header[c];

    const auto hint = options.kinds.find(f.name);
    bool numeric;
    if (hint != options.kinds.end()) {
      numeric = hint->second == FeatureKind::Numeric;
      if (numeric) {
        double parsed = 0.0;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
          if (!parse_double(table.rows[r][c], parsed)) {
            throw DataError(Errc::UnparseableNumeric,
                            "line " + std::to_string(table.row_lines[r]) +
                                ", column '" + f.name +
                                "': cannot parse '" + table.rows[r][c] +
                                "' as a number");
          }
        }
      }
    } else {
      double parsed = 0.0;
      numeric = true;
      for (const auto& row : table.rows) {
        if (!parse_double(row[c], parsed)) {
          numeric = false;
          break;
        }
      }
    }

    f.kind = numeric ? FeatureKind::Numeric : FeatureKind::Nominal;
    if (!numeric) {
      std::unordered_set<std::string> seen;
      for (const auto& row : table.rows) {
        if (seen.insert(row[c]).second) f.vocabulary.push_back(row[c]);
      }
    }
    features.push_back(std::move(f));
  }

  std::vector<std::string> labels = options.labels;
  if (labels.empty()) {
    std::unordered_set<std::string> seen;
    for (const auto& row : table.rows) {
      if (seen.insert(row[label_col]).second) labels.push_back(row[label_col]);
    }
    if (labels.size() < 2) {
      throw DataError(Errc::SingleLabel,
                      "label column '" + options.label_column +
                          "' holds a single distinct value '" + labels[0] +
                          "'");
    }
  }

  std::vector<Example> examples;
  examples.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Example ex;
    ex.description.values.reserve(feature_cols.size());
    for (std::size_t i = 0; i < feature_cols.size(); ++i) {
      const std::string& cell = row[feature_cols[i]];
      if (features[i].kind == FeatureKind::Numeric) {
        double parsed = 0.0;
        parse_double(cell, parsed);
        ex.description.values.push_back(Value::number(parsed));
      } else {
        ex.description.values.push_back(Value::token(cell));
      }
    }
    ex.label = row[label_col];
    examples.push_back(std::move(ex));
  }

  return ExampleBase(
      FeatureSchema(std::move(features), options.label_column,
                    std::move(labels)),
      std::move(examples));
}

ExampleBase load_csv(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(Errc::IoError, "cannot open '" + path + "' for reading");
  }
  return parse_csv(in, options);
}

void write_csv(std::ostream& out, const ExampleBase& base) {
  const auto& features = base.schema().features();
  for (const auto& f : features) {
    write_field(out, f.name);
    out << ',';
  }
  write_field(out, base.schema().label_name());
  out << '\n';

  for (const Example& ex : base.examples()) {
    for (const Value& v : ex.description.values) {
      write_field(out, v.render());
      out << ',';
    }
    write_field(out, ex.label);
    out << '\n';
  }
}

void save_csv(const std::string& path, const ExampleBase& base) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  write_csv(out, base);
  if (!out.flush()) {
    throw DataError(Errc::IoError, "write to '" + path + "' failed");
  }
}

LoadOptions load_sidecar(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError(Errc::IoError, "cannot open '" + path + "' for reading");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(Errc::InvalidSchema,
                    "sidecar '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw DataError(Errc::InvalidSchema,
                    "sidecar '" + path + "' must be a JSON object");
  }

  LoadOptions options;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) {
      throw DataError(Errc::InvalidSchema, "sidecar 'label' must be a string");
    }
    options.label_column = doc["label"].get<std::string>();
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) {
      throw DataError(Errc::InvalidSchema, "sidecar 'labels' must be an array");
    }
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) {
        throw DataError(Errc::InvalidSchema,
                        "sidecar 'labels' entries must be strings");
      }
      options.labels.push_back(l.get<std::string>());
    }
  }
  if (doc.contains("kinds")) {
    if (!doc["kinds"].is_object()) {
      throw DataError(Errc::InvalidSchema, "sidecar 'kinds' must be an object");
    }
    for (const auto& [name, kind] : doc["kinds"].items()) {
      if (!kind.is_string()) {
        throw DataError(Errc::InvalidSchema,
                        "sidecar kind for '" + name + "' must be a string");
      }
      const std::string k = kind.get<std::string>();
      if (k == "numeric") {
        options.kinds[name] = FeatureKind::Numeric;
      } else if (k == "nominal") {
        options.kinds[name] = FeatureKind::Nominal;
      } else {
        throw DataError(Errc::InvalidSchema,
                        "sidecar kind for '" + name + "' must be 'numeric' or "
                        "'nominal', got '" + k + "'");
      }
    }
  }
  return options;
}

void save_sidecar(const std::string& path, const ExampleBase& base) {
  nlohmann::ordered_json doc;
  doc["label"] = base.schema().label_name();
  doc["labels"] = base.schema().labels();
  nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
  for (const FeatureDescriptor& f : base.schema().features()) {
    kinds[f.name] = feature_kind_name(f.kind);
  }
  doc["kinds"] = kinds;

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << doc.dump(2) << '\n';
  if (!out.flush()) {
    throw DataError(Errc::IoError, "write to '" + path + "' failed");
  }
}

}  // namespace fse
