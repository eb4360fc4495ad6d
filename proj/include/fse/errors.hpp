#pragma once

#include <stdexcept>
#include <string>

namespace fse {

// Every failure the library reports carries one of these codes. The CLI
// maps DataError to exit 2 and ConfigError to exit 3.
enum class Errc {
  // ingestion / validation
  IoError,
  MalformedCsv,
  MissingLabelColumn,
  RaggedRow,
  EmptyBase,
  UnparseableNumeric,
  SingleLabel,
  MissingValue,
  DuplicateColumn,
  InvalidSchema,
  // lookups and arguments
  UnknownFeature,
  UnknownLabel,
  LengthMismatch,
  EmptyInput,
  EmptyHistogram,
  TooFewLabels,
  NotASubset,
  // method / data compatibility
  NumericFeatureUnsupported,
  NotBinaryLabels,
  DegenerateBase,
  NotNumeric,
  DuplicateScheme,
  SpecInvalid,
  ConfigIncompatible,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Malformed or unusable input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// A request that cannot apply to the given data: wrong method for the
// label set, invalid parameters, unknown feature names, and so on.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fse
