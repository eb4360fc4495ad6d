#include "fse/errors.hpp"

namespace fse {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::IoError: return "IoError";
    case Errc::MalformedCsv: return "MalformedCsv";
    case Errc::MissingLabelColumn: return "MissingLabelColumn";
    case Errc::RaggedRow: return "RaggedRow";
    case Errc::EmptyBase: return "EmptyBase";
    case Errc::UnparseableNumeric: return "UnparseableNumeric";
    case Errc::SingleLabel: return "SingleLabel";
    case Errc::MissingValue: return "MissingValue";
    case Errc::DuplicateColumn: return "DuplicateColumn";
    case Errc::InvalidSchema: return "InvalidSchema";
    case Errc::UnknownFeature: return "UnknownFeature";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyHistogram: return "EmptyHistogram";
    case Errc::TooFewLabels: return "TooFewLabels";
    case Errc::NotASubset: return "NotASubset";
    case Errc::NumericFeatureUnsupported: return "NumericFeatureUnsupported";
    case Errc::NotBinaryLabels: return "NotBinaryLabels";
    case Errc::DegenerateBase: return "DegenerateBase";
    case Errc::NotNumeric: return "NotNumeric";
    case Errc::DuplicateScheme: return "DuplicateScheme";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::ConfigIncompatible: return "ConfigIncompatible";
  }
  return "UnknownError";
}

}  // namespace fse
