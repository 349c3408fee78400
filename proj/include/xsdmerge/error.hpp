#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xsdmerge {

enum class ErrorCode {
  ParseError,
  UnsupportedStyle,
  DanglingReference,
  SerializeError,
  AmbiguousRoot,
  InstanceParseError,
  UnknownComponent,
  IoError,
  FormatError,
  EmptyNeighborhood,
  SeverityOutOfRange,
  IncompatibleTypes,
  NotMerged,
  InconsistentDictionary,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedStyle: return "UnsupportedStyle";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::SerializeError: return "SerializeError";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::InstanceParseError: return "InstanceParseError";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::EmptyNeighborhood: return "EmptyNeighborhood";
    case ErrorCode::SeverityOutOfRange: return "SeverityOutOfRange";
    case ErrorCode::IncompatibleTypes: return "IncompatibleTypes";
    case ErrorCode::NotMerged: return "NotMerged";
    case ErrorCode::InconsistentDictionary: return "InconsistentDictionary";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xsdmerge
