#pragma once

#include <stdexcept>
#include <string>

namespace mwreg {

enum class ErrorCode {
  DegenerateInput,
  InvalidRotation,
  InvalidVoxelSize,
  DegenerateCloud,
  InsufficientPoints,
  TargetTooSmall,
  ShapeMismatch,
  NonScalarLoss,
  EmptyCloud,
  SingleCloud,
  LengthMismatch,
  NoCorrespondences,
  RegistrationFailed,
  NotConnected,
  TooShort,
  PartitionMismatch,
  MalformedFile,
  MalformedLine,
  WindowMismatch,
  InvalidConfig,
  IoError,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::InvalidVoxelSize: return "InvalidVoxelSize";
    case ErrorCode::DegenerateCloud: return "DegenerateCloud";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::TargetTooSmall: return "TargetTooSmall";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonScalarLoss: return "NonScalarLoss";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::SingleCloud: return "SingleCloud";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NoCorrespondences: return "NoCorrespondences";
    case ErrorCode::RegistrationFailed: return "RegistrationFailed";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::WindowMismatch: return "WindowMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

/// Toolkit-wide exception type. The code identifies the contract violation;
/// what() carries the code name plus a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace mwreg
