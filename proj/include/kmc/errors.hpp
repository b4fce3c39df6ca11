#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmc {

enum class ErrorCode {
  DivisionByZero,
  ZeroPolynomial,
  DimensionMismatch,
  ShapeMismatch,
  DegeneratePlane,
  ContactAxiomViolation,
  IrrationalEigenvalue,
  NotKappaMu,
  OutOfTheoremRange,
  PreconditionViolation,
  InvalidMetric,
  // input document errors
  ParseError,
  MalformedRational,
  IndexOutOfRange,
  AntisymmetryViolation,
  ConflictingEntry,
  JacobiViolation,
  UnknownPreset,
  RangeError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::ContactAxiomViolation: return "ContactAxiomViolation";
    case ErrorCode::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case ErrorCode::NotKappaMu: return "NotKappaMu";
    case ErrorCode::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::ConflictingEntry: return "ConflictingEntry";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above, so
/// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmc
