#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridnull {

enum class Errc {
  NonPrimeModulus,
  ReducibleModulus,
  UnsupportedDegree,
  DivisionByZero,
  MixedFields,
  InfiniteField,
  NotExtensionField,
  NotPrimeField,
  CharacteristicZero,
  EmptySet,
  EmptyFactorList,
  DimensionMismatch,
  ExponentOutOfRange,
  DegreeBoundViolated,
  SyntaxError,
  UnknownVariable,
  PointNotOnGrid,
  OrderDoesNotDivide,
  ZeroShift,
  ZeroVector,
  SingletonFactor,
  MissingValue,
  LambdaExceedsNullity,
  PreconditionViolated,
  SizeBoundExceeded,
  FieldNotRationals,
  ScanTooLarge,
  EvenQ,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::NotExtensionField: return "NotExtensionField";
    case Errc::NotPrimeField: return "NotPrimeField";
    case Errc::CharacteristicZero: return "CharacteristicZero";
    case Errc::EmptySet: return "EmptySet";
    case Errc::EmptyFactorList: return "EmptyFactorList";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::DegreeBoundViolated: return "DegreeBoundViolated";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::PointNotOnGrid: return "PointNotOnGrid";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::ZeroShift: return "ZeroShift";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::SingletonFactor: return "SingletonFactor";
    case Errc::MissingValue: return "MissingValue";
    case Errc::LambdaExceedsNullity: return "LambdaExceedsNullity";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::FieldNotRationals: return "FieldNotRationals";
    case Errc::ScanTooLarge: return "ScanTooLarge";
    case Errc::EvenQ: return "EvenQ";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gridnull
