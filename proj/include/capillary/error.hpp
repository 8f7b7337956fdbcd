#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace capillary {

enum class ErrorKind {
  OutOfDomain,
  NonRegularPoint,
  NoIntersection,
  Tangential,
  MultipleIntersections,
  ParallelAxis,
  NegativeRadius,
  NonPositiveHalfWidth,
  DegenerateMu,
  EmptyRange,
  GridTooCoarse,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NonRegularPoint: return "NonRegularPoint";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::Tangential: return "Tangential";
    case ErrorKind::MultipleIntersections: return "MultipleIntersections";
    case ErrorKind::ParallelAxis: return "ParallelAxis";
    case ErrorKind::NegativeRadius: return "NegativeRadius";
    case ErrorKind::NonPositiveHalfWidth: return "NonPositiveHalfWidth";
    case ErrorKind::DegenerateMu: return "DegenerateMu";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace capillary
