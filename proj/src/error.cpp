#include "coxhull/error.hpp"

namespace coxhull {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::OrderBelowTwo: return "OrderBelowTwo";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::MixedContext: return "MixedContext";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::HullDiscrepancy: return "HullDiscrepancy";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace coxhull
