#include "cyclide/errors.hpp"

namespace cyclide {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::CubicInput: return "CubicInput";
    case ErrorKind::NotACubicCyclide: return "NotACubicCyclide";
    case ErrorKind::NoRealSolution: return "NoRealSolution";
    case ErrorKind::NonRationalSolution: return "NonRationalSolution";
    case ErrorKind::ComponentMismatch: return "ComponentMismatch";
    case ErrorKind::UndefinedInvariant: return "UndefinedInvariant";
    case ErrorKind::BothSidesDegenerate: return "BothSidesDegenerate";
    case ErrorKind::EmptySurface: return "EmptySurface";
  }
  return "Unknown";
}

}  // namespace cyclide
