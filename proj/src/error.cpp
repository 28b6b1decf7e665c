#include "metric_lines/error.hpp"

namespace metric_lines {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Asymmetry: return "AsymmetryError";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonpositiveDistance: return "NonpositiveDistance";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::XInsideT: return "XInsideT";
    case ErrorKind::TooManyAssignments: return "TooManyAssignments";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotOneTwoSpace: return "NotOneTwoSpace";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

TriangleViolation::TriangleViolation(std::size_t from, std::size_t to, std::size_t via)
    : Error(ErrorKind::TriangleViolation,
            "triangle inequality violated: d(" + std::to_string(from) + "," + std::to_string(to) +
                ") > d(" + std::to_string(from) + "," + std::to_string(via) + ") + d(" +
                std::to_string(via) + "," + std::to_string(to) + ")"),
      from_(from),
      to_(to),
      via_(via) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(ErrorKind::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace metric_lines
