#include "paretoscope/error.hpp"

namespace paretoscope {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InfeasibleConfig: return "InfeasibleConfig";
    case Errc::InfeasibleLattice: return "InfeasibleLattice";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidAgent: return "InvalidAgent";
    case Errc::InvalidTransform: return "InvalidTransform";
    case Errc::ZeroReferencePoint: return "ZeroReferencePoint";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::VectorValuedAgentInfo: return "VectorValuedAgentInfo";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::MissingField: return "MissingField";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return "column " + std::to_string(column) + ": " + message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
         message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(Errc::ParseError, located(message, line, column)),
      detail_(message),
      line_(line),
      column_(column) {}

CapExceeded::CapExceeded(std::size_t moves, std::size_t cap)
    : Error(Errc::CapExceeded, "scan would examine " + std::to_string(moves) +
                                   " moves, exceeding the cap of " + std::to_string(cap)),
      moves_(moves),
      cap_(cap) {}

}  // namespace paretoscope
