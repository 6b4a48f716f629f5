#include "fusionfact/errors.hpp"

#include <sstream>
#include <utility>

namespace fusionfact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnitAxiomViolation: return "UnitAxiomViolation";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::ActionAxiomViolation: return "ActionAxiomViolation";
    case ErrorCode::Decomposable: return "Decomposable";
    case ErrorCode::NormalizationFailure: return "NormalizationFailure";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::RankBoundExceeded: return "RankBoundExceeded";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::NotSubring: return "NotSubring";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
    case ErrorCode::CharacterConvergenceFailure: return "CharacterConvergenceFailure";
    case ErrorCode::RoundingResidualTooLarge: return "RoundingResidualTooLarge";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::StabilizerTooLarge: return "StabilizerTooLarge";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::IdentityViolation:
    case ErrorCode::IdentityFailure:
    case ErrorCode::InvariantFailure:
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::ResidualTooLarge:
    case ErrorCode::NormalizationFailure:
    case ErrorCode::CharacterConvergenceFailure:
    case ErrorCode::RoundingResidualTooLarge:
    case ErrorCode::ValidationFailed:
      return true;
    default:
      return false;
  }
}

std::string format_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t v = 0; v < violations.size(); ++v) {
    const auto& viol = violations[v];
    os << (v ? "; " : "") << to_string(viol.code) << "(";
    for (std::size_t i = 0; i < viol.witness.size(); ++i) os << (i ? "," : "") << viol.witness[i];
    os << ") " << viol.detail;
  }
  return os.str();
}

Error::Error(ErrorCode code, std::string message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

Error::Error(ErrorCode code, std::string message, std::vector<Violation> violations)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      violations_(std::move(violations)) {
  if (!violations_.empty()) witness_ = violations_.front().witness;
}

void invariant_failure(std::string message, std::vector<std::size_t> witness) {
  throw Error(ErrorCode::InvariantFailure, std::move(message), std::move(witness));
}

}  // namespace fusionfact
