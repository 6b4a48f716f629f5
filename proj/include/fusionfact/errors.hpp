#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fusionfact {

enum class ErrorCode {
  MalformedInput,
  UnitAxiomViolation,
  DualityViolation,
  AssociativityViolation,
  ReciprocityViolation,
  NotTransitive,
  IndexOutOfRange,
  ConvergenceFailure,
  ResidualTooLarge,
  ActionAxiomViolation,
  Decomposable,
  NormalizationFailure,
  IdentityViolation,
  RankBoundExceeded,
  NotExact,
  NotSubring,
  NotClosed,
  TooLarge,
  OrderBoundExceeded,
  DegreeUnsupported,
  NotACocycle,
  CoefficientOverflow,
  CharacterConvergenceFailure,
  RoundingResidualTooLarge,
  ValidationFailed,
  StabilizerTooLarge,
  IdentityFailure,
  InvariantFailure,
};

std::string_view to_string(ErrorCode code);

// True for codes that can only be raised by a bug (a theorem failed to hold
// on validated data), as opposed to bad input or numerical trouble.
bool is_internal(ErrorCode code);

/// One violated axiom together with the index tuple that exhibits it.
struct Violation {
  ErrorCode code;
  std::vector<std::size_t> witness;
  std::string detail;
};

/// "Code(w0,w1,...) detail; ..." for a list of violations.
std::string format_violations(const std::vector<Violation>& violations);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> witness = {});
  Error(ErrorCode code, std::string message, std::initializer_list<std::size_t> witness)
      : Error(code, std::move(message), std::vector<std::size_t>(witness)) {}
  Error(ErrorCode code, std::string message, std::vector<Violation> violations);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
  std::vector<Violation> violations_;
};

// Raises InvariantFailure; used for postconditions that are theorems.
[[noreturn]] void invariant_failure(std::string message, std::vector<std::size_t> witness = {});

}  // namespace fusionfact
