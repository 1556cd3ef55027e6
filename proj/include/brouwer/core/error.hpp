#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brouwer {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  CyclicOrder,
  CarrierTooLarge,
  InvalidN,
  InvalidInput,
  SyntaxError,
  FreshNotFresh,
  UnboundVariable,
  BudgetExceeded,
  NotComparable,
  NotSubalgebra,
  InconsistentPresentation,
  NotDownwardClosed,
  MemberOutsideAmbient,
  AntichainViolated,
  NotCanonical,
  InvalidConfig,
  EmptyColumns,
  EBelowBViolation,
  ENotInAmbientComplement,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library.  The kind names the contract that was
/// violated; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the formula parser; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& detail)
      : Error(ErrorKind::SyntaxError, "at " + std::to_string(position) + ": " + detail),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace brouwer
