#ifndef MONOID_IDEALS_ERRORS_HPP_
#define MONOID_IDEALS_ERRORS_HPP_

#include <array>
#include <stdexcept>
#include <string>

namespace monoid_ideals {

// Every failure the library reports deliberately. Witness indices (when
// meaningful) identify the elements that violate the condition.
enum class ErrorCode {
  NotAssociative,
  NotCommutative,
  BadIdentity,
  BadZero,
  IndexOutOfRange,
  BadLabels,
  SizeOverflow,
  NotHomomorphism,
  NotAnIdeal,
  EmptyGeneratorSet,
  EmptyDivisorSet,
  MonoidMismatch,
  LatticeTooLarge,
  NoProperIdeal,
  NotProper,
  ElementInIdeal,
  SourceMismatch,
  TargetMismatch,
  NotSurjective,
  NotMultiplicativelyClosed,
  BaseMismatch,
  QuotientMismatch,
  ZeroInS,
  SearchBudgetExceeded,
  SyntaxError,
};

const char* to_string(ErrorCode code);

class MonoidError : public std::runtime_error {
 public:
  MonoidError(ErrorCode code, const std::string& what_arg,
              std::array<int, 3> witness = {-1, -1, -1}, int line = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what_arg),
        code_(code),
        witness_(witness),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }
  // Input line for parse errors, -1 otherwise.
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::array<int, 3> witness_;
  int line_;
};

}  // namespace monoid_ideals

#endif  // MONOID_IDEALS_ERRORS_HPP_
