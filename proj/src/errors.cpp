#include "monoid_ideals/errors.hpp"

namespace monoid_ideals {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::BadZero: return "BadZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadLabels: return "BadLabels";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::EmptyDivisorSet: return "EmptyDivisorSet";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::NoProperIdeal: return "NoProperIdeal";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::ElementInIdeal: return "ElementInIdeal";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotMultiplicativelyClosed: return "NotMultiplicativelyClosed";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::QuotientMismatch: return "QuotientMismatch";
    case ErrorCode::ZeroInS: return "ZeroInS";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

}  // namespace monoid_ideals
