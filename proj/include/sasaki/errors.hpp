#pragma once
#include <stdexcept>
#include <string>

namespace sasaki {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// parser diagnostics carry the byte offset of the offending token
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnboundSymbol : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct DegenerateMetric : Error { using Error::Error; };
struct NotALieAlgebra : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct XiNotUnit : Error { using Error::Error; };
struct NonPositiveParameter : Error { using Error::Error; };
struct NotADerivation : Error { using Error::Error; };
struct SymmetricPartMismatch : Error { using Error::Error; };
struct SymmetricPartNotDerivation : Error { using Error::Error; };
struct CommutatorNonzero : Error { using Error::Error; };
struct SeedInvariantViolated : Error { using Error::Error; };
struct NotZStandard : Error { using Error::Error; };
struct NotRankOne : Error { using Error::Error; };
struct BlockFormViolation : Error { using Error::Error; };
struct RepresentationConditionViolated : Error { using Error::Error; };

}  // namespace sasaki
