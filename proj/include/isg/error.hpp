#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isg {

enum class ErrorKind {
  kMalformedTable,
  kNotAssociative,
  kNoInverse,
  kNonUniqueInverse,
  kNotSemilattice,
  kZeroRequired,
  kZeroPresent,
  kNotACongruence,
  kSearchBudgetExceeded,
  kSizeBudgetExceeded,
  kNotHomomorphism,
  kNotInjective,
  kDomainMismatch,
  kNotCovering,
  kNotSubsemigroup,
  kCyclicGraph,
  kInvalidGroupoid,
  kIncompatibleBundle,
  kNotATransversal,
  kGroupoidMismatch,
  kHypothesisFailed,
  kInvariantViolation,
  kParseError,
  kUnknownName,
};

std::string_view to_string(ErrorKind kind);

// Every error names the offending indices in `witness` so that callers can
// report a concrete counterexample.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

// Internal postcondition failures. These indicate a bug, not bad input.
[[noreturn]] void invariant_failure(std::string message, std::vector<std::size_t> witness = {});

}  // namespace isg
