#include "isg/error.hpp"

#include <sstream>

namespace isg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedTable: return "MalformedTable";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNoInverse: return "NoInverse";
    case ErrorKind::kNonUniqueInverse: return "NonUniqueInverse";
    case ErrorKind::kNotSemilattice: return "NotSemilattice";
    case ErrorKind::kZeroRequired: return "ZeroRequired";
    case ErrorKind::kZeroPresent: return "ZeroPresent";
    case ErrorKind::kNotACongruence: return "NotACongruence";
    case ErrorKind::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::kSizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::kNotHomomorphism: return "NotHomomorphism";
    case ErrorKind::kNotInjective: return "NotInjective";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kNotCovering: return "NotCovering";
    case ErrorKind::kNotSubsemigroup: return "NotSubsemigroup";
    case ErrorKind::kCyclicGraph: return "CyclicGraph";
    case ErrorKind::kInvalidGroupoid: return "InvalidGroupoid";
    case ErrorKind::kIncompatibleBundle: return "IncompatibleBundle";
    case ErrorKind::kNotATransversal: return "NotATransversal";
    case ErrorKind::kGroupoidMismatch: return "GroupoidMismatch";
    case ErrorKind::kHypothesisFailed: return "HypothesisFailed";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownName: return "UnknownName";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << to_string(kind) << ": " << message;
  if (!witness.empty()) {
    out << " [witness:";
    for (std::size_t w : witness) out << ' ' << w;
    out << ']';
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness)
    : std::runtime_error(format_message(kind, message, witness)),
      kind_(kind),
      witness_(std::move(witness)) {}

void invariant_failure(std::string message, std::vector<std::size_t> witness) {
  throw Error(ErrorKind::kInvariantViolation, std::move(message), std::move(witness));
}

}  // namespace isg
