#include "locale_lab/error.hpp"

namespace locale_lab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NoBoundedLattice: return "NoBoundedLattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::ExpectedEdgeViolated: return "ExpectedEdgeViolated";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::vector<std::string>& witness) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (!witness.empty()) {
    out += " [witness:";
    for (const auto& w : witness) {
      out += ' ';
      out += w;
    }
    out += ']';
  }
  return out;
}

}  // namespace

LocaleError::LocaleError(ErrorKind kind, const std::string& message, std::vector<std::string> witness)
    : std::runtime_error(compose(kind, message, witness)), kind_(kind), witness_(std::move(witness)) {}

void throw_bound(const std::string& what, std::size_t value, std::size_t bound) {
  throw LocaleError(ErrorKind::BoundExceeded,
                    what + " " + std::to_string(value) + " exceeds bound " + std::to_string(bound));
}

}  // namespace locale_lab
