#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locale_lab {

enum class ErrorKind {
  NotAPartialOrder,
  NoBoundedLattice,
  NotDistributive,
  BoundExceeded,
  InternalInconsistency,
  EquivalenceViolation,
  ExpectedEdgeViolated,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Structured rejection. `witness` holds element labels (or other short
/// identifiers) pinpointing the failure, e.g. the non-distributive triple.
class LocaleError : public std::runtime_error {
 public:
  LocaleError(ErrorKind kind, const std::string& message, std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

[[noreturn]] void throw_bound(const std::string& what, std::size_t value, std::size_t bound);

}  // namespace locale_lab
