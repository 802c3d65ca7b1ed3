#pragma once

#include <stdexcept>
#include <string>

namespace planarlab {

/// Raised when an argument falls outside the domain of an operation.
/// Carries the offending field name so callers can report it verbatim.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string field, std::string reason);

  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

/// Raised when an experiment would exceed the configured work/memory guard.
class ResourceGuardError : public std::runtime_error {
 public:
  explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool ok, const char* field, const char* reason) {
  if (!ok) throw DomainError(field, reason);
}

}  // namespace planarlab
