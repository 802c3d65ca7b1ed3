#include "planarlab/error.hpp"

#include <utility>

namespace planarlab {

DomainError::DomainError(std::string field, std::string reason)
    : std::invalid_argument(field + ": " + reason),
      field_(std::move(field)),
      reason_(std::move(reason)) {}

}  // namespace planarlab
