#pragma once

#include <stdexcept>
#include <string>

namespace frs {

// Thrown when a computed quantity violates a bound that is supposed to be
// a theorem (list size, subspace dimension, rank-deficit sum). Reaching one
// of these means a bug, not bad input.
class ContractViolation : public std::logic_error {
  public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when an exhaustive enumeration would exceed its configured cap.
class LimitExceeded : public std::runtime_error {
  public:
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace frs
