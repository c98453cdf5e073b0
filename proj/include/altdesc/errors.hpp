#pragma once

#include <stdexcept>
#include <string>

namespace altdesc {

// Requested size exceeds the configured enumeration bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact division that the mathematics guarantees did not come out exact.
// Raised instead of asserting so that a falsified identity surfaces as a
// verification failure.
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace altdesc
