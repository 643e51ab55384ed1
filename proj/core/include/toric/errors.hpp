#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation requires the other convexity class (e.g. cosupport on a convex region).
struct WrongKind : std::logic_error {
  using std::logic_error::logic_error;
};

// Input outside the region where a formula is defined or numerically safe.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NoWindow : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace toric
