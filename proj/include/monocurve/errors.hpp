#pragma once

#include <stdexcept>
#include <string>

namespace monocurve {

struct GcdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotMemberError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotGradedPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TwoInSemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when two independent computations of the same invariant disagree.
struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace monocurve
