#ifndef RANDMAPS_ERRORS_HPP
#define RANDMAPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace randmaps {

// Malformed or inconsistent input (broken rotation system, bad pmf, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive operation asked for a size beyond its cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampler ran out of attempts.
struct RetryLimitError : std::runtime_error {
  RetryLimitError(const std::string& what, long long attempts_)
      : std::runtime_error(what), attempts(attempts_) {}
  long long attempts;
};

// A counter left the representable range (node caps, geodesic counts).
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical linear algebra failure (non-PSD kernel beyond jitter tolerance).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive bijection check found a counterexample; carries the witness.
struct BijectionViolation : std::runtime_error {
  explicit BijectionViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace randmaps

#endif
