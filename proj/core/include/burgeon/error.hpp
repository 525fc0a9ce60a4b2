#pragma once

#include <stdexcept>
#include <string>

namespace burgeon {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input (malformed field spec, invalid config). CLI maps this to exit 2.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// Quadrature failed to reach the requested tolerance; carries the best
/// estimate and the last refinement gap so callers can decide what to do.
class QuadratureError : public Error {
public:
  QuadratureError(const std::string& what, double best, double gap)
      : Error(what), best_estimate(best), gap(gap) {}
  double best_estimate;
  double gap;
};

/// An evaluation landed on a point of the declared singular set.
class SingularPointError : public Error {
public:
  SingularPointError(const std::string& what, double x, double t)
      : Error(what), x(x), t(t) {}
  double x;
  double t;
};

} // namespace burgeon
