#pragma once

#include <functional>

#include "burgeon/error.hpp"

namespace burgeon {

/// Signed integral of f over [s_lo, s_hi] by composite Simpson with dyadic
/// refinement: panels double until successive Simpson estimates differ by
/// less than tol. Swapping the limits negates the result. Throws
/// QuadratureError (carrying the best estimate and the gap) if the gap is
/// still above tol at the refinement cap, and Error if f returns a
/// non-finite value.
double integrate_curve(const std::function<double(double)>& f, double s_lo,
                       double s_hi, double tol);

} // namespace burgeon
