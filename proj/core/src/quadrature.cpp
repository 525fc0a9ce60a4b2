#include "burgeon/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace burgeon {

namespace {

constexpr int kMaxLevel = 20;  // up to 2^20 panels before giving up
constexpr int kMinLevel = 5;   // never trust fewer than 32 panels

double eval_checked(const std::function<double(double)>& f, double s) {
  const double v = f(s);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrate_curve: non-finite integrand at s=" << s;
    throw Error(os.str());
  }
  return v;
}

} // namespace

double integrate_curve(const std::function<double(double)>& f, double s_lo,
                       double s_hi, double tol) {
  if (!(tol > 0.0)) throw Error("integrate_curve: tol must be positive");
  if (s_lo == s_hi) return 0.0;
  if (s_lo > s_hi) return -integrate_curve(f, s_hi, s_lo, tol);

  const double width = s_hi - s_lo;
  // Trapezoid refinement with Simpson extraction: S_L = (4 T_L - T_{L-1})/3
  // is the composite Simpson value on 2^L panels.
  double trap = 0.5 * width * (eval_checked(f, s_lo) + eval_checked(f, s_hi));
  double simpson_prev = trap;
  double last_gap = std::abs(simpson_prev);
  for (int level = 1; level <= kMaxLevel; ++level) {
    const long n_new = 1L << (level - 1); // midpoints added at this level
    const double h = width / static_cast<double>(n_new);
    double sum = 0.0;
    for (long k = 0; k < n_new; ++k)
      sum += eval_checked(f, s_lo + (k + 0.5) * h);
    const double trap_next = 0.5 * trap + 0.5 * h * sum;
    const double simpson = (4.0 * trap_next - trap) / 3.0;
    trap = trap_next;
    last_gap = std::abs(simpson - simpson_prev);
    if (level >= kMinLevel && last_gap < tol) return simpson;
    simpson_prev = simpson;
  }
  std::ostringstream os;
  os << "integrate_curve: no convergence after " << kMaxLevel
     << " refinements (gap " << last_gap << ")";
  throw QuadratureError(os.str(), simpson_prev, last_gap);
}

} // namespace burgeon
