#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burgeon/fields.hpp"
#include "burgeon/transform.hpp"

namespace burgeon {

/// Outcome of one residual/identity check over a set of points.
struct ResidualReport {
  std::string check_name;
  double max_abs = 0.0;
  double l2 = 0.0; // RMS over scanned points
  long n_points = 0;
  double tolerance = 0.0;
  bool passed = false; // max_abs <= tolerance
  double worst_x = 0.0;
  double worst_t = 0.0;

  void finish(double tol) {
    tolerance = tol;
    passed = max_abs <= tol;
  }
};

/// Sup and RMS of h_t + h h_x over valid grid points. Uses the exact
/// partials when present and requested, central differences otherwise.
ResidualReport burgers_residual(const SolutionField& h, const Domain& domain,
                                bool use_exact, double tolerance);

/// Sup and RMS of (u_x)^2 + (u_t)^2 - 1. With use_exact the field's own
/// gradient evaluators are used; otherwise gradients come from finite
/// differences of the assembled u on the grid.
ResidualReport eikonal_residual(const EikonalField& u, const Domain& domain,
                                bool use_exact, double tolerance);

/// Compares finite-difference gradients of assembled u against the closed
/// forms h/sqrt(h^2+1) and 1/sqrt(h^2+1) from the source field.
/// Returns the u_x report and the u_t report.
std::pair<ResidualReport, ResidualReport>
check_gradient_identities(const EikonalField& u, const Domain& domain,
                          double tolerance);

/// One-sided gradients of the two strip primitives meeting at each graph,
/// compared at (x, p(x)) for every x in xs. Tolerance is 10*tol_fd.
ResidualReport check_graph_matching(const EikonalField& u,
                                    const std::vector<double>& xs,
                                    double tol_fd = 1e-4);

/// One-sided Lipschitz check parameters: quotient (u(x+a,t)-u(x,t))/a must
/// stay below E/t for all sampled a > 0, t > 0.
struct OleinikParams {
  double E = 1.05;
  double M = 0.0; // sup-norm of the data, recorded for the report
  std::vector<double> a_offsets;
  std::vector<double> t_samples;
};

/// Scans the (x, a, t) product on the field. max_abs holds the worst
/// normalized quotient t*q/E (pass iff <= 1); the worst point is recorded.
ResidualReport check_oleinik(const SolutionField& h, const Domain& domain,
                             const OleinikParams& params);

/// Same check on one sampled profile u(x) at a fixed positive time.
/// Offsets are snapped to whole multiples of the profile spacing.
ResidualReport check_oleinik_profile(std::span<const double> xs,
                                     std::span<const double> us, double t,
                                     const OleinikParams& params);

/// Probe offsets for finite-volume profiles: {1, 2, 4} times extent/40,
/// floored at 8 grid spacings. Sub-cell difference quotients of a
/// first-order scheme measure its sonic-point layer rather than the
/// solution's one-sided Lipschitz structure, so the default stays a decade
/// above the cell scale.
std::vector<double> default_profile_offsets(double extent, double dx);

} // namespace burgeon
