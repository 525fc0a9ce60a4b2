#pragma once

#include <utility>
#include <vector>

#include "burgeon/fields.hpp"

namespace burgeon {

/// Detected singular points with measure surrogates: an H^1 premeasure
/// curve N(eps)*eps on a dyadic eps schedule, and the Lebesgue measure of
/// the x-projection.
struct SingularSetEstimate {
  std::vector<std::pair<double, double>> points; // lexicographically sorted
  std::vector<std::pair<double, double>> premeasure; // (eps, N(eps)*eps)
  double h1_estimate = 0.0;   // premeasure at the finest eps; 0 iff empty
  double proj_x_measure = 0.0;
  double threshold_factor = 0.0;

  bool empty() const { return points.empty(); }
};

/// Flags grid nodes whose local jump exceeds threshold_factor times the
/// median absolute neighbor difference (5-cell window, candidate excluded)
/// plus an absolute floor of 1e-8, and every masked (invalid) node.
SingularSetEstimate detect_singular(const GridField& grid,
                                    double threshold_factor = 5.0);

/// Samples the field on the domain grid and detects.
SingularSetEstimate detect_singular(const SolutionField& field,
                                    const Domain& domain,
                                    double threshold_factor = 5.0);

/// H^1 premeasure by greedy eps-separated subset counting (an
/// orientation-fair surrogate for covering number): returns (eps, N(eps)*eps)
/// for each scheduled eps. The schedule must be decreasing and positive.
std::vector<std::pair<double, double>>
box_count(const std::vector<std::pair<double, double>>& points,
          const std::vector<double>& eps_schedule);

/// Lebesgue measure of the union of width-dx intervals centered on the
/// projected x-coordinates.
double project_x(const std::vector<std::pair<double, double>>& points,
                 double dx);

/// Dyadic schedule eps = 4*pitch * 2^k clipped to domain-diameter/8,
/// descending (grid-aligned so the finest scale is exactly 4 grid pitches).
std::vector<double> default_eps_schedule(const Domain& domain);

} // namespace burgeon
