#pragma once

#include <array>
#include <span>
#include <vector>

#include "burgeon/fields.hpp"
#include "burgeon/transform.hpp"

namespace burgeon {

enum class SolutionKind { Affine, Cone, Unclassified };

/// Best fit of u against the two pointwise eikonal solution families:
/// affine a x + b t + gamma with a^2 + b^2 = 1, and cone
/// c +/- sqrt((x-x0)^2 + (t-t0)^2).
struct ClassificationResult {
  SolutionKind kind = SolutionKind::Unclassified;

  // affine branch (valid when kind == Affine)
  double a = 0.0, b = 0.0, gamma = 0.0;
  double implied_h = 0.0; // a/b when b != 0

  // cone branch (valid when kind == Cone)
  double x0 = 0.0, t0 = 0.0, c = 0.0;
  int sign = +1;

  double fit_residual = 0.0;    // max abs deviation of the chosen model
  double affine_residual = 0.0;
  double cone_residual = -1.0;  // -1 when the cone fit was skipped

  const char* kind_name() const;
};

struct ClassifyOptions {
  double threshold = -1.0; // < 0: auto = 1e-6 * sample diameter
  unsigned seed = 0;       // ordering seed for the extra multistart jitter
  int coarse_grid = 5;     // coarse_grid^2 cone-center seeds
  int max_gn_iters = 60;
};

/// Points are (x, t, u). Requires >= 6 points; throws Error on degenerate
/// (collinear) sample geometry. Ties break toward Affine.
ClassificationResult classify(std::span<const std::array<double, 3>> points,
                              const ClassifyOptions& options = {});

/// Classifies the valid nodes of a sampled field.
ClassificationResult classify(const GridField& grid,
                              const ClassifyOptions& options = {});

/// Samples u on the domain grid and classifies.
ClassificationResult classify(const EikonalField& u, const Domain& domain,
                              const ClassifyOptions& options = {});

} // namespace burgeon
