#pragma once

#include <string>
#include <utility>
#include <vector>

#include "burgeon/fields.hpp"
#include "burgeon/transform.hpp"

namespace burgeon {

enum class CharSystem { Burgers, Eikonal };

/// A projected characteristic (x(tau), t(tau)) integrated by classical RK4.
/// Burgers uses (dx,dt)/dtau = (h, 1); the eikonal system uses (u_x, u_t).
struct CharacteristicTrace {
  double seed_x = 0.0;
  double seed_t = 0.0;
  CharSystem system = CharSystem::Burgers;
  std::vector<double> tau;
  std::vector<double> xs;
  std::vector<double> ts;
  bool truncated = false;           // hit the singular mask or left the domain
  std::string truncation_reason;
  double richardson_gap = 0.0;      // endpoint gap vs a halved-step rerun

  double arclength() const;
};

CharacteristicTrace trace_characteristic(const SolutionField& field,
                                         double seed_x, double seed_t,
                                         double tau_span, int n_steps);

CharacteristicTrace trace_characteristic(const EikonalField& field,
                                         double seed_x, double seed_t,
                                         double tau_span, int n_steps);

/// Resamples a trace to n_samples points uniform in arclength.
std::vector<std::pair<double, double>>
resample_arclength(const CharacteristicTrace& trace, int n_samples);

/// Symmetric discrete Hausdorff distance between two point sets.
double hausdorff_distance(const std::vector<std::pair<double, double>>& a,
                          const std::vector<std::pair<double, double>>& b);

/// Traces the Burgers characteristic of h and the eikonal characteristic of
/// u from the same seed over matching arclength, resamples both, and
/// returns their Hausdorff distance (the coincidence measure).
double trace_coincidence(const SolutionField& h, const EikonalField& u,
                         double seed_x, double seed_t, double tau_span,
                         int n_steps = 1000, int n_samples = 257);

} // namespace burgeon
