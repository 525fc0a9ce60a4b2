#pragma once

#include <functional>
#include <string>
#include <vector>

#include "burgeon/fields.hpp"

namespace burgeon {

/// Finite-volume state: cell averages on a uniform x-grid at one time.
struct FVState {
  std::vector<double> u;
  double x_lo = 0.0;   // left edge of the first cell
  double dx = 0.0;
  double time = 0.0;
  double cfl = 0.9;
  double data_min = 0.0; // bounds of the initial data, for the max principle
  double data_max = 0.0;
  double boundary_inflow = 0.0; // accumulated dt*(F_left - F_right)

  int n() const { return static_cast<int>(u.size()); }
  double cell_center(int i) const { return x_lo + (i + 0.5) * dx; }
  double mass() const;
  double max_abs() const;
};

/// Exact Godunov interface flux for f(u) = u^2/2 (sonic point at 0 handled).
double godunov_flux(double u_left, double u_right);

/// One explicit conservative step with outflow boundaries. dt comes from the
/// CFL condition (capped by dt_cap when positive, e.g. to land on a snapshot
/// time). Enforces the max principle and finiteness; throws Error on blowup.
FVState godunov_step(const FVState& state, double dt_cap = -1.0);

struct IVPConfig {
  std::function<double(double)> u0;
  std::string u0_name;
  double x_lo = -5.0;
  double x_hi = 5.0;
  int n_cells = 400;
  double t_end = 1.0;
  double cfl = 0.9;
  std::vector<double> snapshot_times; // t_end is always included
  bool pad_domain = true; // pad by 2*t_end*M each side so boundaries stay silent
};

struct Snapshot {
  double time = 0.0;
  std::vector<double> xs; // cell centers inside the requested window
  std::vector<double> us;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  FVState final_state;
  int window_begin = 0; // cell range of the requested window in final_state
  int window_end = 0;
  double dx = 0.0;
  double mass_initial = 0.0;
  long n_steps = 0;

  /// |mass(t_end) - mass(0) - accumulated boundary flux|.
  double conservation_defect() const;
};

Trajectory solve_ivp(const IVPConfig& cfg);

/// Rankine-Hugoniot-style shock locator: flux-weighted centroid of the
/// steep interfaces of a profile. Returns NaN for flat profiles.
double shock_position(const Snapshot& snap);

/// L1 distance between a coarse profile and a 2x-refined one (averaged down).
double l1_coarsened_diff(const std::vector<double>& coarse,
                         const std::vector<double>& fine, double dx_coarse);

struct BackshiftRow {
  double shift = 0.0;     // evolution time T
  double max_slope = 0.0; // max adjacent positive difference quotient at T
  double bound = 0.0;     // E/T
  bool passed = false;
};

struct BackshiftReport {
  std::string u0_name;
  double E = 1.05;
  std::vector<BackshiftRow> rows;
  bool passed = false;
};

/// Evolves u0 for each shift T and measures the decay of the maximal
/// positive slope against E/T.
BackshiftReport backshift_experiment(const std::function<double(double)>& u0,
                                     const std::string& u0_name,
                                     const std::vector<double>& shifts,
                                     double E = 1.05, int n_cells = 800,
                                     double x_lo = -5.0, double x_hi = 5.0);

/// Initial data by name: `riemann:ul=1,ur=0`, `constant:c=2`,
/// `sine:amp=1,k=1`, `bump:amp=1`, `expansion:ul=-1,ur=1`.
std::pair<std::function<double(double)>, std::string>
initial_data_from_spec(const std::string& spec);

} // namespace burgeon
