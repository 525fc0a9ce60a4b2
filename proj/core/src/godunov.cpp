#include "burgeon/godunov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "burgeon/catalog.hpp"
#include "burgeon/verify.hpp"

namespace burgeon {

namespace {
constexpr double kSpeedFloor = 1e-12; // CFL denominator floor for all-zero states
}

double FVState::mass() const {
  double s = 0.0;
  for (double v : u) s += v;
  return s * dx;
}

double FVState::max_abs() const {
  double s = 0.0;
  for (double v : u) s = std::max(s, std::abs(v));
  return s;
}

double godunov_flux(double u_left, double u_right) {
  auto f = [](double v) { return 0.5 * v * v; };
  if (u_left <= u_right) {
    if (u_left <= 0.0 && 0.0 <= u_right) return 0.0; // sonic point
    return std::min(f(u_left), f(u_right));
  }
  return std::max(f(u_left), f(u_right));
}

FVState godunov_step(const FVState& state, double dt_cap) {
  const int n = state.n();
  if (n < 1) throw Error("godunov_step: empty state");
  if (!(state.dx > 0.0)) throw Error("godunov_step: dx must be positive");
  if (!(state.cfl > 0.0 && state.cfl < 1.0))
    throw Error("godunov_step: cfl must lie in (0,1)");

  double dt = state.cfl * state.dx / std::max(state.max_abs(), kSpeedFloor);
  if (dt_cap > 0.0) dt = std::min(dt, dt_cap);

  std::vector<double> flux(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double ul = state.u[std::max(i - 1, 0)];   // outflow ghosts
    const double ur = state.u[std::min(i, n - 1)];
    flux[i] = godunov_flux(ul, ur);
  }

  FVState out = state;
  const double r = dt / state.dx;
  const double slack = 1e-12 * (1.0 + std::abs(state.data_min) + std::abs(state.data_max));
  for (int i = 0; i < n; ++i) {
    const double v = state.u[i] - r * (flux[i + 1] - flux[i]);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "godunov_step: non-finite cell value at i=" << i << ", t=" << state.time;
      throw Error(os.str());
    }
    if (v < state.data_min - slack || v > state.data_max + slack) {
      std::ostringstream os;
      os << "godunov_step: max principle violated at i=" << i << " (value " << v
         << " outside [" << state.data_min << ", " << state.data_max << "])";
      throw Error(os.str());
    }
    out.u[i] = v;
  }
  out.time = state.time + dt;
  out.boundary_inflow = state.boundary_inflow + dt * (flux[0] - flux[n]);
  return out;
}

double Trajectory::conservation_defect() const {
  return std::abs(final_state.mass() - mass_initial - final_state.boundary_inflow);
}

Trajectory solve_ivp(const IVPConfig& cfg) {
  if (!cfg.u0) throw Error("solve_ivp: missing initial data");
  if (cfg.n_cells < 16) throw Error("solve_ivp: need at least 16 cells");
  if (!(cfg.t_end > 0.0)) throw Error("solve_ivp: end time must be positive");
  if (!(cfg.x_lo < cfg.x_hi)) throw Error("solve_ivp: empty window");

  const double dx = (cfg.x_hi - cfg.x_lo) / cfg.n_cells;

  // outflow padding so boundaries never reach the reported window
  int pad_cells = 0;
  if (cfg.pad_domain) {
    double m0 = 0.0;
    for (int i = 0; i < cfg.n_cells; ++i)
      m0 = std::max(m0, std::abs(cfg.u0(cfg.x_lo + (i + 0.5) * dx)));
    pad_cells = static_cast<int>(std::ceil(2.0 * cfg.t_end * m0 / dx)) + 2;
  }
  const int n = cfg.n_cells + 2 * pad_cells;

  FVState state;
  state.x_lo = cfg.x_lo - pad_cells * dx;
  state.dx = dx;
  state.cfl = cfg.cfl;
  state.u.resize(n);
  for (int i = 0; i < n; ++i) state.u[i] = cfg.u0(state.cell_center(i));
  state.data_min = *std::min_element(state.u.begin(), state.u.end());
  state.data_max = *std::max_element(state.u.begin(), state.u.end());

  std::vector<double> stops = cfg.snapshot_times;
  stops.push_back(cfg.t_end);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  for (double s : stops)
    if (!(s > 0.0) || s > cfg.t_end * (1.0 + 1e-12))
      throw Error("solve_ivp: snapshot times must lie in (0, t_end]");

  Trajectory traj;
  traj.dx = dx;
  traj.window_begin = pad_cells;
  traj.window_end = pad_cells + cfg.n_cells;
  traj.mass_initial = state.mass();

  auto take_snapshot = [&](const FVState& s) {
    Snapshot snap;
    snap.time = s.time;
    snap.xs.reserve(cfg.n_cells);
    snap.us.reserve(cfg.n_cells);
    for (int i = traj.window_begin; i < traj.window_end; ++i) {
      snap.xs.push_back(s.cell_center(i));
      snap.us.push_back(s.u[i]);
    }
    traj.snapshots.push_back(std::move(snap));
  };

  for (double stop : stops) {
    while (state.time < stop * (1.0 - 1e-14)) {
      state = godunov_step(state, stop - state.time);
      ++traj.n_steps;
    }
    take_snapshot(state);
  }
  traj.final_state = std::move(state);
  return traj;
}

double shock_position(const Snapshot& snap) {
  const int n = static_cast<int>(snap.us.size());
  if (n < 2) return std::nan("");
  double max_jump = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    max_jump = std::max(max_jump, std::abs(snap.us[i + 1] - snap.us[i]));
  if (max_jump < 1e-12) return std::nan("");
  // centroid of the steep interfaces, weighted by jump size
  double wsum = 0.0, xsum = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double j = std::abs(snap.us[i + 1] - snap.us[i]);
    if (j < 0.25 * max_jump) continue;
    const double x_iface = 0.5 * (snap.xs[i] + snap.xs[i + 1]);
    wsum += j;
    xsum += j * x_iface;
  }
  return xsum / wsum;
}

double l1_coarsened_diff(const std::vector<double>& coarse,
                         const std::vector<double>& fine, double dx_coarse) {
  if (fine.size() != 2 * coarse.size())
    throw Error("l1_coarsened_diff: fine grid must have exactly twice the cells");
  double s = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double avg = 0.5 * (fine[2 * i] + fine[2 * i + 1]);
    s += std::abs(coarse[i] - avg);
  }
  return s * dx_coarse;
}

BackshiftReport backshift_experiment(const std::function<double(double)>& u0,
                                     const std::string& u0_name,
                                     const std::vector<double>& shifts,
                                     double E, int n_cells, double x_lo,
                                     double x_hi) {
  if (shifts.empty()) throw Error("backshift_experiment: no shifts given");
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (!(shifts[k] > 0.0)) throw Error("backshift_experiment: shifts must be positive");
    if (k > 0 && !(shifts[k] > shifts[k - 1]))
      throw Error("backshift_experiment: shifts must be increasing");
  }

  IVPConfig cfg;
  cfg.u0 = u0;
  cfg.u0_name = u0_name;
  cfg.x_lo = x_lo;
  cfg.x_hi = x_hi;
  cfg.n_cells = n_cells;
  cfg.t_end = shifts.back();
  cfg.snapshot_times = shifts;
  const Trajectory traj = solve_ivp(cfg);

  BackshiftReport rep;
  rep.u0_name = u0_name;
  rep.E = E;
  rep.passed = true;
  const std::vector<double> offsets = default_profile_offsets(x_hi - x_lo, traj.dx);
  for (const Snapshot& snap : traj.snapshots) {
    BackshiftRow row;
    row.shift = snap.time;
    double worst = 0.0;
    for (double a : offsets) {
      const long k = std::max<long>(1, std::llround(a / traj.dx));
      for (std::size_t i = 0; i + k < snap.us.size(); ++i)
        worst = std::max(worst, (snap.us[i + k] - snap.us[i]) / (k * traj.dx));
    }
    row.max_slope = worst;
    row.bound = E / snap.time;
    row.passed = row.max_slope <= row.bound;
    rep.passed = rep.passed && row.passed;
    rep.rows.push_back(row);
  }
  return rep;
}

std::pair<std::function<double(double)>, std::string>
initial_data_from_spec(const std::string& spec) {
  auto [name, kv] = parse_spec_string(spec);
  auto num = [&kv](const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw UsageError("ivp spec: bad numeric value for '" + key + "'");
    }
  };
  std::ostringstream canon;
  if (name == "riemann" || name == "expansion") {
    const double ul = num("ul", name == "riemann" ? 1.0 : -1.0);
    const double ur = num("ur", name == "riemann" ? 0.0 : 1.0);
    canon << name << ":ul=" << ul << ",ur=" << ur;
    return {[ul, ur](double x) { return x < 0.0 ? ul : ur; }, canon.str()};
  }
  if (name == "constant") {
    const double c = num("c", 0.0);
    canon << "constant:c=" << c;
    return {[c](double) { return c; }, canon.str()};
  }
  if (name == "sine") {
    const double amp = num("amp", 1.0), k = num("k", 1.0);
    canon << "sine:amp=" << amp << ",k=" << k;
    return {[amp, k](double x) { return amp * std::sin(k * x); }, canon.str()};
  }
  if (name == "bump") {
    const double amp = num("amp", 1.0), w = num("w", 1.0);
    canon << "bump:amp=" << amp << ",w=" << w;
    return {[amp, w](double x) { return amp * std::exp(-(x / w) * (x / w)); }, canon.str()};
  }
  throw UsageError("unknown ivp '" + name +
                   "' (known: riemann, expansion, constant, sine, bump)");
}

} // namespace burgeon
