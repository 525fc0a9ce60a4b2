#include "burgeon/singular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace burgeon {

namespace {

constexpr double kAbsoluteFloor = 1e-8;

double median_of(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Flags jump edges along one grid direction: a neighbor difference counts as
// a jump when it exceeds threshold_factor times the median of the nearby
// differences (candidate excluded) plus an absolute floor.
void scan_direction(const GridField& grid, bool along_x, double factor,
                    std::vector<std::pair<double, double>>& out) {
  const Domain& d = grid.domain();
  const int ni = along_x ? d.nx : d.nt;
  const int nj = along_x ? d.nt : d.nx;
  auto val = [&](int i, int j) { return along_x ? grid.value(i, j) : grid.value(j, i); };
  auto ok = [&](int i, int j) { return along_x ? grid.valid(i, j) : grid.valid(j, i); };

  std::vector<double> diffs(ni - 1);
  std::vector<char> have(ni - 1);
  for (int j = 0; j < nj; ++j) {
    for (int i = 0; i + 1 < ni; ++i) {
      have[i] = ok(i, j) && ok(i + 1, j);
      diffs[i] = have[i] ? val(i + 1, j) - val(i, j) : 0.0;
    }
    for (int i = 0; i + 1 < ni; ++i) {
      if (!have[i]) continue;
      std::vector<double> window;
      for (int k = i - 2; k <= i + 2; ++k) {
        if (k == i || k < 0 || k + 1 >= ni || !have[k]) continue;
        window.push_back(std::abs(diffs[k]));
      }
      if (window.size() < 2) continue; // too little context to judge
      const double thr = factor * median_of(window) + kAbsoluteFloor;
      if (std::abs(diffs[i]) > thr) {
        if (along_x)
          out.emplace_back(0.5 * (d.x(i) + d.x(i + 1)), d.t(j));
        else
          out.emplace_back(d.x(j), 0.5 * (d.t(i) + d.t(i + 1)));
      }
    }
  }
}

} // namespace

std::vector<std::pair<double, double>>
box_count(const std::vector<std::pair<double, double>>& points,
          const std::vector<double>& eps_schedule) {
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    if (!(eps_schedule[k] > 0.0)) throw Error("box_count: eps must be positive");
    if (k > 0 && !(eps_schedule[k] < eps_schedule[k - 1]))
      throw Error("box_count: eps schedule must be decreasing");
  }
  std::vector<std::pair<double, double>> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::pair<double, double>> out;
  out.reserve(eps_schedule.size());
  for (double eps : eps_schedule) {
    // greedy eps-separated subset: an orientation-fair count of eps-scale
    // pieces (N(eps)*eps tends to the length of a rectifiable set); a hash
    // of eps-cells keeps the scan near-linear, candidates only compare
    // against kept points in the 3x3 neighboring cells
    const double limit = eps * eps * (1.0 - 1e-12);
    std::unordered_map<std::uint64_t, std::vector<std::pair<double, double>>> cells;
    auto cell_key = [eps](double x, double t) {
      const auto ix = static_cast<std::int64_t>(std::floor(x / eps));
      const auto it = static_cast<std::int64_t>(std::floor(t / eps));
      return (static_cast<std::uint64_t>(ix) << 32) ^
             (static_cast<std::uint64_t>(it) & 0xffffffffULL);
    };
    std::size_t n_kept = 0;
    for (const auto& p : sorted) {
      bool separated = true;
      for (int di = -1; di <= 1 && separated; ++di)
        for (int dj = -1; dj <= 1 && separated; ++dj) {
          const auto it = cells.find(cell_key(p.first + di * eps, p.second + dj * eps));
          if (it == cells.end()) continue;
          for (const auto& q : it->second) {
            const double ddx = p.first - q.first, ddt = p.second - q.second;
            if (ddx * ddx + ddt * ddt < limit) {
              separated = false;
              break;
            }
          }
        }
      if (separated) {
        cells[cell_key(p.first, p.second)].push_back(p);
        ++n_kept;
      }
    }
    out.emplace_back(eps, static_cast<double>(n_kept) * eps);
  }
  return out;
}

double project_x(const std::vector<std::pair<double, double>>& points, double dx) {
  if (points.empty()) return 0.0;
  if (!(dx > 0.0)) throw Error("project_x: dx must be positive");
  std::vector<double> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  double total = 0.0;
  double lo = xs[0] - 0.5 * dx, hi = xs[0] + 0.5 * dx;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const double a = xs[k] - 0.5 * dx, b = xs[k] + 0.5 * dx;
    if (a <= hi) {
      hi = std::max(hi, b);
    } else {
      total += hi - lo;
      lo = a;
      hi = b;
    }
  }
  total += hi - lo;
  return total;
}

std::vector<double> default_eps_schedule(const Domain& domain) {
  const double pitch = std::max(domain.dx(), domain.dt());
  const double finest = 4.0 * pitch;
  const double cap = domain.diameter() / 8.0;
  std::vector<double> sched;
  for (double e = finest; e <= cap; e *= 2.0) sched.push_back(e);
  if (sched.empty()) sched.push_back(finest);
  std::reverse(sched.begin(), sched.end());
  return sched;
}

SingularSetEstimate detect_singular(const GridField& grid, double threshold_factor) {
  const Domain& d = grid.domain();
  SingularSetEstimate est;
  est.threshold_factor = threshold_factor;

  std::vector<std::pair<double, double>> pts;
  for (int j = 0; j < d.nt; ++j)
    for (int i = 0; i < d.nx; ++i)
      if (!grid.valid(i, j)) pts.emplace_back(d.x(i), d.t(j)); // masked blow-up points
  scan_direction(grid, true, threshold_factor, pts);
  scan_direction(grid, false, threshold_factor, pts);

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  est.points = std::move(pts);

  est.premeasure = box_count(est.points, default_eps_schedule(d));
  if (est.points.empty()) {
    est.h1_estimate = 0.0;
  } else {
    est.h1_estimate = est.premeasure.back().second;
    // pure eps-scaling between the two finest levels means a 0-dimensional
    // set (finitely many points): the premeasure extrapolates to zero
    if (est.premeasure.size() >= 2) {
      const double prev = est.premeasure[est.premeasure.size() - 2].second;
      if (prev > 0.0 && est.h1_estimate / prev <= 0.6) est.h1_estimate = 0.0;
    }
  }
  est.proj_x_measure = project_x(est.points, d.dx());
  return est;
}

SingularSetEstimate detect_singular(const SolutionField& field,
                                    const Domain& domain,
                                    double threshold_factor) {
  return detect_singular(sample(field, domain), threshold_factor);
}

} // namespace burgeon
