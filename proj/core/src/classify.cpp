#include "burgeon/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace burgeon {

namespace {

struct Moments {
  double mx = 0, mt = 0, mu = 0;           // means
  double cxx = 0, ctt = 0, cxt = 0;        // centered second moments
  double cux = 0, cut = 0, cuu = 0;
  double min_x = 0, max_x = 0, min_t = 0, max_t = 0;
};

Moments compute_moments(std::span<const std::array<double, 3>> pts) {
  Moments m;
  const double n = static_cast<double>(pts.size());
  m.min_x = m.max_x = pts[0][0];
  m.min_t = m.max_t = pts[0][1];
  for (const auto& p : pts) {
    m.mx += p[0];
    m.mt += p[1];
    m.mu += p[2];
    m.min_x = std::min(m.min_x, p[0]);
    m.max_x = std::max(m.max_x, p[0]);
    m.min_t = std::min(m.min_t, p[1]);
    m.max_t = std::max(m.max_t, p[1]);
  }
  m.mx /= n;
  m.mt /= n;
  m.mu /= n;
  for (const auto& p : pts) {
    const double dx = p[0] - m.mx, dt = p[1] - m.mt, du = p[2] - m.mu;
    m.cxx += dx * dx;
    m.ctt += dt * dt;
    m.cxt += dx * dt;
    m.cux += du * dx;
    m.cut += du * dt;
    m.cuu += du * du;
  }
  m.cxx /= n;
  m.ctt /= n;
  m.cxt /= n;
  m.cux /= n;
  m.cut /= n;
  m.cuu /= n;
  return m;
}

// mean squared error of the unit-gradient affine model at angle theta
double affine_mse(const Moments& m, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return m.cuu - 2.0 * (c * m.cux + s * m.cut) + c * c * m.cxx +
         2.0 * c * s * m.cxt + s * s * m.ctt;
}

// tiny portable generator for the jittered extra starts (seed-stable output
// regardless of the standard library)
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  double next01() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
};

struct ConeFit {
  double x0 = 0, t0 = 0, c = 0;
  int sign = +1;
  double rms = std::numeric_limits<double>::infinity();
  double max_abs = std::numeric_limits<double>::infinity();
};

double cone_rms(std::span<const std::array<double, 3>> pts, double x0,
                double t0, double c, int sign) {
  double s = 0.0;
  for (const auto& p : pts) {
    const double rho = std::hypot(p[0] - x0, p[1] - t0);
    const double r = c + sign * rho - p[2];
    s += r * r;
  }
  return std::sqrt(s / pts.size());
}

// Levenberg-damped Gauss-Newton on (x0, t0, c) for fixed sign.
ConeFit gauss_newton_cone(std::span<const std::array<double, 3>> pts,
                          double x0, double t0, int sign, int max_iters) {
  const double n = static_cast<double>(pts.size());
  // initial c makes the mean residual vanish
  double c = 0.0;
  for (const auto& p : pts) c += p[2] - sign * std::hypot(p[0] - x0, p[1] - t0);
  c /= n;

  double lambda = 1e-3;
  double rms = cone_rms(pts, x0, t0, c, sign);
  for (int it = 0; it < max_iters; ++it) {
    // normal equations J^T J d = -J^T r
    double a11 = 0, a12 = 0, a13 = 0, a22 = 0, a23 = 0, a33 = 0;
    double b1 = 0, b2 = 0, b3 = 0;
    for (const auto& p : pts) {
      const double dx = x0 - p[0], dt = t0 - p[1];
      const double rho = std::hypot(dx, dt);
      if (rho < 1e-12) continue; // sample at the apex: no gradient info
      const double jx = sign * dx / rho, jt = sign * dt / rho;
      const double r = c + sign * rho - p[2];
      a11 += jx * jx;
      a12 += jx * jt;
      a13 += jx;
      a22 += jt * jt;
      a23 += jt;
      a33 += 1.0;
      b1 -= jx * r;
      b2 -= jt * r;
      b3 -= r;
    }
    bool stepped = false;
    for (int attempt = 0; attempt < 8 && !stepped; ++attempt) {
      const double d11 = a11 + lambda, d22 = a22 + lambda, d33 = a33 + lambda;
      // 3x3 Cholesky-free solve by Cramer
      const double det = d11 * (d22 * d33 - a23 * a23) - a12 * (a12 * d33 - a23 * a13) +
                         a13 * (a12 * a23 - d22 * a13);
      if (std::abs(det) < 1e-300) {
        lambda *= 10.0;
        continue;
      }
      const double s1 = (b1 * (d22 * d33 - a23 * a23) - a12 * (b2 * d33 - a23 * b3) +
                         a13 * (b2 * a23 - d22 * b3)) / det;
      const double s2 = (d11 * (b2 * d33 - a23 * b3) - b1 * (a12 * d33 - a23 * a13) +
                         a13 * (a12 * b3 - b2 * a13)) / det;
      const double s3 = (d11 * (d22 * b3 - b2 * a23) - a12 * (a12 * b3 - b2 * a13) +
                         b1 * (a12 * a23 - d22 * a13)) / det;
      const double nx0 = x0 + s1, nt0 = t0 + s2, nc = c + s3;
      const double nrms = cone_rms(pts, nx0, nt0, nc, sign);
      if (nrms <= rms) {
        const double move = std::abs(s1) + std::abs(s2) + std::abs(s3);
        x0 = nx0;
        t0 = nt0;
        c = nc;
        const bool converged = (rms - nrms) < 1e-15 * (1.0 + rms) && move < 1e-12;
        rms = nrms;
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
        if (converged) it = max_iters;
      } else {
        lambda *= 10.0;
      }
    }
    if (!stepped) break;
  }

  ConeFit fit;
  fit.x0 = x0;
  fit.t0 = t0;
  fit.c = c;
  fit.sign = sign;
  fit.rms = rms;
  double worst = 0.0;
  for (const auto& p : pts) {
    const double r = c + sign * std::hypot(p[0] - x0, p[1] - t0) - p[2];
    worst = std::max(worst, std::abs(r));
  }
  fit.max_abs = worst;
  return fit;
}

} // namespace

const char* ClassificationResult::kind_name() const {
  switch (kind) {
    case SolutionKind::Affine: return "Affine";
    case SolutionKind::Cone: return "Cone";
    default: return "Unclassified";
  }
}

ClassificationResult classify(std::span<const std::array<double, 3>> points,
                              const ClassifyOptions& options) {
  if (points.size() < 6) throw Error("classify: need at least 6 sample points");
  const Moments m = compute_moments(points);

  // degenerate geometry: all samples on one line in the (x,t) plane
  const double tr = m.cxx + m.ctt;
  const double det = m.cxx * m.ctt - m.cxt * m.cxt;
  const double lam_min = 0.5 * (tr - std::sqrt(std::max(tr * tr - 4.0 * det, 0.0)));
  if (lam_min <= 1e-12 * std::max(tr, 1e-300))
    throw Error("classify: degenerate sample geometry (collinear points)");

  const double diam = std::hypot(m.max_x - m.min_x, m.max_t - m.min_t);
  const double threshold =
      options.threshold >= 0.0 ? options.threshold : 1e-6 * diam;

  ClassificationResult res;

  // --- affine branch: a = cos(theta), b = sin(theta), gamma from the means
  const int n_scan = 720;
  double best_theta = 0.0;
  double best_mse = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n_scan; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_scan;
    const double v = affine_mse(m, theta);
    if (v < best_mse) {
      best_mse = v;
      best_theta = theta;
    }
  }
  {
    // Newton on the stationarity condition f'(theta) = 0; the scan minimum
    // brackets the root, and the quadratic local model makes this converge
    // to machine precision (a ternary search would stall at sqrt(eps))
    auto fp = [&](double th) {
      const double c = std::cos(th), s = std::sin(th);
      return 2.0 * (s * m.cux - c * m.cut) + 2.0 * c * s * (m.ctt - m.cxx) +
             2.0 * (c * c - s * s) * m.cxt;
    };
    auto fpp = [&](double th) {
      const double c = std::cos(th), s = std::sin(th);
      return 2.0 * (c * m.cux + s * m.cut) +
             2.0 * (c * c - s * s) * (m.ctt - m.cxx) - 8.0 * c * s * m.cxt;
    };
    double theta = best_theta;
    for (int it = 0; it < 100; ++it) {
      const double d2 = fpp(theta);
      if (d2 == 0.0) break;
      const double step = fp(theta) / d2;
      theta -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // keep the refinement only if it actually improved the objective
    if (affine_mse(m, theta) <= affine_mse(m, best_theta)) best_theta = theta;
  }
  res.a = std::cos(best_theta);
  res.b = std::sin(best_theta);
  res.gamma = m.mu - res.a * m.mx - res.b * m.mt;
  double worst = 0.0;
  for (const auto& p : points)
    worst = std::max(worst,
                     std::abs(res.a * p[0] + res.b * p[1] + res.gamma - p[2]));
  res.affine_residual = worst;

  if (res.affine_residual <= threshold) { // ties break toward Affine
    res.kind = SolutionKind::Affine;
    res.fit_residual = res.affine_residual;
    res.implied_h = res.b != 0.0 ? res.a / res.b : 0.0;
    return res;
  }

  // --- cone branch: multistart Gauss-Newton over a coarse center grid plus
  // a few seed-jittered starts, both signs, fixed order
  ConeFit best;
  const int cg = std::max(2, options.coarse_grid);
  auto consider = [&](double x0, double t0) {
    for (int sign : {+1, -1}) {
      ConeFit f = gauss_newton_cone(points, x0, t0, sign, options.max_gn_iters);
      if (f.max_abs < best.max_abs) best = f;
    }
  };
  for (int j = 0; j < cg; ++j)
    for (int i = 0; i < cg; ++i)
      consider(m.min_x + (i + 0.5) * (m.max_x - m.min_x) / cg,
               m.min_t + (j + 0.5) * (m.max_t - m.min_t) / cg);
  SplitMix64 rng(options.seed);
  for (int k = 0; k < 4; ++k)
    consider(m.min_x + rng.next01() * (m.max_x - m.min_x),
             m.min_t + rng.next01() * (m.max_t - m.min_t));

  res.cone_residual = best.max_abs;
  if (best.max_abs <= threshold) {
    res.kind = SolutionKind::Cone;
    res.x0 = best.x0;
    res.t0 = best.t0;
    res.c = best.c;
    res.sign = best.sign;
    res.fit_residual = best.max_abs;
    return res;
  }

  res.kind = SolutionKind::Unclassified;
  res.fit_residual = std::min(res.affine_residual, res.cone_residual);
  return res;
}

ClassificationResult classify(const GridField& grid, const ClassifyOptions& options) {
  std::vector<std::array<double, 3>> pts;
  const Domain& d = grid.domain();
  pts.reserve(static_cast<std::size_t>(grid.valid_count()));
  for (int j = 0; j < d.nt; ++j)
    for (int i = 0; i < d.nx; ++i)
      if (grid.valid(i, j)) pts.push_back({d.x(i), d.t(j), grid.value(i, j)});
  return classify(std::span<const std::array<double, 3>>(pts), options);
}

ClassificationResult classify(const EikonalField& u, const Domain& domain,
                              const ClassifyOptions& options) {
  return classify(sample_eikonal(u, domain), options);
}

} // namespace burgeon
