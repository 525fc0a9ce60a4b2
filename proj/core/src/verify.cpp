#include "burgeon/verify.hpp"

#include <algorithm>
#include <cmath>

namespace burgeon {

namespace {

struct Accumulator {
  double max_abs = 0.0;
  double sum_sq = 0.0;
  long n = 0;
  double worst_x = 0.0, worst_t = 0.0;

  void add(double r, double x, double t) {
    const double a = std::abs(r);
    if (a > max_abs) {
      max_abs = a;
      worst_x = x;
      worst_t = t;
    }
    sum_sq += r * r;
    ++n;
  }

  void fill(ResidualReport& rep) const {
    rep.max_abs = max_abs;
    rep.l2 = n > 0 ? std::sqrt(sum_sq / n) : 0.0;
    rep.n_points = n;
    rep.worst_x = worst_x;
    rep.worst_t = worst_t;
  }
};

// Evaluates an exact partial on the grid; masked or non-finite nodes invalid.
GridField grid_from_evaluator(const Evaluator& f, const Mask& mask, const Domain& d) {
  GridField out(d);
  for (int j = 0; j < d.nt; ++j) {
    const double t = d.t(j);
    for (int i = 0; i < d.nx; ++i) {
      const double x = d.x(i);
      if (mask && mask(x, t)) {
        out.invalidate(i, j);
        continue;
      }
      const double v = f(x, t);
      out.set(i, j, v, std::isfinite(v));
    }
  }
  return out;
}

} // namespace

ResidualReport burgers_residual(const SolutionField& h, const Domain& domain,
                                bool use_exact, double tolerance) {
  ResidualReport rep;
  const bool exact = use_exact && h.has_exact_partials();
  rep.check_name = exact ? "burgers_residual" : "burgers_residual_fd";

  const GridField hg = sample(h, domain);
  const GridField hx = exact ? grid_from_evaluator(h.h_x, h.singular_mask, domain)
                             : diff_x(hg);
  const GridField ht = exact ? grid_from_evaluator(h.h_t, h.singular_mask, domain)
                             : diff_t(hg);

  Accumulator acc;
  for (int j = 0; j < domain.nt; ++j)
    for (int i = 0; i < domain.nx; ++i) {
      if (!hg.valid(i, j) || !hx.valid(i, j) || !ht.valid(i, j)) continue;
      const double r = ht.value(i, j) + hg.value(i, j) * hx.value(i, j);
      acc.add(r, domain.x(i), domain.t(j));
    }
  acc.fill(rep);
  rep.finish(tolerance);
  return rep;
}

ResidualReport eikonal_residual(const EikonalField& u, const Domain& domain,
                                bool use_exact, double tolerance) {
  ResidualReport rep;
  const bool exact = use_exact && u.has_exact_gradients();
  rep.check_name = exact ? "eikonal_residual" : "eikonal_residual_fd";

  Accumulator acc;
  if (exact) {
    for (int j = 0; j < domain.nt; ++j)
      for (int i = 0; i < domain.nx; ++i) {
        const double x = domain.x(i), t = domain.t(j);
        if (u.is_singular(x, t)) continue;
        const double ux = u.grad_x(x, t);
        const double ut = u.grad_t(x, t);
        acc.add(ux * ux + ut * ut - 1.0, x, t);
      }
  } else {
    const GridField ug = sample_eikonal(u, domain);
    const GridField ux = diff_x(ug);
    const GridField ut = diff_t(ug);
    for (int j = 0; j < domain.nt; ++j)
      for (int i = 0; i < domain.nx; ++i) {
        if (!ux.valid(i, j) || !ut.valid(i, j)) continue;
        const double gx = ux.value(i, j), gt = ut.value(i, j);
        acc.add(gx * gx + gt * gt - 1.0, domain.x(i), domain.t(j));
      }
  }
  acc.fill(rep);
  rep.finish(tolerance);
  return rep;
}

std::pair<ResidualReport, ResidualReport>
check_gradient_identities(const EikonalField& u, const Domain& domain,
                          double tolerance) {
  const SolutionField* h = u.source();
  if (!h) throw Error("check_gradient_identities: field carries no source h");

  const GridField ug = sample_eikonal(u, domain);
  const GridField ux = diff_x(ug);
  const GridField ut = diff_t(ug);

  Accumulator ax, at;
  for (int j = 0; j < domain.nt; ++j)
    for (int i = 0; i < domain.nx; ++i) {
      const double x = domain.x(i), t = domain.t(j);
      if (h->is_singular(x, t)) continue;
      const double hv = h->rule(x, t);
      const double root = std::sqrt(hv * hv + 1.0);
      if (ux.valid(i, j)) ax.add(ux.value(i, j) - hv / root, x, t);
      if (ut.valid(i, j)) at.add(ut.value(i, j) - 1.0 / root, x, t);
    }

  ResidualReport rx, rt;
  rx.check_name = "gradient_identity_ux";
  rt.check_name = "gradient_identity_ut";
  ax.fill(rx);
  at.fill(rt);
  rx.finish(tolerance);
  rt.finish(tolerance);
  return {rx, rt};
}

ResidualReport check_graph_matching(const EikonalField& u,
                                    const std::vector<double>& xs,
                                    double tol_fd) {
  const StripDecomposition* strips = u.strips();
  if (!strips) throw Error("check_graph_matching: not a transformed field");
  ResidualReport rep;
  rep.check_name = "graph_matching";

  // One-sided limits are taken from stencils recessed off the graph (depths
  // eps, 2 eps, 3 eps into each band) with quadratic extrapolation back to
  // the graph, so nothing is ever evaluated on the graph itself: the source
  // may jump or be masked there. eps balances the O(eps^2) truncation
  // against quadrature noise in the piece values.
  const double eps = std::cbrt(u.quadrature_tol());

  // quadratic extrapolation back to the graph from depths 1,2,3
  auto value_at_graph = [](double f1, double f2, double f3) {
    return 3.0 * f1 - 3.0 * f2 + f3;
  };

  Accumulator acc;
  for (int gi = 0; gi < static_cast<int>(strips->graphs.size()); ++gi) {
    const GraphCurve& g = strips->graphs[gi];
    for (double x : xs) {
      const double y = g.p(x);
      if (u.is_singular(x, y)) continue;
      const double sl = g.slope(x);
      double ut_side[2], ux_side[2];
      for (int side = 0; side < 2; ++side) {
        const int band = gi + side;                  // below, then above
        const double sgn = side == 0 ? -1.0 : 1.0;   // recession direction
        // compare the bare primitives: the gluing offset is built to absorb
        // any gradient jump into its own x-dependence, so it must not enter
        auto primitive = [&](double px, double pt) {
          return u.piece_value(band, px, pt) - u.band_offset(band, px);
        };
        double piece[3];
        for (int k = 1; k <= 3; ++k)
          piece[k - 1] = primitive(x, y + sgn * k * eps);
        // u_t at each recession depth from the recessed values themselves
        // (depth k maps to t = y + sgn*k*eps, so dt/dk = sgn*eps)
        const double ut_depth[3] = {
            (-3.0 * piece[0] + 4.0 * piece[1] - piece[2]) / (2.0 * sgn * eps),
            (piece[2] - piece[0]) / (2.0 * sgn * eps),
            (3.0 * piece[2] - 4.0 * piece[1] + piece[0]) / (2.0 * sgn * eps)};
        double ux_depth[3];
        for (int k = 1; k <= 3; ++k) {
          // d/dx u(x, p(x) + offset) = u_x + u_t p' on the offset curve
          const double along =
              (primitive(x + eps, g.p(x + eps) + sgn * k * eps) -
               primitive(x - eps, g.p(x - eps) + sgn * k * eps)) /
              (2.0 * eps);
          ux_depth[k - 1] = along - ut_depth[k - 1] * sl;
        }
        ut_side[side] = value_at_graph(ut_depth[0], ut_depth[1], ut_depth[2]);
        ux_side[side] = value_at_graph(ux_depth[0], ux_depth[1], ux_depth[2]);
      }
      const double disc = std::max(std::abs(ux_side[1] - ux_side[0]),
                                   std::abs(ut_side[1] - ut_side[0]));
      acc.add(disc, x, y);
    }
  }
  acc.fill(rep);
  rep.finish(10.0 * tol_fd);
  return rep;
}

namespace {

void validate_oleinik(const OleinikParams& p) {
  if (!(p.E > 0.0)) throw Error("check_oleinik: E must be positive");
  for (double t : p.t_samples)
    if (!(t > 0.0)) throw Error("check_oleinik: evaluation times must be positive");
  for (double a : p.a_offsets)
    if (!(a > 0.0)) throw Error("check_oleinik: offsets must be positive");
}

} // namespace

ResidualReport check_oleinik(const SolutionField& h, const Domain& domain,
                             const OleinikParams& params) {
  validate_oleinik(params);
  OleinikParams p = params;
  if (p.t_samples.empty()) p.t_samples = {1.0};
  if (p.a_offsets.empty()) {
    const double dx = domain.dx();
    p.a_offsets = {dx, 2 * dx, 4 * dx, 8 * dx, 16 * dx};
  }

  ResidualReport rep;
  rep.check_name = "oleinik";
  // max_abs holds the worst normalized quotient t*q/E; pass iff <= 1.
  bool any = false;
  double worst = 0.0, worst_x = 0.0, worst_t = 0.0;
  double sum_sq = 0.0;
  long n = 0;
  for (double t : p.t_samples) {
    for (double a : p.a_offsets) {
      for (int i = 0; i < domain.nx; ++i) {
        const double x = domain.x(i);
        if (x + a > domain.x_max) break;
        if (h.is_singular(x, t) || h.is_singular(x + a, t)) continue;
        const double q = (h.rule(x + a, t) - h.rule(x, t)) / a;
        const double norm = q * t / p.E;
        if (!any || norm > worst) {
          worst = norm;
          worst_x = x;
          worst_t = t;
          any = true;
        }
        const double pos = std::max(norm, 0.0);
        sum_sq += pos * pos;
        ++n;
      }
    }
  }
  rep.max_abs = any ? worst : 0.0;
  rep.l2 = n > 0 ? std::sqrt(sum_sq / n) : 0.0;
  rep.n_points = n;
  rep.worst_x = worst_x;
  rep.worst_t = worst_t;
  rep.finish(1.0);
  return rep;
}

std::vector<double> default_profile_offsets(double extent, double dx) {
  const double base = std::max(extent / 40.0, 8.0 * dx);
  return {base, 2.0 * base, 4.0 * base};
}

ResidualReport check_oleinik_profile(std::span<const double> xs,
                                     std::span<const double> us, double t,
                                     const OleinikParams& params) {
  if (!(t > 0.0)) throw Error("check_oleinik_profile: time must be positive");
  if (xs.size() != us.size() || xs.size() < 2)
    throw Error("check_oleinik_profile: mismatched or too-short profile");
  validate_oleinik(params);
  const double dx = xs[1] - xs[0];

  std::vector<double> offsets = params.a_offsets;
  if (offsets.empty()) offsets = default_profile_offsets(xs.back() - xs.front(), dx);

  std::vector<long> strides;
  for (double a : offsets) {
    const long k = std::max<long>(1, std::llround(a / dx));
    if (k < static_cast<long>(xs.size())) strides.push_back(k);
  }
  std::sort(strides.begin(), strides.end());
  strides.erase(std::unique(strides.begin(), strides.end()), strides.end());

  ResidualReport rep;
  rep.check_name = "oleinik";
  bool any = false;
  double worst = 0.0, worst_x = 0.0;
  double sum_sq = 0.0;
  long n = 0;
  for (long k : strides) {
    for (std::size_t i = 0; i + k < xs.size(); ++i) {
      const double q = (us[i + k] - us[i]) / (xs[i + k] - xs[i]);
      const double norm = q * t / params.E;
      if (!any || norm > worst) {
        worst = norm;
        worst_x = xs[i];
        any = true;
      }
      const double pos = std::max(norm, 0.0);
      sum_sq += pos * pos;
      ++n;
    }
  }
  rep.max_abs = any ? worst : 0.0;
  rep.l2 = n > 0 ? std::sqrt(sum_sq / n) : 0.0;
  rep.n_points = n;
  rep.worst_x = worst_x;
  rep.worst_t = t;
  rep.finish(1.0);
  return rep;
}

} // namespace burgeon
