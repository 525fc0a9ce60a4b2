#include "burgeon/characteristics.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace burgeon {

namespace {

struct Rhs {
  // returns nullopt when the query is masked / non-finite (trace truncates)
  std::function<std::optional<std::pair<double, double>>(double, double)> f;
  Domain domain = Domain::desk_scale();
  double pad_x = 0.0, pad_t = 0.0;
  CharSystem system = CharSystem::Burgers;
};

bool near_masked(const Mask& mask, double x, double t, double px, double pt) {
  if (!mask) return false;
  return mask(x, t) || mask(x + px, t) || mask(x - px, t) || mask(x, t + pt) ||
         mask(x, t - pt);
}

CharacteristicTrace run_rk4(const Rhs& rhs, double seed_x, double seed_t,
                            double tau_span, int n_steps) {
  CharacteristicTrace tr;
  tr.seed_x = seed_x;
  tr.seed_t = seed_t;
  tr.system = rhs.system;
  if (n_steps < 1) throw Error("trace_characteristic: n_steps must be >= 1");

  double x = seed_x, t = seed_t;
  tr.tau.push_back(0.0);
  tr.xs.push_back(x);
  tr.ts.push_back(t);
  const double h = tau_span / n_steps;

  for (int s = 0; s < n_steps; ++s) {
    auto k1 = rhs.f(x, t);
    if (!k1) { tr.truncated = true; tr.truncation_reason = "masked point"; break; }
    auto k2 = rhs.f(x + 0.5 * h * k1->first, t + 0.5 * h * k1->second);
    if (!k2) { tr.truncated = true; tr.truncation_reason = "masked point"; break; }
    auto k3 = rhs.f(x + 0.5 * h * k2->first, t + 0.5 * h * k2->second);
    if (!k3) { tr.truncated = true; tr.truncation_reason = "masked point"; break; }
    auto k4 = rhs.f(x + h * k3->first, t + h * k3->second);
    if (!k4) { tr.truncated = true; tr.truncation_reason = "masked point"; break; }
    const double nx = x + h / 6.0 * (k1->first + 2.0 * k2->first + 2.0 * k3->first + k4->first);
    const double nt = t + h / 6.0 * (k1->second + 2.0 * k2->second + 2.0 * k3->second + k4->second);
    if (!std::isfinite(nx) || !std::isfinite(nt)) {
      tr.truncated = true;
      tr.truncation_reason = "non-finite step";
      break;
    }
    if (!rhs.domain.contains(nx, nt)) {
      tr.truncated = true;
      tr.truncation_reason = "left domain";
      break;
    }
    if (!rhs.f(nx, nt)) {
      tr.truncated = true;
      tr.truncation_reason = "masked point";
      break;
    }
    x = nx;
    t = nt;
    tr.tau.push_back((s + 1) * h);
    tr.xs.push_back(x);
    tr.ts.push_back(t);
  }
  return tr;
}

CharacteristicTrace run_with_richardson(const Rhs& rhs, double seed_x,
                                        double seed_t, double tau_span,
                                        int n_steps) {
  CharacteristicTrace tr = run_rk4(rhs, seed_x, seed_t, tau_span, n_steps);
  if (!tr.truncated && tr.xs.size() > 1) {
    CharacteristicTrace half = run_rk4(rhs, seed_x, seed_t, tau_span, 2 * n_steps);
    if (!half.truncated)
      tr.richardson_gap = std::hypot(tr.xs.back() - half.xs.back(),
                                     tr.ts.back() - half.ts.back());
  }
  return tr;
}

} // namespace

double CharacteristicTrace::arclength() const {
  double s = 0.0;
  for (std::size_t k = 1; k < xs.size(); ++k)
    s += std::hypot(xs[k] - xs[k - 1], ts[k] - ts[k - 1]);
  return s;
}

CharacteristicTrace trace_characteristic(const SolutionField& field,
                                         double seed_x, double seed_t,
                                         double tau_span, int n_steps) {
  if (field.is_singular(seed_x, seed_t))
    throw Error("trace_characteristic: seed lies on the singular set");
  Rhs rhs;
  rhs.system = CharSystem::Burgers;
  rhs.domain = field.domain;
  const double px = field.domain.dx(), pt = field.domain.dt();
  rhs.f = [field, px, pt](double x, double t) -> std::optional<std::pair<double, double>> {
    if (near_masked(field.singular_mask, x, t, px, pt)) return std::nullopt;
    const double hv = field.rule(x, t);
    if (!std::isfinite(hv)) return std::nullopt;
    return std::make_pair(hv, 1.0);
  };
  return run_with_richardson(rhs, seed_x, seed_t, tau_span, n_steps);
}

CharacteristicTrace trace_characteristic(const EikonalField& field,
                                         double seed_x, double seed_t,
                                         double tau_span, int n_steps) {
  if (field.is_singular(seed_x, seed_t))
    throw Error("trace_characteristic: seed lies on the singular set");
  if (!field.has_exact_gradients())
    throw Error("trace_characteristic: eikonal field has no gradient evaluators");
  Rhs rhs;
  rhs.system = CharSystem::Eikonal;
  rhs.domain = field.domain();
  const double px = field.domain().dx(), pt = field.domain().dt();
  rhs.f = [field, px, pt](double x, double t) -> std::optional<std::pair<double, double>> {
    Mask m = [&field](double a, double b) { return field.is_singular(a, b); };
    if (near_masked(m, x, t, px, pt)) return std::nullopt;
    const double gx = field.grad_x(x, t);
    const double gt = field.grad_t(x, t);
    if (!std::isfinite(gx) || !std::isfinite(gt)) return std::nullopt;
    return std::make_pair(gx, gt);
  };
  return run_with_richardson(rhs, seed_x, seed_t, tau_span, n_steps);
}

std::vector<std::pair<double, double>>
resample_arclength(const CharacteristicTrace& trace, int n_samples) {
  std::vector<std::pair<double, double>> out;
  const std::size_t n = trace.xs.size();
  if (n == 0) return out;
  if (n == 1 || n_samples < 2) {
    out.emplace_back(trace.xs[0], trace.ts[0]);
    return out;
  }
  std::vector<double> cum(n, 0.0);
  for (std::size_t k = 1; k < n; ++k)
    cum[k] = cum[k - 1] + std::hypot(trace.xs[k] - trace.xs[k - 1],
                                     trace.ts[k] - trace.ts[k - 1]);
  const double total = cum.back();
  if (total == 0.0) {
    out.assign(n_samples, {trace.xs[0], trace.ts[0]});
    return out;
  }
  out.reserve(n_samples);
  std::size_t seg = 0;
  for (int m = 0; m < n_samples; ++m) {
    const double target = total * m / (n_samples - 1);
    while (seg + 1 < n - 1 && cum[seg + 1] < target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double w = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    out.emplace_back(trace.xs[seg] + w * (trace.xs[seg + 1] - trace.xs[seg]),
                     trace.ts[seg] + w * (trace.ts[seg + 1] - trace.ts[seg]));
  }
  return out;
}

double hausdorff_distance(const std::vector<std::pair<double, double>>& a,
                          const std::vector<std::pair<double, double>>& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        const double d = std::hypot(p.first - q.first, p.second - q.second);
        if (d < best) best = d;
      }
      if (best > worst) worst = best;
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

double trace_coincidence(const SolutionField& h, const EikonalField& u,
                         double seed_x, double seed_t, double tau_span,
                         int n_steps, int n_samples) {
  const CharacteristicTrace tb = trace_characteristic(h, seed_x, seed_t, tau_span, n_steps);
  // the eikonal system moves at unit speed, so tau there is arclength;
  // match the Burgers trace's arclength to compare equal path extents
  const double len = tb.arclength();
  const CharacteristicTrace te =
      trace_characteristic(u, seed_x, seed_t, len, n_steps);
  return hausdorff_distance(resample_arclength(tb, n_samples),
                            resample_arclength(te, n_samples));
}

} // namespace burgeon
