#include "burgeon/transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "burgeon/quadrature.hpp"

namespace burgeon {

namespace {

std::string point_str(double x, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "(x=" << x << ", t=" << t << ")";
  return os.str();
}

} // namespace

double GraphCurve::slope(double x) const {
  if (p_prime) return p_prime(x);
  const double e = 6e-6 * std::max(1.0, std::abs(x));
  return (p(x + e) - p(x - e)) / (2.0 * e);
}

GraphCurve GraphCurve::flat(double t0, int label, std::string name) {
  GraphCurve g;
  g.p = [t0](double) { return t0; };
  g.p_prime = [](double) { return 0.0; };
  g.label = label;
  if (name.empty()) {
    std::ostringstream os;
    os << "flat(t=" << t0 << ")";
    name = os.str();
  }
  g.name = std::move(name);
  return g;
}

GraphCurve GraphCurve::sine(double offset, double amplitude, double frequency,
                            int label, std::string name) {
  GraphCurve g;
  g.p = [=](double x) { return offset + amplitude * std::sin(frequency * x); };
  g.p_prime = [=](double x) { return amplitude * frequency * std::cos(frequency * x); };
  g.label = label;
  if (name.empty()) {
    std::ostringstream os;
    os << "sine(" << offset << "+" << amplitude << "*sin(" << frequency << "x))";
    name = os.str();
  }
  g.name = std::move(name);
  return g;
}

int StripDecomposition::anchor_band() const {
  int n = 0;
  for (const auto& g : graphs)
    if (g.label < 0) ++n;
  return n;
}

void StripDecomposition::validate(double x_lo, double x_hi, int n_samples) const {
  const int ng = static_cast<int>(graphs.size());
  if (static_cast<int>(separators.size()) != ng + 1)
    throw Error("StripDecomposition: need exactly graphs+1 separators, got " +
                std::to_string(separators.size()) + " for " + std::to_string(ng) +
                " graphs");
  // labels: nonzero, strictly ascending, contiguous except the -1 -> 1 step
  for (int k = 0; k < ng; ++k) {
    if (graphs[k].label == 0) throw Error("StripDecomposition: graph label 0 is not allowed");
    if (k > 0) {
      const int prev = graphs[k - 1].label, cur = graphs[k].label;
      const int step = (prev == -1 && cur == 1) ? 2 : 1;
      if (cur - prev != step)
        throw Error("StripDecomposition: graph labels must ascend contiguously; got " +
                    std::to_string(prev) + " then " + std::to_string(cur));
    }
  }
  if (n_samples < 2) n_samples = 2;
  for (int s = 0; s < n_samples; ++s) {
    const double x = x_lo + s * (x_hi - x_lo) / (n_samples - 1);
    double below = separators[0].p(x);
    for (int k = 0; k < ng; ++k) {
      const double gv = graphs[k].p(x);
      const double above = separators[k + 1].p(x);
      if (!(below < gv)) {
        std::ostringstream os;
        os.precision(17);
        os << "StripDecomposition: separator '" << separators[k].name
           << "' does not stay below graph '" << graphs[k].name << "' at x=" << x;
        throw Error(os.str());
      }
      if (!(gv < above)) {
        std::ostringstream os;
        os.precision(17);
        os << "StripDecomposition: graph '" << graphs[k].name
           << "' does not stay below separator '" << separators[k + 1].name
           << "' at x=" << x;
        throw Error(os.str());
      }
      below = above;
    }
  }
}

// ---------------------------------------------------------------------------

struct EikonalField::Impl {
  bool is_transform = false;

  // direct mode
  Evaluator direct_u, direct_ux, direct_ut;
  Mask direct_mask;

  // transform mode
  SolutionField h;
  StripDecomposition strips;
  int anchor = 0;
  bool flat_bases = false; // g-integrals along horizontal lines (no slope term)
  double tol = 1e-10;

  Domain domain = Domain::desk_scale();
  std::string name;

  struct Column {
    std::vector<double> g;     // per band
    std::vector<double> delta; // per band (0 at the anchor)
  };
  mutable std::map<double, Column> cache;
  mutable std::mutex cache_mutex;

  int n_graphs() const { return static_cast<int>(strips.graphs.size()); }

  double h_at(double x, double t) const {
    if (h.is_singular(x, t))
      throw SingularPointError("transform: quadrature path hit the singular set at " +
                                   point_str(x, t),
                               x, t);
    const double v = h.rule(x, t);
    if (!std::isfinite(v))
      throw Error("transform: non-finite h at " + point_str(x, t));
    return v;
  }

  // t-quadrature from the band's separator up (or down) to t; the integrand
  // 1/sqrt(h^2+1) is bounded by 1, which is asserted on the result.
  double t_integral(int band, double x, double t) const {
    const double a = strips.separators[band].p(x);
    if (a == t) return 0.0;
    const double v = integrate_curve(
        [&](double s) {
          const double hv = h_at(x, s);
          return 1.0 / std::sqrt(hv * hv + 1.0);
        },
        a, t, tol);
    const double bound = std::abs(t - a) * (1.0 + 1e-9) + 1e-12;
    if (std::abs(v) > bound)
      throw Error("transform: |integrand| <= 1 bound violated at x=" +
                  std::to_string(x) + " (|I|=" + std::to_string(std::abs(v)) +
                  " > " + std::to_string(std::abs(t - a)) + ")");
    return v;
  }

  // g-integral along the band's separator from 0 to x. Flat bases use the
  // plain h/sqrt(h^2+1) integrand; curved separators add the slope term.
  double g_integral(int band, double x) const {
    if (x == 0.0) return 0.0;
    const GraphCurve& a = strips.separators[band];
    if (flat_bases) {
      const double t0 = a.p(0.0);
      return integrate_curve(
          [&](double s) {
            const double hv = h_at(s, t0);
            return hv / std::sqrt(hv * hv + 1.0);
          },
          0.0, x, tol);
    }
    return integrate_curve(
        [&](double s) {
          const double ts = a.p(s);
          const double hv = h_at(s, ts);
          return (hv + a.slope(s)) / std::sqrt(hv * hv + 1.0);
        },
        0.0, x, tol);
  }

  const Column& column(double x) const {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(x);
    if (it != cache.end()) return it->second;

    const int n = n_graphs();
    Column col;
    col.g.resize(n + 1);
    for (int b = 0; b <= n; ++b) col.g[b] = g_integral(b, x);
    col.delta.assign(n + 1, 0.0);
    // Glue upward from the anchor band, then downward. The two one-sided
    // primitives are compared a machine-scale nudge off the graph so the
    // quadratures never evaluate h on the graph itself (where the source may
    // jump or be masked); the nudge perturbs Delta by O(eta) < tol.
    for (int b = anchor + 1; b <= n; ++b) {
      const double y = strips.graphs[b - 1].p(x);
      const double eta = 1e-13 * (1.0 + std::abs(y));
      const double from_below =
          t_integral(b - 1, x, y - eta) + col.g[b - 1] + col.delta[b - 1];
      const double own = t_integral(b, x, y + eta) + col.g[b];
      col.delta[b] = from_below - own;
    }
    for (int b = anchor - 1; b >= 0; --b) {
      const double y = strips.graphs[b].p(x);
      const double eta = 1e-13 * (1.0 + std::abs(y));
      const double from_above =
          t_integral(b + 1, x, y + eta) + col.g[b + 1] + col.delta[b + 1];
      const double own = t_integral(b, x, y - eta) + col.g[b];
      col.delta[b] = from_above - own;
    }
    return cache.emplace(x, std::move(col)).first->second;
  }

  int band_of(double x, double t) const {
    const int n = n_graphs();
    int b = 0;
    while (b < n) {
      const double pv = strips.graphs[b].p(x);
      if (t > pv) {
        ++b;
        continue;
      }
      // on the graph itself, evaluate the anchor-side primitive
      if (t == pv && b < anchor) ++b;
      break;
    }
    return b;
  }

  double piece(int band, double x, double t) const {
    const Column& col = column(x);
    return t_integral(band, x, t) + col.g[band] + col.delta[band];
  }
};

// ---------------------------------------------------------------------------

double EikonalField::value(double x, double t) const {
  const Impl& im = *impl_;
  if (!im.is_transform) {
    if (im.direct_mask && im.direct_mask(x, t))
      throw SingularPointError("eikonal field undefined at " + point_str(x, t), x, t);
    return im.direct_u(x, t);
  }
  if (im.h.is_singular(x, t))
    throw SingularPointError("u is not defined on the singular set, at " + point_str(x, t),
                             x, t);
  return im.piece(im.band_of(x, t), x, t);
}

bool EikonalField::has_exact_gradients() const {
  const Impl& im = *impl_;
  return im.is_transform || (im.direct_ux && im.direct_ut);
}

double EikonalField::grad_x(double x, double t) const {
  const Impl& im = *impl_;
  if (im.is_transform) {
    const double hv = im.h_at(x, t);
    return hv / std::sqrt(hv * hv + 1.0);
  }
  if (!im.direct_ux) throw Error("eikonal field '" + im.name + "' has no exact gradients");
  return im.direct_ux(x, t);
}

double EikonalField::grad_t(double x, double t) const {
  const Impl& im = *impl_;
  if (im.is_transform) {
    const double hv = im.h_at(x, t);
    return 1.0 / std::sqrt(hv * hv + 1.0);
  }
  if (!im.direct_ut) throw Error("eikonal field '" + im.name + "' has no exact gradients");
  return im.direct_ut(x, t);
}

bool EikonalField::is_singular(double x, double t) const {
  const Impl& im = *impl_;
  if (im.is_transform) return im.h.is_singular(x, t);
  return im.direct_mask && im.direct_mask(x, t);
}

const Domain& EikonalField::domain() const { return impl_->domain; }
double EikonalField::quadrature_tol() const { return impl_->tol; }

const SolutionField* EikonalField::source() const {
  return impl_->is_transform ? &impl_->h : nullptr;
}

const StripDecomposition* EikonalField::strips() const {
  return impl_->is_transform ? &impl_->strips : nullptr;
}

int EikonalField::num_bands() const {
  return impl_->is_transform ? impl_->n_graphs() + 1 : 1;
}

int EikonalField::band_of(double x, double t) const {
  if (!impl_->is_transform) return 0;
  return impl_->band_of(x, t);
}

double EikonalField::piece_value(int band, double x, double t) const {
  const Impl& im = *impl_;
  if (!im.is_transform) throw Error("piece_value: not a transformed field");
  if (band < 0 || band > im.n_graphs()) throw Error("piece_value: band out of range");
  return im.piece(band, x, t);
}

double EikonalField::band_offset(int band, double x) const {
  const Impl& im = *impl_;
  if (!im.is_transform) throw Error("band_offset: not a transformed field");
  if (band < 0 || band > im.n_graphs()) throw Error("band_offset: band out of range");
  return im.column(x).delta[band];
}

double EikonalField::delta(int graph_label, double x) const {
  const Impl& im = *impl_;
  if (!im.is_transform) throw Error("delta: not a transformed field");
  if (graph_label == 0) throw Error("delta: graph label 0 does not exist");
  const int band = im.anchor + graph_label;
  const int gi = graph_label > 0 ? band - 1 : band;
  if (gi < 0 || gi >= im.n_graphs())
    throw Error("delta: no graph with label " + std::to_string(graph_label));
  return im.column(x).delta[band];
}

const std::string& EikonalField::name() const { return impl_->name; }

std::string EikonalField::piece_name(double x, double t) const {
  const Impl& im = *impl_;
  if (!im.is_transform) return "direct";
  const int n = im.n_graphs();
  const int b = im.band_of(x, t);
  const int a = im.anchor;
  auto omega = [](int k, char side) {
    std::ostringstream os;
    os << "Omega_" << k << side;
    return os.str();
  };
  if (n == 0) return omega(1, '+');
  if (b == a) {
    const bool above_sep = t >= im.strips.separators[b].p(x);
    if (above_sep || a == 0) return omega(1, '+');
    return omega(-1, '+');
  }
  if (b > a) {
    const int k = b - a;
    const bool above_sep = t > im.strips.separators[b].p(x);
    if (above_sep && b < n) return omega(k + 1, '+');
    return omega(k, '-');
  }
  const int k = b - a; // negative
  const bool below_sep = t < im.strips.separators[b].p(x);
  if (below_sep && b > 0) return omega(k - 1, '+');
  return omega(k, '-');
}

EikonalField EikonalField::direct(Evaluator u, Evaluator u_x, Evaluator u_t,
                                  Domain domain, Mask mask, std::string name) {
  auto impl = std::make_shared<Impl>();
  impl->is_transform = false;
  impl->direct_u = std::move(u);
  impl->direct_ux = std::move(u_x);
  impl->direct_ut = std::move(u_t);
  impl->direct_mask = std::move(mask);
  impl->domain = domain;
  impl->name = name.empty() ? "direct" : std::move(name);
  return EikonalField(std::move(impl));
}

namespace {

std::shared_ptr<const EikonalField::Impl>
make_transform_impl(const SolutionField& h, StripDecomposition strips,
                    bool flat_bases, double tol_quad) {
  if (!h.rule) throw Error("transform: source field has no rule");
  if (!(tol_quad > 0.0)) throw Error("transform: tol_quad must be positive");
  strips.validate(h.domain.x_min, h.domain.x_max);
  auto impl = std::make_shared<EikonalField::Impl>();
  impl->is_transform = true;
  impl->h = h;
  impl->strips = std::move(strips);
  impl->anchor = impl->strips.anchor_band();
  impl->flat_bases = flat_bases;
  impl->tol = tol_quad;
  impl->domain = h.domain;
  impl->name = "transform(" + h.name + ")";
  return impl;
}

} // namespace

EikonalField transform_simple(const SolutionField& h, const GraphCurve& graph,
                              double base_lo, double base_hi, double tol_quad) {
  if (!(base_lo < base_hi))
    throw Error("transform_simple: base_lo must lie below base_hi");
  StripDecomposition strips;
  GraphCurve g = graph;
  g.label = 1; // the simple construction anchors below the graph
  strips.graphs.push_back(std::move(g));
  strips.separators.push_back(GraphCurve::flat(base_lo));
  strips.separators.push_back(GraphCurve::flat(base_hi));
  return EikonalField(make_transform_impl(h, std::move(strips), true, tol_quad));
}

EikonalField transform_multistrip(const SolutionField& h,
                                  const StripDecomposition& strips,
                                  double tol_quad) {
  return EikonalField(make_transform_impl(h, strips, false, tol_quad));
}

std::vector<double> delta_profile(const EikonalField& field, int graph_label,
                                  const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(field.delta(graph_label, x));
  return out;
}

GridField sample_eikonal(const EikonalField& u, const Domain& domain) {
  GridField out(domain);
  for (int j = 0; j < domain.nt; ++j) {
    const double t = domain.t(j);
    for (int i = 0; i < domain.nx; ++i) {
      const double x = domain.x(i);
      if (u.is_singular(x, t)) {
        out.invalidate(i, j);
        continue;
      }
      out.set(i, j, u.value(x, t));
    }
  }
  return out;
}

void write_eikonal_csv(const EikonalField& u, const Domain& domain, std::ostream& os) {
  os << "x,t,value,valid,piece\n";
  os.precision(17);
  for (int j = 0; j < domain.nt; ++j) {
    const double t = domain.t(j);
    for (int i = 0; i < domain.nx; ++i) {
      const double x = domain.x(i);
      os << x << ',' << t << ',';
      if (u.is_singular(x, t))
        os << "nan,0,-\n";
      else
        os << u.value(x, t) << ",1," << u.piece_name(x, t) << '\n';
    }
  }
}

void write_delta_csv(const std::vector<double>& xs,
                     const std::vector<double>& deltas, std::ostream& os) {
  os << "x,delta\n";
  os.precision(17);
  for (std::size_t k = 0; k < xs.size() && k < deltas.size(); ++k)
    os << xs[k] << ',' << deltas[k] << '\n';
}

} // namespace burgeon
