#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "burgeon/fields.hpp"

namespace burgeon {

/// A differentiable graph t = p(x) with a signed label
/// (..., -2, -1, 1, 2, ...; 0 is not a graph).
struct GraphCurve {
  std::function<double(double)> p;
  std::function<double(double)> p_prime; // may be empty; falls back to FD
  int label = 1;
  std::string name;

  double slope(double x) const;

  static GraphCurve flat(double t0, int label = 1, std::string name = {});
  static GraphCurve sine(double offset, double amplitude, double frequency,
                         int label = 1, std::string name = {});
};

/// Ordered graphs p_i (i in Z \ {0}) interleaved with separator curves
/// a_l: one separator strictly between each adjacent pair of graphs, one
/// below the bottom graph, one above the top graph. separators.size() must
/// equal graphs.size() + 1.
struct StripDecomposition {
  std::vector<GraphCurve> graphs;     // ascending labels, ascending in t
  std::vector<GraphCurve> separators; // ascending in t, interleaved

  /// Band index of the separator that anchors the construction (the one
  /// between the negative- and positive-labeled graphs).
  int anchor_band() const;

  /// Checks labels and strict interleaving at sampled x; throws Error naming
  /// the offending pair of curves and the x where order fails.
  void validate(double x_lo, double x_hi, int n_samples = 65) const;
};

/// The transformed field u(x,t) with exact gradient evaluators, per-graph
/// gluing offsets Delta, and access to the per-strip primitives. Built by
/// transform_simple / transform_multistrip, or wraps a closed-form u
/// directly (EikonalField::direct). Immutable and cheap to copy.
class EikonalField {
public:
  /// Assembled u. For transformed fields this costs one t-quadrature plus
  /// cached per-column data; throws SingularPointError if a quadrature path
  /// hits the singular mask of the source off the declared graphs.
  double value(double x, double t) const;

  bool has_exact_gradients() const;
  double grad_x(double x, double t) const; // h/sqrt(h^2+1) for transforms
  double grad_t(double x, double t) const; // 1/sqrt(h^2+1)

  /// True where u is undefined (inherits the source field's singular mask).
  bool is_singular(double x, double t) const;

  const Domain& domain() const;
  double quadrature_tol() const;

  // strip structure (transformed fields only; null/empty otherwise)
  const SolutionField* source() const;
  const StripDecomposition* strips() const;
  int num_bands() const;
  int band_of(double x, double t) const;

  /// Analytic continuation of the band-`band` primitive u_k^(+/-) slightly
  /// past its band; used for one-sided gradient comparisons on graphs.
  double piece_value(int band, double x, double t) const;

  /// Gluing offset for the graph with the given signed label, evaluated
  /// pointwise (never assumed constant).
  double delta(int graph_label, double x) const;

  /// Accumulated gluing offset carried by a band's piece (0 at the anchor
  /// band). piece_value minus this is the band's bare primitive, whose
  /// one-sided gradients realize the graph-matching identities.
  double band_offset(int band, double x) const;

  /// Signed strip-piece name ("Omega_1+", "Omega_-2-", ...) at a point.
  std::string piece_name(double x, double t) const;

  static EikonalField direct(Evaluator u, Evaluator u_x, Evaluator u_t,
                             Domain domain, Mask mask = {}, std::string name = {});

  const std::string& name() const;

  struct Impl;

private:
  friend EikonalField transform_simple(const SolutionField&, const GraphCurve&,
                                       double, double, double);
  friend EikonalField transform_multistrip(const SolutionField&,
                                           const StripDecomposition&, double);
  explicit EikonalField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Single-graph construction with flat base lines t = base_lo and
/// t = base_hi enclosing the graph: u+ integrates from base_lo (g+ along
/// t = base_lo), u- from base_hi, and the two pieces are glued across the
/// graph by Delta(x) = u+(x,p(x)) - u-(x,p(x)).
EikonalField transform_simple(const SolutionField& h, const GraphCurve& graph,
                              double base_lo, double base_hi,
                              double tol_quad = 1e-10);

/// Countable-family construction: per-band primitives anchored at the
/// separator curves (g-integrals pick up the separator slope term), glued
/// upward and downward from the anchor band.
EikonalField transform_multistrip(const SolutionField& h,
                                  const StripDecomposition& strips,
                                  double tol_quad = 1e-10);

/// Delta_k sampled at xs for the graph with the given signed label.
std::vector<double> delta_profile(const EikonalField& field, int graph_label,
                                  const std::vector<double>& xs);

/// Samples assembled u on a grid; source-mask points become invalid.
GridField sample_eikonal(const EikonalField& u, const Domain& domain);

/// CSV: `x,t,value,valid,piece` (GridField schema plus the piece name).
void write_eikonal_csv(const EikonalField& u, const Domain& domain, std::ostream& os);

/// CSV: `x,delta`.
void write_delta_csv(const std::vector<double>& xs,
                     const std::vector<double>& deltas, std::ostream& os);

} // namespace burgeon
