#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "burgeon/error.hpp"

namespace burgeon {

using Evaluator = std::function<double(double, double)>;
using Mask = std::function<bool(double, double)>;

/// Rectangular space-time sampling window with a uniform grid.
/// x is the space coordinate, t the time coordinate.
struct Domain {
  double x_min, x_max;
  double t_min, t_max;
  int nx, nt;

  Domain(double x_min, double x_max, double t_min, double t_max, int nx, int nt);

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dt() const { return (t_max - t_min) / (nt - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double t(int j) const { return t_min + j * dt(); }
  double diameter() const;
  bool contains(double x, double t) const;
  bool contains(const Domain& other) const;

  /// The stock window used when nothing else is configured: [-5,5]^2, 401x401.
  static Domain desk_scale();
};

/// A scalar field h(x,t): a closed-form rule plus optional exact partial
/// derivatives and a predicate marking the singular set S where evaluation
/// is undefined.
struct SolutionField {
  Evaluator rule;
  Evaluator h_x;        // may be empty
  Evaluator h_t;        // may be empty
  Domain domain = Domain::desk_scale();
  Mask singular_mask;   // empty mask means S is empty
  std::string name;

  bool has_exact_partials() const { return static_cast<bool>(h_x) && static_cast<bool>(h_t); }
  bool is_singular(double x, double t) const { return singular_mask && singular_mask(x, t); }
  double operator()(double x, double t) const { return rule(x, t); }
};

/// Samples of a field on a Domain grid with a per-node validity mask.
/// Invalid nodes are points of S (or points a derivative stencil could not
/// reach); values there are unspecified and must not be read.
class GridField {
public:
  GridField(Domain domain, double fill = 0.0, bool valid = false);

  const Domain& domain() const { return dom_; }
  double value(int i, int j) const { return values_[idx(i, j)]; }
  bool valid(int i, int j) const { return validity_[idx(i, j)] != 0; }
  void set(int i, int j, double v, bool ok = true) {
    values_[idx(i, j)] = v;
    validity_[idx(i, j)] = ok ? 1 : 0;
  }
  void invalidate(int i, int j) { validity_[idx(i, j)] = 0; }

  long valid_count() const;

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * dom_.nx + i; }
  Domain dom_;
  std::vector<double> values_;
  std::vector<std::uint8_t> validity_;
};

/// Evaluates field.rule on the grid of `domain`. Nodes where the singular
/// mask holds become invalid; a non-finite value at a point the mask calls
/// valid is a hard error naming the point.
GridField sample(const SolutionField& field, const Domain& domain);

/// Second-order partial derivative in x (central interior, 3-point one-sided
/// at boundaries and next to invalid nodes). Output validity is false where
/// no stencil of valid nodes fits.
GridField diff_x(const GridField& grid);

/// Same as diff_x, in the t direction.
GridField diff_t(const GridField& grid);

/// CSV serialization: header `x,t,value,valid`, one record per node,
/// row-major in t then x.
void write_csv(const GridField& grid, std::ostream& os);

} // namespace burgeon
