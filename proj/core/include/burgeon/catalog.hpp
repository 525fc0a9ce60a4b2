#pragma once

#include <functional>
#include <map>
#include <string>

#include "burgeon/fields.hpp"

namespace burgeon {

/// Parameters of the cone-induced field h(x,t) = (x - x0)/(t - t0),
/// singular on the line {t = t0}.
struct ConeInducedParams {
  double x0 = 0.0;
  double t0 = 0.0;
};

/// Left/right states of a jump initially at x = 0.
struct RiemannData {
  double u_left = 1.0;
  double u_right = 0.0;
};

/// General characteristic speed c(v) with its derivative and antiderivative
/// (C' = c). The lift only uses c and c'; C documents the divergence form.
struct FluxSpec {
  std::function<double(double)> c;
  std::function<double(double)> c_prime;
  std::function<double(double)> C;
  std::string name;
};

SolutionField constant_solution(double c);
SolutionField cone_induced_solution(ConeInducedParams p);

/// h(x,t) = x/t on the half plane t >= t_floor (t_floor > 0). Evaluation
/// below t_floor is masked: the field does not extend to the whole plane.
SolutionField rarefaction_solution(double t_floor);

/// Exact entropy solution of the Riemann problem for flux u^2/2: a shock
/// along x = t(ul+ur)/2 when ul > ur, a rarefaction fan otherwise.
/// Defined for t > 0 (except ul == ur, which is constant everywhere).
SolutionField riemann_entropy_solution(RiemannData d);

/// Steady expansion jump (ul for x < 0, ur for x > 0 at all times,
/// ul < ur): a weak but non-entropy profile used to exercise the Oleinik
/// checker's failure path.
SolutionField expansion_jump_solution(RiemannData d);

/// v(x,t) = ln(x/t) on the quadrant x,t > 0; solves v_t + e^v v_x = 0, so
/// lifting it through the exponential flux reproduces the rarefaction fan.
SolutionField log_fan_solution();

/// Note-1 lift: h = c(v) with partials by the chain rule. Requires c' to be
/// nonzero on the (sampled) range of v_field.
SolutionField lift_flux(const SolutionField& v_field, const FluxSpec& flux);

/// Built-in fluxes: "identity", "exp", "square".
FluxSpec flux_by_name(const std::string& name);

/// Parses the flat micro-grammar `name:key=value,key=value`, e.g.
/// `constant:c=3`, `cone:x0=0,t0=0`, `rarefaction:tfloor=0.5`,
/// `riemann:ul=1,ur=0`, `expansion:ul=-1,ur=1`, `logfan`,
/// `lifted:flux=exp,base=logfan`. Unknown names or keys raise UsageError.
SolutionField field_from_spec(const std::string& spec);

/// Splits `name:key=value,...` into its name and key/value map.
std::pair<std::string, std::map<std::string, std::string>>
parse_spec_string(const std::string& spec);

} // namespace burgeon
