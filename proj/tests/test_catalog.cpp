#include "doctest.h"

#include <cmath>

#include "burgeon/catalog.hpp"
#include "burgeon/verify.hpp"

using namespace burgeon;

TEST_CASE("constant solution: values, partials, transform gradient") {
  const SolutionField f = constant_solution(3.0);
  CHECK(f.rule(7.2, -4.0) == 3.0);
  CHECK(f.h_x(1.0, 1.0) == 0.0);
  CHECK(f.h_t(1.0, 1.0) == 0.0);
  CHECK_FALSE(f.is_singular(0.0, 0.0));
  // u_t = 1/sqrt(h^2+1) = 1/sqrt(10) everywhere for the transformed field
  CHECK(1.0 / std::sqrt(f.rule(0, 0) * f.rule(0, 0) + 1.0) ==
        doctest::Approx(1.0 / std::sqrt(10.0)));
}

TEST_CASE("cone-induced solution: hand-differentiated oracle") {
  const SolutionField f = cone_induced_solution({0.0, 0.0});
  CHECK(f.rule(2.0, 1.0) == doctest::Approx(2.0));
  CHECK(f.h_t(2.0, 1.0) == doctest::Approx(-2.0));
  CHECK(f.h_x(2.0, 1.0) == doctest::Approx(1.0));
  // Burgers residual h_t + h h_x = -2 + 2*1 = 0
  CHECK(f.h_t(2.0, 1.0) + f.rule(2.0, 1.0) * f.h_x(2.0, 1.0) ==
        doctest::Approx(0.0));

  const SolutionField g = cone_induced_solution({1.0, 2.0});
  CHECK(g.rule(1.0, 5.0) == 0.0);   // on the axis x = x0
  CHECK(g.is_singular(0.3, 2.0));   // the line t = t0
  CHECK_FALSE(g.is_singular(0.3, 2.0 + 1e-12));
}

TEST_CASE("rarefaction solution: values, residual, Oleinik ratio") {
  const SolutionField f = rarefaction_solution(0.5);
  CHECK(f.rule(0.0, 1.0) == 0.0);
  CHECK(f.rule(2.0, 4.0) == doctest::Approx(0.5));
  CHECK(f.h_t(2.0, 4.0) + f.rule(2.0, 4.0) * f.h_x(2.0, 4.0) ==
        doctest::Approx(0.0)); // -x/t^2 + (x/t)(1/t)
  CHECK(f.is_singular(0.0, 0.49));
  CHECK_FALSE(f.is_singular(0.0, 0.5));
  // linear-in-x profile: the quotient is exactly 1/t for every offset
  const double t = 2.0, a = 0.37, x = -1.2;
  CHECK((f.rule(x + a, t) - f.rule(x, t)) / a == doctest::Approx(1.0 / t));
  CHECK_THROWS_AS(rarefaction_solution(0.0), Error);
}

TEST_CASE("Riemann entropy solution: shock and fan branches") {
  const SolutionField shock = riemann_entropy_solution({1.0, 0.0});
  CHECK(shock.rule(0.4, 1.0) == 1.0);  // left of the shock at x = t/2
  CHECK(shock.rule(0.6, 1.0) == 0.0);
  CHECK(shock.is_singular(0.5, 1.0));  // on the shock line
  CHECK(shock.is_singular(0.0, -1.0)); // not defined for t <= 0

  const SolutionField fan = riemann_entropy_solution({0.0, 1.0});
  CHECK(fan.rule(0.5, 1.0) == doctest::Approx(0.5)); // inside the fan
  CHECK(fan.rule(-0.1, 1.0) == 0.0);
  CHECK(fan.rule(1.2, 1.0) == 1.0);

  const SolutionField flat = riemann_entropy_solution({2.0, 2.0});
  CHECK(flat.rule(3.0, -7.0) == 2.0); // no jump: constant everywhere
  CHECK_FALSE(flat.is_singular(0.0, -1.0));
}

TEST_CASE("expansion jump is steady and expansive") {
  const SolutionField f = expansion_jump_solution({-1.0, 1.0});
  CHECK(f.rule(-0.01, 5.0) == -1.0);
  CHECK(f.rule(0.01, -5.0) == 1.0);
  CHECK_THROWS_AS(expansion_jump_solution({1.0, 0.0}), Error);
}

TEST_CASE("lift_flux: identity flux returns the same field") {
  const SolutionField base = rarefaction_solution(0.5);
  const SolutionField lifted = lift_flux(base, flux_by_name("identity"));
  CHECK(lifted.rule(1.0, 2.0) == base.rule(1.0, 2.0));
  CHECK(lifted.h_x(1.0, 2.0) == doctest::Approx(base.h_x(1.0, 2.0)));
}

TEST_CASE("lift_flux: exponential flux turns ln(x/t) into the fan") {
  const SolutionField h = lift_flux(log_fan_solution(), flux_by_name("exp"));
  CHECK(h.rule(1.0, 2.0) == doctest::Approx(0.5));
  CHECK(h.rule(3.0, 1.5) == doctest::Approx(2.0));
  // Burgers residual through the chain rule
  const Domain d(0.1, 5.0, 0.1, 5.0, 101, 101);
  const ResidualReport rep = burgers_residual(h, d, true, 1e-10);
  CHECK(rep.passed);
  CHECK(rep.max_abs <= 1e-10);
}

TEST_CASE("lift_flux: constant base maps to the constant c(k)") {
  const SolutionField h = lift_flux(constant_solution(2.0), flux_by_name("exp"));
  CHECK(h.rule(-3.0, 4.0) == doctest::Approx(std::exp(2.0)));
  CHECK(h.h_x(-3.0, 4.0) == 0.0);
}

TEST_CASE("lift_flux rejects a flux whose speed derivative vanishes on the range") {
  // square flux has c'(v) = 2v, and the rarefaction range includes v = 0
  CHECK_THROWS_WITH_AS(lift_flux(rarefaction_solution(0.5), flux_by_name("square")),
                       doctest::Contains("c' vanishes"), Error);
}

TEST_CASE("field specs: the flat micro-grammar") {
  CHECK(field_from_spec("constant:c=3").rule(0, 0) == 3.0);
  CHECK(field_from_spec("cone:x0=1,t0=2").rule(3, 4) == doctest::Approx(1.0));
  CHECK(field_from_spec("rarefaction:tfloor=0.5").rule(1, 2) == doctest::Approx(0.5));
  CHECK(field_from_spec("riemann:ul=1,ur=0").rule(0.4, 1.0) == 1.0);
  CHECK(field_from_spec("lifted:flux=exp,base=logfan").rule(1.0, 2.0) ==
        doctest::Approx(0.5));
  CHECK(field_from_spec("lifted:flux=exp,base=constant,c=1").rule(0, 0) ==
        doctest::Approx(std::exp(1.0)));

  CHECK_THROWS_AS(field_from_spec("nosuch:a=1"), UsageError);
  CHECK_THROWS_AS(field_from_spec("constant:q=3"), UsageError);
  CHECK_THROWS_AS(field_from_spec("constant:c=abc"), UsageError);
  CHECK_THROWS_AS(field_from_spec("constant:c"), UsageError);
  CHECK_THROWS_AS(field_from_spec(""), UsageError);
  CHECK_THROWS_AS(field_from_spec("lifted:flux=exp"), UsageError);
}

TEST_CASE("catalog exact partials agree with finite differences at order >= 1.9") {
  for (const auto* spec : {"cone:x0=0,t0=0", "rarefaction:tfloor=0.5",
                           "lifted:flux=exp,base=logfan"}) {
    const SolutionField f = field_from_spec(spec);
    // probe the t-partial (nonlinear in t for all three) away from S
    const double x = 1.3, t = 1.7;
    auto fd_err = [&](double e) {
      const double fd = (f.rule(x, t + e) - f.rule(x, t - e)) / (2.0 * e);
      return std::abs(fd - f.h_t(x, t));
    };
    const double e1 = fd_err(1e-2), e2 = fd_err(5e-3);
    const double order = std::log(e1 / e2) / std::log(2.0);
    CAPTURE(spec);
    CHECK(order >= 1.9);
  }
}
