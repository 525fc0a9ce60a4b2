#include "doctest.h"

#include <cmath>

#include "burgeon/quadrature.hpp"

using namespace burgeon;

TEST_CASE("constant integrand is exact") {
  auto one = [](double) { return 1.0; };
  CHECK(integrate_curve(one, 0.0, 1.0, 1e-10) == 1.0);
  CHECK(integrate_curve(one, 1.0, 0.0, 1e-10) == -1.0); // orientation
  CHECK(integrate_curve(one, 0.3, 0.3, 1e-10) == 0.0);
}

TEST_CASE("transform integrand has the closed-form asinh antiderivative") {
  // integral of 1/sqrt(s^2+1) on [0,1] = asinh(1)
  auto f = [](double s) { return 1.0 / std::sqrt(s * s + 1.0); };
  const double got = integrate_curve(f, 0.0, 1.0, 1e-12);
  CHECK(got == doctest::Approx(std::asinh(1.0)).epsilon(1e-11));
  CHECK(got == doctest::Approx(0.881373587).epsilon(1e-9));
}

TEST_CASE("interval additivity holds within 2 tol") {
  auto f = [](double s) { return std::exp(-s) * std::sin(3.0 * s); };
  const double tol = 1e-10;
  const double ab = integrate_curve(f, -1.0, 0.7, tol);
  const double bc = integrate_curve(f, 0.7, 2.3, tol);
  const double ac = integrate_curve(f, -1.0, 2.3, tol);
  CHECK(std::abs(ab + bc - ac) < 2.0 * tol);
}

TEST_CASE("oscillatory integrand converges to the exact value") {
  auto f = [](double s) { return std::cos(20.0 * s); };
  const double got = integrate_curve(f, 0.0, 2.0, 1e-12);
  CHECK(got == doctest::Approx(std::sin(40.0) / 20.0).epsilon(1e-10));
}

TEST_CASE("non-convergence carries the best estimate and the gap") {
  // a jump at an irrational point defeats dyadic Simpson at tight tolerance
  auto f = [](double s) { return s < 0.3183098861837907 ? 0.0 : 1.0; };
  try {
    integrate_curve(f, 0.0, 1.0, 1e-14);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.gap > 1e-14);
    CHECK(std::abs(e.best_estimate - (1.0 - 0.3183098861837907)) < 1e-3);
  }
}

TEST_CASE("non-finite integrand raises naming the point") {
  auto f = [](double s) { return 1.0 / (s - 0.5); };
  CHECK_THROWS_WITH_AS(integrate_curve(f, 0.0, 1.0, 1e-10),
                       doctest::Contains("non-finite"), Error);
}

TEST_CASE("tolerance must be positive") {
  CHECK_THROWS_AS(integrate_curve([](double) { return 1.0; }, 0.0, 1.0, 0.0), Error);
}
