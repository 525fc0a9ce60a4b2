#include "doctest.h"

#include <cmath>
#include <sstream>

#include "burgeon/catalog.hpp"
#include "burgeon/fields.hpp"

using namespace burgeon;

TEST_CASE("Domain invariants are enforced") {
  CHECK_THROWS_AS(Domain(1.0, 1.0, 0.0, 1.0, 5, 5), Error);
  CHECK_THROWS_AS(Domain(0.0, 1.0, 1.0, 0.0, 5, 5), Error);
  CHECK_THROWS_AS(Domain(0.0, 1.0, 0.0, 1.0, 2, 5), Error);
  const Domain d = Domain::desk_scale();
  CHECK(d.dx() == doctest::Approx(0.025));
  CHECK(d.x(0) == -5.0);
  CHECK(d.x(d.nx - 1) == doctest::Approx(5.0));
}

TEST_CASE("sample: constant field fills the grid") {
  const Domain d(-1.0, 1.0, -1.0, 1.0, 11, 11);
  const GridField g = sample(constant_solution(5.0), d);
  CHECK(g.valid_count() == 121);
  for (int j = 0; j < d.nt; ++j)
    for (int i = 0; i < d.nx; ++i) CHECK(g.value(i, j) == 5.0);
}

TEST_CASE("sample: cone-induced field and its singular row") {
  SolutionField f = cone_induced_solution({1.0, 2.0});
  CHECK(f.rule(3.0, 4.0) == doctest::Approx(1.0));

  // grid hitting t = 2 exactly: that row must be invalid, all others valid
  const Domain d(-1.0, 3.0, 0.0, 4.0, 5, 5);
  const GridField g = sample(f, d);
  for (int i = 0; i < d.nx; ++i) {
    CHECK_FALSE(g.valid(i, 2)); // t = 2
    CHECK(g.valid(i, 0));
    CHECK(g.valid(i, 4));
  }
}

TEST_CASE("sample: non-finite value at an unmasked point is a hard error") {
  SolutionField f;
  f.rule = [](double x, double) { return 1.0 / x; }; // blows at x=0, no mask
  f.domain = Domain(-1.0, 1.0, 0.0, 1.0, 3, 3);
  CHECK_THROWS_WITH_AS(sample(f, f.domain),
                       doctest::Contains("non-finite"), Error);
}

TEST_CASE("diff stencils are exact on affine and quadratic data") {
  const Domain d(-2.0, 2.0, -2.0, 2.0, 17, 17);
  SolutionField fx;
  fx.rule = [](double x, double) { return x; };
  fx.domain = d;
  const GridField gx = diff_x(sample(fx, d));
  for (int j = 0; j < d.nt; ++j)
    for (int i = 0; i < d.nx; ++i) CHECK(gx.value(i, j) == doctest::Approx(1.0));

  SolutionField fq;
  fq.rule = [](double x, double) { return x * x; };
  fq.domain = d;
  const GridField gq = diff_x(sample(fq, d));
  // central and one-sided 3-point stencils are both exact on quadratics
  const int i2 = 16; // x = 2 (boundary, one-sided)
  CHECK(gq.value(i2, 3) == doctest::Approx(4.0));
  CHECK(gq.value(8, 3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("diff_x of sin(x) matches cos within the Taylor remainder bound") {
  // dx = 1e-2, remainder (dx^2/6) max|h'''| = 1e-4/6
  const Domain d(-0.5, 0.5, 0.0, 1.0, 101, 3);
  SolutionField f;
  f.rule = [](double x, double) { return std::sin(x); };
  f.domain = d;
  const GridField g = diff_x(sample(f, d));
  const int i0 = 50; // x = 0
  CHECK(std::abs(g.value(i0, 1) - 1.0) < 1e-4);
}

TEST_CASE("diff convergence order is at least 1.9 on a smooth field") {
  auto worst_err = [](int n) {
    const Domain d(-1.0, 1.0, -1.0, 1.0, n, 5);
    SolutionField f;
    f.rule = [](double x, double t) { return std::sin(2.0 * x) + 0.3 * t; };
    f.domain = d;
    const GridField g = diff_x(sample(f, d));
    double worst = 0.0;
    for (int j = 0; j < d.nt; ++j)
      for (int i = 0; i < d.nx; ++i)
        worst = std::max(worst,
                         std::abs(g.value(i, j) - 2.0 * std::cos(2.0 * d.x(i))));
    return worst;
  };
  const double e1 = worst_err(51), e2 = worst_err(101);
  const double order = std::log(e1 / e2) / std::log(2.0);
  CHECK(order >= 1.9);
}

TEST_CASE("invalid cells poison derivative stencils instead of extrapolating") {
  const Domain d(0.0, 1.0, 0.0, 1.0, 11, 3);
  GridField g(d);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 11; ++i) g.set(i, j, d.x(i) * d.x(i));
  g.invalidate(5, 1);
  const GridField dg = diff_x(g);
  CHECK_FALSE(dg.valid(5, 1));        // the hole itself
  CHECK(dg.valid(4, 1));              // one-sided away from the hole
  CHECK(dg.value(4, 1) == doctest::Approx(2.0 * d.x(4)));
  CHECK(dg.valid(5, 0));              // other rows untouched
}

TEST_CASE("GridField CSV is row-major in t then x with the fixed header") {
  const Domain d(0.0, 1.0, 10.0, 11.0, 3, 3);
  GridField g(d, 0.0, true);
  std::ostringstream os;
  write_csv(g, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,t,value,valid");
  std::getline(is, line);
  CHECK(line == "0,10,0,1"); // first record: x_min at t_min
  std::getline(is, line);
  CHECK(line == "0.5,10,0,1"); // x varies fastest
}
