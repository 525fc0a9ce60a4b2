#include "doctest.h"

#include <cmath>

#include "burgeon/catalog.hpp"
#include "burgeon/transform.hpp"
#include "burgeon/verify.hpp"

using namespace burgeon;

TEST_CASE("burgers_residual: constants, cone oracle, non-solution") {
  const Domain d(-5.0, 5.0, -5.0, 5.0, 101, 101);

  const ResidualReport rc = burgers_residual(constant_solution(3.0), d, true, 1e-14);
  CHECK(rc.max_abs == 0.0);
  CHECK(rc.passed);

  const ResidualReport rk =
      burgers_residual(cone_induced_solution({0.0, 0.0}), d, true, 1e-12);
  CHECK(rk.passed);
  CHECK(rk.n_points < 101L * 101L); // the masked row is excluded

  // h(x,t) = x is not a solution: residual field equals x
  SolutionField lin;
  lin.rule = [](double x, double) { return x; };
  lin.h_x = [](double, double) { return 1.0; };
  lin.h_t = [](double, double) { return 0.0; };
  lin.domain = d;
  lin.name = "linear-x";
  const ResidualReport rl = burgers_residual(lin, d, true, 1e-12);
  CHECK_FALSE(rl.passed);
  CHECK(rl.max_abs == doctest::Approx(5.0)); // sup |x| on the domain
  CHECK(std::abs(rl.worst_x) == doctest::Approx(5.0));
  CHECK(rl.l2 == doctest::Approx(5.0 / std::sqrt(3.0)).epsilon(0.01)); // RMS of x
}

TEST_CASE("burgers_residual falls back to finite differences") {
  const Domain d(-2.0, 2.0, -2.0, 2.0, 201, 201);
  SolutionField f; // smooth non-solution without exact partials
  f.rule = [](double x, double t) { return std::sin(x) + 0.1 * t; };
  f.domain = d;
  const ResidualReport rep = burgers_residual(f, d, true, 1e-3);
  CHECK(rep.check_name == "burgers_residual_fd");
  // residual = 0.1 + (sin x + 0.1 t) cos x, definitely nonzero
  CHECK(rep.max_abs > 0.5);
}

TEST_CASE("eikonal_residual: direct cone solution and a non-solution plane") {
  const Domain d(2.0, 5.0, 2.0, 5.0, 41, 41);
  const EikonalField cone = EikonalField::direct(
      [](double x, double t) { return std::sqrt(x * x + t * t); },
      [](double x, double t) { return x / std::sqrt(x * x + t * t); },
      [](double x, double t) { return t / std::sqrt(x * x + t * t); }, d);
  const ResidualReport rc = eikonal_residual(cone, d, true, 1e-13);
  CHECK(rc.passed); // (3/5)^2 + (4/5)^2 = 1 exactly at (3,4)

  const EikonalField plane = EikonalField::direct(
      [](double x, double t) { return x + t; },
      [](double, double) { return 1.0; }, [](double, double) { return 1.0; }, d);
  const ResidualReport rp = eikonal_residual(plane, d, true, 1e-13);
  CHECK_FALSE(rp.passed);
  CHECK(rp.max_abs == doctest::Approx(1.0)); // 1 + 1 - 1
  CHECK(rp.l2 == doctest::Approx(1.0));
}

TEST_CASE("gradient identities against the source field") {
  SUBCASE("zero field: u_x = 0, u_t = 1 exactly") {
    const EikonalField u = transform_simple(
        constant_solution(0.0), GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
    const Domain d(-3.0, 3.0, -1.0, 2.0, 61, 61);
    auto [rx, rt] = check_gradient_identities(u, d, 1e-9);
    CHECK(rx.passed);
    CHECK(rt.passed);
  }
  SUBCASE("unit field: u_x = 1/sqrt(2) within tolerance") {
    const EikonalField u = transform_simple(
        constant_solution(1.0), GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
    const Domain d(-3.0, 3.0, -1.0, 2.0, 61, 61);
    auto [rx, rt] = check_gradient_identities(u, d, 1e-9);
    CHECK(rx.passed);
    CHECK(rt.passed);
  }
  SUBCASE("cone strip: u_t matches the antiderivative oracle") {
    const EikonalField u = transform_simple(
        cone_induced_solution({0.0, 2.0}), GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
    const Domain d(-3.0, 3.0, 0.0, 1.0, 121, 81);
    auto [rx, rt] = check_gradient_identities(u, d, 5e-3);
    CHECK(rx.passed);
    CHECK(rt.passed);
    // spot value of the identity target
    const double x = 1.0, t = 0.5;
    CHECK(u.grad_t(x, t) ==
          doctest::Approx((2.0 - t) / std::sqrt(x * x + (t - 2.0) * (t - 2.0))));
  }
}

TEST_CASE("graph matching: smooth sources agree, a genuine jump is detected") {
  const GraphCurve p = GraphCurve::sine(0.5, 0.1, 1.0, 1, "p1");
  std::vector<double> xs;
  for (int k = 0; k < 21; ++k) xs.push_back(-2.0 + 4.0 * k / 20.0);

  SUBCASE("constant source") {
    const EikonalField u = transform_simple(constant_solution(2.0), p, 0.0, 1.0);
    const ResidualReport rep = check_graph_matching(u, xs, 1e-4);
    CHECK(rep.passed); // tolerance is 10*tol_fd
  }
  SUBCASE("smooth non-constant source across the graph") {
    const EikonalField u =
        transform_simple(cone_induced_solution({0.0, 3.0}), p, 0.0, 1.0);
    const ResidualReport rep = check_graph_matching(u, xs, 1e-4);
    CHECK(rep.passed);
  }
  SUBCASE("piecewise-constant jump across the graph") {
    // h = 0 below the graph, 1 above: u_x jumps by |0 - 1/sqrt(2)|
    SolutionField jump;
    const GraphCurve pc = p;
    jump.rule = [pc](double x, double t) { return t < pc.p(x) ? 0.0 : 1.0; };
    jump.domain = Domain(-5.0, 5.0, -5.0, 5.0, 101, 101);
    jump.name = "graph-jump";
    const EikonalField u = transform_simple(jump, pc, 0.0, 1.0);
    const ResidualReport rep = check_graph_matching(u, xs, 1e-4);
    CHECK_FALSE(rep.passed);
    CHECK(rep.max_abs > 0.5); // bounded away from zero
    CHECK(rep.max_abs == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.05));
  }
}

TEST_CASE("oleinik: constants pass, the exact fan has margin, expansion fails") {
  OleinikParams params;
  params.E = 1.05;
  params.t_samples = {1.0};
  params.a_offsets = {0.025, 0.05, 0.1};
  const Domain d(-5.0, 5.0, 0.5, 5.0, 201, 11);

  const ResidualReport rc = check_oleinik(constant_solution(7.0), d, params);
  CHECK(rc.passed);
  CHECK(rc.max_abs == 0.0);

  OleinikParams pr = params;
  pr.t_samples = {1.0, 2.0, 4.0};
  const ResidualReport rr = check_oleinik(rarefaction_solution(0.5), d, pr);
  CHECK(rr.passed);
  CHECK(rr.max_abs == doctest::Approx(1.0 / 1.05)); // quotient exactly 1/t

  const ResidualReport re = check_oleinik(expansion_jump_solution({-1.0, 1.0}),
                                          Domain(-5.0, 5.0, -5.0, 5.0, 201, 11), params);
  CHECK_FALSE(re.passed);
  // grid xs straddle the jump first at a = dx = 0.05: quotient 2/0.05 = 40
  CHECK(re.max_abs == doctest::Approx(40.0 / 1.05));
  CHECK(re.worst_x == doctest::Approx(-0.05));

  OleinikParams bad;
  bad.t_samples = {-1.0};
  CHECK_THROWS_AS(check_oleinik(constant_solution(0.0), d, bad), Error);
}

TEST_CASE("oleinik profile version snaps offsets to the grid") {
  std::vector<double> xs, us;
  for (int i = 0; i <= 100; ++i) {
    xs.push_back(-1.0 + 0.02 * i);
    us.push_back(xs.back() / 2.0); // slope 1/2 at t = 1
  }
  OleinikParams params;
  params.E = 1.05;
  params.a_offsets = {0.1};
  const ResidualReport rep = check_oleinik_profile(xs, us, 1.0, params);
  CHECK(rep.passed);
  CHECK(rep.max_abs == doctest::Approx(0.5 / 1.05));
}
