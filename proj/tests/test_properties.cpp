// Property-style checks with a small seeded generator: each case runs the
// invariant over a few dozen random instances, deterministically.

#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "burgeon/catalog.hpp"
#include "burgeon/godunov.hpp"
#include "burgeon/quadrature.hpp"
#include "burgeon/singular.hpp"
#include "burgeon/transform.hpp"
#include "burgeon/verify.hpp"

using namespace burgeon;

namespace {

struct Gen {
  std::uint64_t state;
  explicit Gen(std::uint64_t seed) : state(seed) {}
  double next01() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }
};

} // namespace

TEST_CASE("property: quadrature is additive over split intervals") {
  Gen gen(1);
  const double tol = 1e-10;
  for (int trial = 0; trial < 40; ++trial) {
    const double w1 = gen.uniform(0.5, 2.0), w2 = gen.uniform(0.3, 1.5);
    const double a = gen.uniform(-3.0, 3.0);
    const double b = a + w1, c = b + w2;
    const double k = gen.uniform(0.5, 4.0), phase = gen.uniform(0.0, 6.28);
    auto f = [k, phase](double s) { return std::sin(k * s + phase) / std::sqrt(s * s + 9.0); };
    const double ab = integrate_curve(f, a, b, tol);
    const double bc = integrate_curve(f, b, c, tol);
    const double ac = integrate_curve(f, a, c, tol);
    CAPTURE(trial);
    CHECK(std::abs(ab + bc - ac) < 2.0 * tol);
  }
}

TEST_CASE("property: the transform integrand bound makes |T| <= |b - a|") {
  Gen gen(2);
  for (int trial = 0; trial < 30; ++trial) {
    const double amp = gen.uniform(0.0, 5.0), k = gen.uniform(0.2, 3.0);
    auto f = [amp, k](double s) {
      const double h = amp * std::sin(k * s);
      return 1.0 / std::sqrt(h * h + 1.0);
    };
    const double a = gen.uniform(-4.0, 0.0), b = a + gen.uniform(0.1, 5.0);
    const double v = integrate_curve(f, a, b, 1e-10);
    CAPTURE(trial);
    CHECK(std::abs(v) <= (b - a) + 1e-9);
  }
}

TEST_CASE("property: transformed constants satisfy the eikonal identity pointwise") {
  Gen gen(3);
  for (int trial = 0; trial < 12; ++trial) {
    const double c = gen.uniform(-6.0, 6.0);
    const EikonalField u = transform_simple(constant_solution(c),
                                            GraphCurve::sine(0.5, 0.1, 1.0, 1), 0.0, 1.0);
    for (int p = 0; p < 10; ++p) {
      const double x = gen.uniform(-4.0, 4.0), t = gen.uniform(-4.0, 4.0);
      const double gx = u.grad_x(x, t), gt = u.grad_t(x, t);
      CHECK(gx * gx + gt * gt == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("property: the interface flux is consistent and monotone") {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const double u = gen.uniform(-3.0, 3.0);
    CHECK(godunov_flux(u, u) == doctest::Approx(0.5 * u * u)); // consistency

    // monotone scheme: nondecreasing in the left state, nonincreasing in the
    // right state
    const double ul = gen.uniform(-3.0, 3.0), ur = gen.uniform(-3.0, 3.0);
    const double d = gen.uniform(0.0, 0.5);
    CHECK(godunov_flux(ul + d, ur) >= godunov_flux(ul, ur) - 1e-15);
    CHECK(godunov_flux(ul, ur + d) <= godunov_flux(ul, ur) + 1e-15);
  }
}

TEST_CASE("property: greedy premeasure points are pairwise separated") {
  Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<double, double>> pts;
    const int n = 50 + static_cast<int>(gen.uniform(0, 200));
    for (int i = 0; i < n; ++i)
      pts.emplace_back(gen.uniform(-2.0, 2.0), gen.uniform(-2.0, 2.0));
    const double eps = gen.uniform(0.05, 0.5);
    const auto pm = box_count(pts, {eps});
    REQUIRE(pm.size() == 1);
    const double count = pm[0].second / eps;
    // the count can never exceed the sample count, nor the packing bound of
    // the bounding box
    CHECK(count <= n);
    const double box = (4.0 + eps) * (4.0 + eps) / (eps * eps);
    CHECK(count <= 4.0 * box);
    // scaling: coarser eps never keeps more points
    const auto pm2 = box_count(pts, {2.0 * eps, eps});
    CHECK(pm2[0].second / (2.0 * eps) <= count);
  }
}

TEST_CASE("property: Oleinik reports are translation invariant") {
  Gen gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 120;
    std::vector<double> xs(n), us(n), xs_shift(n);
    const double shift = gen.uniform(-3.0, 3.0);
    for (int i = 0; i < n; ++i) {
      xs[i] = -2.0 + 4.0 * i / (n - 1);
      us[i] = std::sin(2.0 * xs[i]) + gen.uniform(-0.01, 0.01);
      xs_shift[i] = xs[i] + shift;
    }
    OleinikParams params;
    params.a_offsets = {0.2, 0.5};
    const ResidualReport a = check_oleinik_profile(xs, us, 1.0, params);
    const ResidualReport b = check_oleinik_profile(xs_shift, us, 1.0, params);
    CHECK(a.max_abs == doctest::Approx(b.max_abs).epsilon(1e-12));
    CHECK(a.n_points == b.n_points);
  }
}

TEST_CASE("property: delta profiles of smooth sources are flat for random graphs") {
  Gen gen(7);
  for (int trial = 0; trial < 8; ++trial) {
    const double offset = gen.uniform(0.3, 0.7);
    const double amp = gen.uniform(0.02, 0.15);
    const double freq = gen.uniform(0.5, 2.0);
    const GraphCurve g = GraphCurve::sine(offset, amp, freq, 1);
    const double c = gen.uniform(-3.0, 3.0);
    const EikonalField u = transform_simple(constant_solution(c), g, 0.0, 1.0);
    std::vector<double> xs;
    for (int k = 0; k < 40; ++k) xs.push_back(gen.uniform(-5.0, 5.0));
    const std::vector<double> deltas = delta_profile(u, 1, xs);
    const auto [lo, hi] = std::minmax_element(deltas.begin(), deltas.end());
    CAPTURE(trial);
    CHECK(*hi - *lo <= 1e-9);
  }
}
