#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "fraccore/grid.hpp"
#include "fraccore/operators.hpp"
#include "fraccore/specfun.hpp"
#include "oracles.hpp"

using namespace fraccore;

namespace {

constexpr double kPi = 3.14159265358979323846;

SampledFunction apply_scalar(const SampledFunction& f, double c) {
  SampledFunction out = f;
  for (double& v : out.values) v *= c;
  return out;
}

double sup_diff(const SampledFunction& a, const SampledFunction& b,
                double lo = -1e300, double hi = 1e300) {
  REQUIRE(a.values.size() == b.values.size());
  double e = 0.0;
  for (int i = 0; i <= a.grid.n; ++i) {
    double x = a.grid.node(i);
    if (x < lo || x > hi) continue;
    e = std::max(e, std::fabs(a.values[i] - b.values[i]));
  }
  return e;
}

double sup_err(const SampledFunction& got,
               const std::function<double(double)>& want, double lo,
               double hi, bool relative = false) {
  double e = 0.0;
  for (int i = 0; i <= got.grid.n; ++i) {
    double x = got.grid.node(i);
    if (x < lo || x > hi) continue;
    double w = want(x);
    double d = std::fabs(got.values[i] - w);
    if (relative) d /= std::fabs(w);
    e = std::max(e, d);
  }
  return e;
}

// Linearity must hold to rounding for every operator.
void check_linear(const std::function<SampledFunction(
                      const SampledFunction&)>& op,
                  const SampledFunction& f, const SampledFunction& g,
                  int skip_front = 0) {
  SampledFunction combo = f;
  for (int i = 0; i <= f.grid.n; ++i)
    combo.values[i] = 2.0 * f.values[i] + 3.0 * g.values[i];
  SampledFunction lhs = op(combo);
  SampledFunction a = op(f);
  SampledFunction b = op(g);
  double scale = 0.0;
  for (int i = skip_front; i <= f.grid.n; ++i)
    scale = std::max(scale, std::fabs(lhs.values[i]));
  for (int i = skip_front; i <= f.grid.n; ++i) {
    double want = 2.0 * a.values[i] + 3.0 * b.values[i];
    CHECK(std::fabs(lhs.values[i] - want) <=
          1e-12 * std::max(1.0, scale));
  }
}

// Fourier-side reference for the skewed derivative of exp(-x^2): the
// implemented two-lobe form carries the symbol -|k|^alpha
// exp(-i sgn(k) theta pi/2), so the real inversion integral reads
// -(1/sqrt(pi)) int_0^inf k^alpha exp(-k^2/4) cos(kx - theta pi/2) dk.
double feller_gaussian_reference(double x, double alpha, double theta) {
  const int steps = 20000;
  const double cap = 14.0;
  double dk = cap / steps;
  double acc = 0.0;
  for (int j = 0; j <= steps; ++j) {
    double k = j * dk;
    double w = (j == 0 || j == steps) ? 0.5 : 1.0;
    acc += w * std::pow(k, alpha) * std::exp(-k * k / 4.0) *
           std::cos(k * x - theta * kPi / 2.0);
  }
  return -std::sqrt(kPi) / kPi * acc * dk;
}

}  // namespace

TEST_CASE("rl_integral: closed forms, identity, composition") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction lin = sample(g, [](double x) { return x; });
  SampledFunction one = sample(g, [](double) { return 1.0; });

  // J^{1/2} x = x^{3/2} Gamma(2)/Gamma(2.5); exact for piecewise-linear input
  SampledFunction j = rl_integral(lin, 0.5);
  double c = 1.0 / std::tgamma(2.5);
  CHECK(sup_err(j, [&](double x) { return c * std::pow(x, 1.5); }, 0.0, 1.0) <=
        1e-13);
  CHECK(j.values.back() == doctest::Approx(0.7522527780636751).epsilon(1e-10));

  // alpha = 0 leaves the sample untouched
  SampledFunction id = rl_integral(lin, 0.0);
  CHECK(id.values == lin.values);

  // alpha = 1 is the running integral
  SampledFunction r1 = rl_integral(one, 1.0);
  CHECK(sup_err(r1, [](double x) { return x; }, 0.0, 1.0) <= 1e-13);

  // alpha > 1 peels off whole integrations: J^{3/2} 1 = x^{3/2}/Gamma(2.5)
  SampledFunction r32 = rl_integral(one, 1.5);
  CHECK(sup_err(r32, [&](double x) { return c * std::pow(x, 1.5); }, 0.0,
                1.0) <= 1e-13);

  // right-sided integral of a constant: (b-x)^alpha/Gamma(1+alpha)
  SampledFunction rr = rl_integral(one, 0.5, Side::right);
  double cr = 1.0 / std::tgamma(1.5);
  CHECK(sup_err(rr, [&](double x) { return cr * std::sqrt(1.0 - x); }, 0.0,
                1.0) <= 1e-13);

  CHECK_THROWS_AS(rl_integral(lin, -0.5), std::invalid_argument);
}

TEST_CASE("rl_integral: semigroup and commutativity") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 256);
  for (auto fn : {+[](double x) { return x; }, +[](double x) { return x * x; },
                  +[](double x) { return std::sin(x); }}) {
    SampledFunction f = sample(g, fn);
    SampledFunction ab = rl_integral(rl_integral(f, 0.4), 0.3);
    SampledFunction ba = rl_integral(rl_integral(f, 0.3), 0.4);
    SampledFunction direct = rl_integral(f, 0.7);
    CHECK(sup_diff(ab, direct) <= 1e-4);
    CHECK(sup_diff(ba, direct) <= 1e-4);
    CHECK(sup_diff(ab, ba) <= 1e-4);
  }
}

TEST_CASE("rl_derivative: closed forms and left inverse") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction one = sample(g, [](double) { return 1.0; });
  SampledFunction lin = sample(g, [](double x) { return x; });

  // derivative of a constant is t^{-alpha}/Gamma(1-alpha), not zero
  SampledFunction d1 = rl_derivative(one, 0.5);
  CHECK(sup_err(
            d1,
            [](double x) { return 1.0 / (std::tgamma(0.5) * std::sqrt(x)); },
            0.1, 1.0, true) <= 1e-2);
  CHECK(d1.values.back() == doctest::Approx(0.5641895835).epsilon(2e-4));

  // power rule at t = 1
  SampledFunction dt = rl_derivative(lin, 0.5);
  CHECK(dt.values.back() == doctest::Approx(1.1283791671).epsilon(1e-4));

  // alpha = 1 falls back to the classical derivative bit-for-bit
  SampledFunction dcl = rl_derivative(lin, 1.0);
  CHECK(dcl.values == finite_diff(lin, 1).values);

  // D^alpha J^alpha f = f under refinement
  double prev = 1e300;
  for (int n : {256, 512}) {
    Grid1D gn = make_uniform_grid(0.0, 1.0, n);
    SampledFunction f = sample(gn, [](double x) { return std::sin(x); });
    SampledFunction rt = rl_derivative(rl_integral(f, 0.5), 0.5);
    double e = sup_diff(rt, f);
    CHECK(e <= 5e-3);
    CHECK(e < prev);
    prev = e;
  }

  CHECK_THROWS_AS(rl_derivative(lin, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(rl_derivative(lin, 0.0), std::invalid_argument);
}

TEST_CASE("caputo_derivative: closed forms, regularization, eigenfunction") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction c3 = sample(g, [](double) { return 3.0; });
  SampledFunction lin = sample(g, [](double x) { return x; });

  // constants are annihilated exactly
  SampledFunction dc = caputo_derivative(c3, 0.5);
  for (double v : dc.values) CHECK(v == 0.0);

  // power rule at t = 1: 2/sqrt(pi)
  SampledFunction dt = caputo_derivative(lin, 0.5);
  CHECK(dt.values.back() == doctest::Approx(1.1283791671).epsilon(1e-3));

  // alpha = 1 falls back to the classical derivative bit-for-bit
  CHECK(caputo_derivative(lin, 1.0).values == finite_diff(lin, 1).values);

  // regularization: caputo(f) = rl(f) - f(0) t^{-alpha}/Gamma(1-alpha)
  SampledFunction f = sample(g, [](double x) { return 1.0 + std::sin(x); });
  SampledFunction dcap = caputo_derivative(f, 0.5);
  SampledFunction drl = rl_derivative(f, 0.5);
  double ereg = 0.0;
  for (int i = 0; i <= g.n; ++i) {
    double x = g.node(i);
    if (x < 0.1) continue;
    double want =
        drl.values[i] - recip_gamma(0.5) / std::sqrt(x);
    ereg = std::max(ereg, std::fabs(dcap.values[i] - want));
  }
  CHECK(ereg <= 1e-3);

  // E_alpha(-t^alpha) solves D^alpha u = -u; L1 error shrinks with h
  double prev = 1e300;
  for (int n : {256, 1024}) {
    Grid1D gn = make_uniform_grid(0.0, 1.0, n);
    SampledFunction u = sample(gn, [](double x) {
      return mittag_leffler(0.5, 1.0, -std::sqrt(x));
    });
    SampledFunction du = caputo_derivative(u, 0.5);
    double e = 0.0;
    for (int i = 1; i <= gn.n; ++i) {
      if (gn.node(i) < 0.05) continue;
      e = std::max(e, std::fabs(du.values[i] + u.values[i]));
    }
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev <= 1e-3);
}

TEST_CASE("caputo_derivative: empirical order on t^2 is 2 - alpha") {
  const double alpha = 0.5;
  std::vector<double> errs;
  for (int n : {64, 128, 256, 512}) {
    Grid1D g = make_uniform_grid(0.0, 1.0, n);
    SampledFunction f = sample(g, [](double x) { return x * x; });
    SampledFunction d = caputo_derivative(f, alpha);
    double c = 2.0 / std::tgamma(3.0 - alpha);
    errs.push_back(sup_err(
        d, [&](double x) { return c * std::pow(x, 2.0 - alpha); }, 0.0, 1.0));
  }
  // least-squares slope of log err against log h
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = static_cast<int>(errs.size());
  for (int i = 0; i < m; ++i) {
    double x = std::log(1.0 / (64 << i));
    double y = std::log(errs[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  CHECK(slope == doctest::Approx(2.0 - alpha).epsilon(0.2 / 1.5));
}

TEST_CASE("rl, caputo and gl coincide for f(a) = 0 under refinement") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction f = sample(g, [](double x) { return x * x; });
  SampledFunction a = rl_derivative(f, 0.5);
  SampledFunction b = caputo_derivative(f, 0.5);
  SampledFunction c = gl_derivative(f, 0.5);
  CHECK(sup_diff(a, b) <= 5e-3);
  CHECK(sup_diff(a, c) <= 5e-3);
  CHECK(sup_diff(b, c) <= 5e-3);
}

TEST_CASE("caputo_diffusive agrees with the classic scheme") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 256);
  SampledFunction f = sample(g, [](double x) { return x * x; });
  double tol[] = {1e-3, 3e-3, 8e-3};
  int ti = 0;
  for (double a : {0.3, 0.5, 0.7}) {
    SampledFunction d = caputo_diffusive(f, a, 64);
    double c = 2.0 / std::tgamma(3.0 - a);
    CHECK(sup_err(
              d, [&](double x) { return c * std::pow(x, 2.0 - a); }, 0.2, 1.0,
              true) <= tol[ti++]);
  }

  SampledFunction lin = sample(g, [](double x) { return x; });
  SampledFunction dl = caputo_diffusive(lin, 0.5, 64);
  CHECK(dl.values.back() == doctest::Approx(1.1283792).epsilon(1e-2));

  // cross-method discrepancy shrinks as both discretizations refine
  double prev = 1e300;
  for (int k = 0; k < 2; ++k) {
    int n = k == 0 ? 128 : 512;
    int nodes = k == 0 ? 24 : 96;
    Grid1D gn = make_uniform_grid(0.0, 1.0, n);
    SampledFunction fn = sample(gn, [](double x) { return x * x; });
    double e = sup_diff(caputo_diffusive(fn, 0.5, nodes),
                        caputo_derivative(fn, 0.5), 0.1, 1.0);
    CHECK(e < prev);
    prev = e;
  }

  CHECK_THROWS_AS(caputo_diffusive(f, 0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(caputo_diffusive(f, 1.0, 64), std::invalid_argument);
}

TEST_CASE("gl_derivative: backward difference, power rule, short memory") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction lin = sample(g, [](double x) { return x; });

  // alpha = 1: exact backward differences of t are 1 from node 1 on
  SampledFunction d1 = gl_derivative(lin, 1.0);
  for (int i = 1; i <= g.n; ++i)
    CHECK(d1.values[i] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d1.values[0] == 0.0);

  // power rule, first-order accurate
  SampledFunction dh = gl_derivative(lin, 0.5);
  CHECK(dh.values.back() == doctest::Approx(1.1283792).epsilon(5e-3));

  // right-sided derivative mirrors the left one (and carries -d/dx, so the
  // decreasing ramp maps to +1)
  SampledFunction ml = sample(g, [](double x) { return 1.0 - x; });
  SampledFunction dr = gl_derivative(ml, 1.0, Side::right);
  for (int i = 0; i < g.n; ++i)
    CHECK(dr.values[i] == doctest::Approx(1.0).epsilon(1e-12));

  // short-memory truncation: error decreases with window length and obeys
  // the 2 (L h)^{-alpha} max|f| tail bound
  Grid1D g8 = make_uniform_grid(0.0, 8.0, 1024);
  SampledFunction s = sample(g8, [](double x) { return std::sin(x); });
  SampledFunction full = gl_derivative(s, 0.5);
  double prev = 1e300;
  for (int mem : {128, 256, 512}) {
    SampledFunction win = gl_derivative(s, 0.5, Side::left, mem);
    double e = sup_diff(win, full);
    CHECK(e <= 2.0 * std::pow(mem * g8.h, -0.5));
    CHECK(e < prev);
    prev = e;
  }

  CHECK_THROWS_AS(gl_derivative(lin, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(gl_derivative(lin, 0.5, Side::left, 2000),
                  std::invalid_argument);
}

TEST_CASE("gl_integral matches the RL integral") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction f = sample(g, [](double x) { return x * x; });
  CHECK(sup_diff(gl_integral(f, 0.5), rl_integral(f, 0.5)) <= 5e-3);

  SampledFunction one = sample(g, [](double) { return 1.0; });
  SampledFunction j = gl_integral(one, 0.5);
  CHECK(j.values.back() ==
        doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(5e-3));

  CHECK(gl_integral(f, 0.0).values == f.values);
}

TEST_CASE("marchaud: boundary term, truncation, RL agreement") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 1024);

  // constants keep only the boundary term c (x-a)^{-alpha}/Gamma(1-alpha)
  SampledFunction c3 = sample(g, [](double) { return 3.0; });
  SampledFunction dc = marchaud(c3, 0.3);
  for (int i = 1; i <= g.n; ++i) {
    double want = 3.0 * recip_gamma(0.7) / std::pow(g.node(i), 0.3);
    CHECK(dc.values[i] == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(std::isinf(dc.values[0]));
  CHECK(dc.values[0] > 0.0);
  SampledFunction mc = apply_scalar(c3, -1.0);
  CHECK(marchaud(mc, 0.3).values[0] < 0.0);

  // zero stays zero, including the endpoint
  SampledFunction z = sample(g, [](double) { return 0.0; });
  for (double v : marchaud(z, 0.5).values) CHECK(v == 0.0);

  // f = t matches the RL derivative to O(sqrt(h)) + O(sqrt(eps))
  SampledFunction lin = sample(g, [](double x) { return x; });
  auto exact = [](double x) { return std::sqrt(x) / std::tgamma(1.5); };
  SampledFunction m1 = marchaud(lin, 0.5);
  CHECK(sup_err(m1, exact, 0.2, 1.0, true) <= 6e-2);
  SampledFunction m4 = marchaud(lin, 0.5, Side::left, 4.0 / 1024);
  double e4 = sup_err(m4, exact, 0.2, 1.0, true);
  CHECK(e4 <= 0.12);
  CHECK(sup_err(m1, exact, 0.2, 1.0, true) < e4);

  // right-sided constant case mirrors the boundary term
  SampledFunction dr = marchaud(c3, 0.3, Side::right);
  for (int i = 0; i < g.n; ++i) {
    double want = 3.0 * recip_gamma(0.7) / std::pow(1.0 - g.node(i), 0.3);
    CHECK(dr.values[i] == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(std::isinf(dr.values.back()));

  CHECK_THROWS_AS(marchaud(lin, 0.5, Side::left, 0.5 / 1024),
                  std::invalid_argument);
  CHECK_THROWS_AS(marchaud(lin, 1.0), std::invalid_argument);
}

TEST_CASE("riesz derivative: Fourier multiplier on cosines") {
  Grid1D g = make_uniform_grid(-40.0, 40.0, 4000);
  SampledFunction f = sample(g, [](double x) { return std::cos(x); });
  // D^alpha cos(x) = -cos(x) for every alpha (|k| = 1)
  SampledFunction d05 = riesz_apply(f, 0.5, RieszMode::derivative);
  CHECK(sup_err(d05, [](double x) { return -std::cos(x); }, -2.0, 2.0) <=
        1e-2);
  SampledFunction d15 = riesz_apply(f, 1.5, RieszMode::derivative);
  CHECK(sup_err(d15, [](double x) { return -std::cos(x); }, -2.0, 2.0) <=
        3e-2);
}

TEST_CASE("riesz derivative: Laplacian limit and pole") {
  Grid1D g = make_uniform_grid(-8.0, 8.0, 1600);
  SampledFunction f = sample(g, [](double x) { return std::exp(-x * x); });
  SampledFunction d = riesz_apply(f, 1.99, RieszMode::derivative);
  SampledFunction lap = finite_diff(f, 2);
  double e = 0.0;
  for (int i = 0; i <= g.n; ++i) {
    double x = g.node(i);
    if (std::fabs(x) > 2.0) continue;
    e = std::max(e, std::fabs(d.values[i] - lap.values[i]));
  }
  CHECK(e <= 5e-2 * 2.0);  // scale: max |f''| = 2

  CHECK_THROWS_WITH_AS(riesz_apply(f, 1.0, RieszMode::derivative),
                       "riesz derivative undefined at alpha=1",
                       std::domain_error);
  CHECK_THROWS_AS(riesz_apply(f, 2.0, RieszMode::derivative),
                  std::invalid_argument);

  SampledFunction z = sample(g, [](double) { return 0.0; });
  for (double v : riesz_apply(z, 0.7, RieszMode::derivative).values)
    CHECK(v == 0.0);
}

TEST_CASE("riesz potential: closed form on t - t^2") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction f = sample(g, [](double x) { return x - x * x; });
  const double a = 0.5;
  SampledFunction p = riesz_apply(f, a, RieszMode::potential);
  auto jl = [&](double x) {
    return std::pow(x, 1.0 + a) / std::tgamma(2.0 + a) -
           2.0 * std::pow(x, 2.0 + a) / std::tgamma(3.0 + a);
  };
  double c = 1.0 / (2.0 * std::cos(a * kPi / 2.0));
  CHECK(sup_err(
            p, [&](double x) { return c * (jl(x) + jl(1.0 - x)); }, 0.0,
            1.0) <= 1e-5);

  CHECK_THROWS_AS(riesz_apply(f, 1.0, RieszMode::potential),
                  std::invalid_argument);
}

TEST_CASE("riesz_feller: symmetric reduction and skewed reference") {
  for (int n : {800, 3200}) {
    Grid1D g = make_uniform_grid(-8.0, 8.0, n);
    SampledFunction f = sample(g, [](double x) { return std::exp(-x * x); });

    SampledFunction fe = riesz_feller(f, {0.5, 0.0});
    SampledFunction ri = riesz_apply(f, 0.5, RieszMode::derivative);
    double e = sup_diff(fe, ri, -2.0, 2.0);
    CHECK(e <= (n == 800 ? 2e-2 : 5e-3));

    SampledFunction fe15 = riesz_feller(f, {1.5, 0.0});
    SampledFunction ri15 = riesz_apply(f, 1.5, RieszMode::derivative);
    double e15 = sup_diff(fe15, ri15, -2.0, 2.0);
    CHECK(e15 <= (n == 800 ? 0.25 : 0.15));

    double e0 = sup_err(
        fe, [](double x) { return feller_gaussian_reference(x, 0.5, 0.0); },
        -2.0, 2.0);
    CHECK(e0 <= (n == 800 ? 5e-3 : 1e-3));

    SampledFunction sk = riesz_feller(f, {0.5, 0.3});
    double es = sup_err(
        sk, [](double x) { return feller_gaussian_reference(x, 0.5, 0.3); },
        -2.0, 2.0);
    CHECK(es <= (n == 800 ? 1e-1 : 5e-2));
  }

  // alpha = 2 is the Laplacian branch; exact on quadratics
  Grid1D gq = make_uniform_grid(-1.0, 1.0, 64);
  SampledFunction q = sample(gq, [](double x) { return x * x; });
  SampledFunction lap = riesz_feller(q, {2.0, 0.0});
  for (double v : lap.values) CHECK(v == doctest::Approx(2.0).epsilon(1e-10));

  SampledFunction f0 = sample(gq, [](double) { return 0.0; });
  for (double v : riesz_feller(f0, {0.5, 0.2}).values) CHECK(v == 0.0);

  CHECK_THROWS_WITH_AS(
      riesz_feller(q, {1.5, 0.7}),
      "riesz_feller: theta = 0.7 outside the Feller-Takayasu diamond for "
      "alpha = 1.5 (|theta| must not exceed 0.5)",
      std::invalid_argument);
  CHECK_THROWS_AS(riesz_feller(q, {0.5, -0.6}), std::invalid_argument);
  CHECK_THROWS_AS(riesz_feller(q, {2.0, 0.1}), std::invalid_argument);
}

TEST_CASE("weyl_derivative: Fourier multipliers on one period") {
  Grid1D g = make_uniform_grid(0.0, 2.0 * kPi, 256);
  SampledFunction s = sample(g, [](double x) { return std::sin(x); });

  SampledFunction d = weyl_derivative(s, 0.5);
  CHECK(sup_err(d, [](double x) { return std::sin(x + kPi / 4.0); }, 0.0,
                7.0) <= 1e-10);

  SampledFunction dr = weyl_derivative(s, 0.5, Side::right);
  CHECK(sup_err(dr, [](double x) { return std::sin(x - kPi / 4.0); }, 0.0,
                7.0) <= 1e-10);

  SampledFunction d1 = weyl_derivative(s, 1.0);
  CHECK(sup_err(d1, [](double x) { return std::cos(x); }, 0.0, 7.0) <= 1e-10);

  // the zero mode is annihilated: a shifted sine gives the same answer
  SampledFunction shifted = sample(g, [](double x) { return 2.0 + std::sin(x); });
  CHECK(sup_diff(weyl_derivative(shifted, 0.5), d) <= 1e-12);

  SampledFunction c = sample(g, [](double) { return 5.0; });
  for (double v : weyl_derivative(c, 0.5).values)
    CHECK(std::fabs(v) <= 1e-12);

  Grid1D gl = make_uniform_grid(0.0, 1.0, 64);
  SampledFunction ramp = sample(gl, [](double x) { return x; });
  CHECK_THROWS_AS(weyl_derivative(ramp, 0.5), std::domain_error);
}

TEST_CASE("erdelyi_kober: beta closed form, RL reduction, inverse pair") {
  // f = 1: the integral operator returns Gamma(gamma+1)/Gamma(gamma+1+mu)
  Grid1D g = make_uniform_grid(1e-3, 1.0, 400);
  SampledFunction one = sample(g, [](double) { return 1.0; });
  SampledFunction I = erdelyi_kober(one, {0.7, 0.4, 1.0}, EKMode::integral);
  double want = std::tgamma(1.7) / std::tgamma(2.1);
  CHECK(std::fabs(I.values.back() - want) <= 1e-4);
  CHECK(sup_err(I, [&](double) { return want; }, 0.3, 1.0) <= 1e-3);

  // gamma=0, eta=1 reduces to t^{-mu} J^mu; exact on piecewise-linear f
  SampledFunction lin = sample(g, [](double x) { return x; });
  SampledFunction red = erdelyi_kober(lin, {0.0, 0.4, 1.0}, EKMode::integral);
  SampledFunction jref = rl_integral(lin, 0.4);
  for (int i = 1; i <= g.n; ++i) {
    double want_i = std::pow(g.node(i), -0.4) * jref.values[i];
    CHECK(red.values[i] ==
          doctest::Approx(want_i).epsilon(1e-10));
  }

  // mu = 0 derivative mode is the identity
  SampledFunction idy = erdelyi_kober(lin, {0.3, 0.0, 2.0}, EKMode::derivative);
  CHECK(idy.values == lin.values);

  // derivative inverts the integral
  Grid1D g2 = make_uniform_grid(0.5, 2.0, 256);
  SampledFunction f = sample(g2, [](double x) { return std::sin(x); });
  EKParams p{0.3, 0.4, 1.5};
  SampledFunction round = erdelyi_kober(erdelyi_kober(f, p, EKMode::integral),
                                        p, EKMode::derivative);
  CHECK(sup_err(round, [](double x) { return std::sin(x); }, 0.55, 2.0) <=
        5e-3);

  // validation
  Grid1D g0 = make_uniform_grid(0.0, 1.0, 16);
  SampledFunction on0 = sample(g0, [](double) { return 1.0; });
  CHECK_THROWS_AS(erdelyi_kober(on0, p, EKMode::integral),
                  std::invalid_argument);
  CHECK_THROWS_AS(erdelyi_kober(f, {0.3, -0.1, 1.0}, EKMode::integral),
                  std::invalid_argument);
  CHECK_THROWS_AS(erdelyi_kober(f, {0.3, 0.4, 0.0}, EKMode::integral),
                  std::invalid_argument);
  CHECK_THROWS_AS(erdelyi_kober(f, {0.3, 1.2, 1.0}, EKMode::derivative),
                  std::invalid_argument);
}

TEST_CASE("caputo_fabrizio: closed form, compatibility limit, truncation") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction lin = sample(g, [](double x) { return x; });

  // CF of t at alpha = 1/2 is 2 (1 - e^{-t})
  SampledFunction r = caputo_fabrizio(lin, 0.5);
  CHECK(sup_err(
            r, [](double x) { return 2.0 * (1.0 - std::exp(-x)); }, 0.0,
            1.0) <= 1e-5);

  SampledFunction c = sample(g, [](double) { return 4.0; });
  for (double v : caputo_fabrizio(c, 0.5).values) CHECK(v == 0.0);

  // compatibility: alpha -> 1 recovers the classical derivative
  Grid1D gf = make_uniform_grid(0.0, 1.0, 4096);
  SampledFunction q = sample(gf, [](double x) { return 0.5 * x * x; });
  SampledFunction r999 = caputo_fabrizio(q, 0.999);
  CHECK(sup_err(r999, [](double x) { return x; }, 0.2, 1.0, true) <= 5e-2);

  // the finite lower limit stands in for -inf; the induced truncation error
  // decays as the domain grows (exponentially-weighted kernel)
  double errs[2];
  int idx = 0;
  for (double L : {0.0, 2.0 * kPi}) {
    int n = static_cast<int>((2.0 * kPi + L) / (2.0 * kPi) * 1024);
    Grid1D gd = make_uniform_grid(-L, 2.0 * kPi, n);
    SampledFunction s = sample(gd, [](double x) { return std::sin(x); });
    SampledFunction cf = caputo_fabrizio(s, 0.5);
    errs[idx++] = sup_err(
        cf, [](double x) { return std::cos(x) + std::sin(x); }, kPi,
        2.0 * kPi);
  }
  CHECK(errs[1] <= 1e-3);
  CHECK(errs[1] < errs[0] / 10.0);
  CHECK(errs[0] <= 0.1);

  // only the exponential kernel is Caputo-Fabrizio
  CHECK_THROWS_AS(caputo_fabrizio(lin, 0.5, KernelSpec::gauss_kernel()),
                  std::invalid_argument);
  CHECK_THROWS_AS(caputo_fabrizio(lin, 1.0), std::invalid_argument);
}

TEST_CASE("gc/grl derivatives: kernels, boundary relation, fading memory") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 256);
  SampledFunction lin = sample(g, [](double x) { return x; });

  // GC with the exponential kernel is exactly caputo_fabrizio
  CHECK(gc_derivative(lin, 0.5, KernelSpec::exp_kernel()).values ==
        caputo_fabrizio(lin, 0.5).values);

  // GC annihilates constants for every kernel
  SampledFunction c = sample(g, [](double) { return 2.0; });
  for (const KernelSpec& k :
       {KernelSpec::exp_kernel(), KernelSpec::ml_kernel(),
        KernelSpec::gauss_kernel(), KernelSpec::stretched_kernel(0.5)}) {
    for (double v : gc_derivative(c, 0.4, k).values) CHECK(v == 0.0);
  }

  // Atangana-Baleanu kernel on f = t has the Mittag-Leffler closed form
  const double a = 0.3;
  SampledFunction ab = gc_derivative(lin, a, KernelSpec::ml_kernel());
  CHECK(sup_err(
            ab,
            [&](double x) {
              double arg = -a / (1.0 - a) * std::pow(x, a);
              return x * mittag_leffler(a, 2.0, arg) / (1.0 - a);
            },
            0.1, 1.0, true) <= 5e-3);

  // GRL and GC agree when f(a) = 0 ...
  Grid1D g3 = make_uniform_grid(0.0, 3.0, 512);
  SampledFunction s = sample(g3, [](double x) { return std::sin(x); });
  SampledFunction gc = gc_derivative(s, 0.4, KernelSpec::exp_kernel());
  SampledFunction grl = grl_derivative(s, 0.4, KernelSpec::exp_kernel());
  CHECK(sup_diff(gc, grl, 3.0 / 512, 3.0 - 3.0 / 512) <= 1e-6);

  // ... and differ by N(alpha) k(t-a) f(a) otherwise
  SampledFunction sh = sample(g3, [](double x) { return 1.0 + std::sin(x); });
  SampledFunction gc2 = gc_derivative(sh, 0.4, KernelSpec::exp_kernel());
  SampledFunction grl2 = grl_derivative(sh, 0.4, KernelSpec::exp_kernel());
  KernelSpec ek = KernelSpec::exp_kernel();
  double ebd = 0.0;
  for (int i = 1; i < g3.n; ++i) {
    double want = ek.norm(0.4) * ek.eval(g3.node(i), 0.4);
    ebd = std::max(ebd,
                   std::fabs(grl2.values[i] - gc2.values[i] - want));
  }
  CHECK(ebd <= 5e-3);

  // increasing kernels violate fading memory
  KernelSpec bad = KernelSpec::custom_kernel(
      [](double x, double) { return 1.0 + x; }, [](double) { return 1.0; });
  CHECK_THROWS_WITH_AS(gc_derivative(lin, 0.5, bad),
                       "gc_derivative: kernel invariant violation (kernel "
                       "must be non-increasing; fading memory)",
                       std::domain_error);

  // a custom kernel replicating the exponential one matches bit-for-bit
  KernelSpec mimic = KernelSpec::custom_kernel(
      [](double x, double al) { return std::exp(-al / (1.0 - al) * x); },
      [](double al) { return 1.0 / (1.0 - al); });
  CHECK(gc_derivative(lin, 0.5, mimic).values ==
        gc_derivative(lin, 0.5, KernelSpec::exp_kernel()).values);
}

TEST_CASE("tempered operators: reductions, inverses, tail decay") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);
  SampledFunction f = sample(g, [](double x) { return x * x; });

  // lambda = 0 integral reduces to the RL integral bit-for-bit
  CHECK(tempered_apply(f, {0.7, 0.0}, TemperedMode::integ).values ==
        rl_integral(f, 0.7).values);

  // J^{alpha,lambda} e^{-lambda x} = e^{-lambda x} x^alpha/Gamma(1+alpha),
  // exact here because the conjugated sample is piecewise-linear
  SampledFunction e = sample(g, [](double x) { return std::exp(-2.0 * x); });
  SampledFunction je = tempered_apply(e, {0.5, 2.0}, TemperedMode::integ);
  CHECK(sup_err(je,
                [](double x) {
                  return std::exp(-2.0 * x) * std::sqrt(x) / std::tgamma(1.5);
                },
                0.0, 1.0) <= 1e-12);

  // derivative annihilates constants; rl_deriv maps them to lambda^alpha c
  SampledFunction c = sample(g, [](double) { return 3.0; });
  for (double v : tempered_apply(c, {0.5, 2.0}, TemperedMode::deriv).values)
    CHECK(v == 0.0);
  for (double v : tempered_apply(c, {0.5, 2.0}, TemperedMode::rl_deriv).values)
    CHECK(v == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));

  // round trip: rl_deriv(integ(f)) = f for both order windows
  Grid1D g8 = make_uniform_grid(0.0, 8.0, 1024);
  SampledFunction bump = sample(
      g8, [](double x) { return std::exp(-4.0 * (x - 4.0) * (x - 4.0)); });
  for (double a : {0.5, 1.5}) {
    SampledFunction J = tempered_apply(bump, {a, 1.0}, TemperedMode::integ);
    SampledFunction D = tempered_apply(J, {a, 1.0}, TemperedMode::rl_deriv);
    CHECK(sup_diff(D, bump) <= 5e-3);
  }

  // zero-extension truncation tail: the discrepancy against the conjugated
  // RL derivative decays with distance from the lower end
  SampledFunction s = sample(g8, [](double x) { return std::sin(x); });
  SampledFunction es =
      sample(g8, [](double x) { return std::exp(x) * std::sin(x); });
  SampledFunction dt = tempered_apply(s, {0.5, 1.0}, TemperedMode::rl_deriv);
  SampledFunction dr = rl_derivative(es, 0.5);
  auto disc = [&](double xq) {
    int i = static_cast<int>(std::lround((xq - g8.a) / g8.h));
    return std::fabs(dt.values[i] - std::exp(-g8.node(i)) * dr.values[i]);
  };
  CHECK(disc(2.0) < disc(1.0));
  CHECK(disc(4.0) < disc(2.0));
  CHECK(disc(4.0) <= 2e-3);

  CHECK_THROWS_AS(tempered_apply(f, {1.0, 1.0}, TemperedMode::deriv),
                  std::invalid_argument);
  CHECK_THROWS_AS(tempered_apply(f, {0.5, -1.0}, TemperedMode::deriv),
                  std::invalid_argument);
}

TEST_CASE("conformable derivative") {
  Grid1D g = make_uniform_grid(0.5, 2.0, 512);
  SampledFunction q = sample(g, [](double x) { return x * x; });

  // exact on quadratics: t^{1-alpha} f' = 2 t^{2-alpha}
  SampledFunction d = conformable(q, 0.5);
  CHECK(sup_err(d, [](double x) { return 2.0 * std::pow(x, 1.5); }, 0.5, 2.0,
                true) <= 1e-10);

  SampledFunction c = sample(g, [](double) { return 7.0; });
  for (double v : conformable(c, 0.5).values) CHECK(v == 0.0);

  // alpha = 1 is the classical derivative bit-for-bit
  CHECK(conformable(q, 1.0).values == finite_diff(q, 1).values);

  // both variants share the same realization for differentiable samples
  CHECK(conformable(q, 0.5, ConformableVariant::khalil).values ==
        conformable(q, 0.5, ConformableVariant::katugampola).values);

  // product rule holds to discretization accuracy
  SampledFunction u = sample(g, [](double x) { return x; });
  SampledFunction v = sample(g, [](double x) { return std::sin(x); });
  SampledFunction uv = sample(g, [](double x) { return x * std::sin(x); });
  SampledFunction duv = conformable(uv, 0.5);
  SampledFunction du = conformable(u, 0.5);
  SampledFunction dv = conformable(v, 0.5);
  double ep = 0.0;
  for (int i = 0; i <= g.n; ++i) {
    double want = u.values[i] * dv.values[i] + v.values[i] * du.values[i];
    ep = std::max(ep, std::fabs(duv.values[i] - want));
  }
  CHECK(ep <= 1e-4);

  Grid1D g0 = make_uniform_grid(0.0, 1.0, 16);
  SampledFunction f0 = sample(g0, [](double x) { return x; });
  CHECK_THROWS_AS(conformable(f0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(conformable(q, 1.5), std::invalid_argument);
}

TEST_CASE("hausdorff fractal derivative") {
  Grid1D g = make_uniform_grid(0.5, 2.0, 256);

  // f = t^sigma differentiates to 1 exactly (parabolic stencil in t^sigma)
  for (double sg : {0.5, 1.7, 2.0}) {
    SampledFunction f = sample(g, [&](double x) { return std::pow(x, sg); });
    for (double v : hausdorff(f, sg).values)
      CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
  }

  // f = t^2, sigma = 1/2: d f/d sqrt(t) = 4 t^{3/2}
  SampledFunction q = sample(g, [](double x) { return x * x; });
  SampledFunction d = hausdorff(q, 0.5);
  CHECK(sup_err(d, [](double x) { return 4.0 * std::pow(x, 1.5); }, 0.5, 2.0,
                true) <= 1e-3);

  // sigma = 1 short-circuits to the classical derivative bit-for-bit
  CHECK(hausdorff(q, 1.0).values == finite_diff(q, 1).values);

  CHECK_THROWS_AS(hausdorff(q, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hausdorff(q, -0.5), std::invalid_argument);
  Grid1D g0 = make_uniform_grid(0.0, 1.0, 16);
  SampledFunction f0 = sample(g0, [](double x) { return x; });
  CHECK_THROWS_AS(hausdorff(f0, 0.5), std::invalid_argument);
}

TEST_CASE("jumarie derivative") {
  Grid1D g = make_uniform_grid(0.0, 1.0, 512);

  // constants map to zero exactly (the defining modification)
  SampledFunction c = sample(g, [](double) { return 5.0; });
  for (double v : jumarie(c, 0.5).values) CHECK(v == 0.0);

  // with f(a) = 0 it coincides with the RL derivative bit-for-bit
  SampledFunction lin = sample(g, [](double x) { return x; });
  CHECK(jumarie(lin, 0.5).values == rl_derivative(lin, 0.5).values);

  // f = 1 + t: the constant part drops, leaving 2/sqrt(pi) at t = 1
  SampledFunction sh = sample(g, [](double x) { return 1.0 + x; });
  CHECK(jumarie(sh, 0.5).values.back() ==
        doctest::Approx(1.1283791671).epsilon(1e-4));

  CHECK_THROWS_AS(jumarie(lin, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(jumarie(lin, 0.0), std::invalid_argument);
}

TEST_CASE("every operator is linear") {
  Grid1D g = make_uniform_grid(0.25, 1.25, 128);
  // f(a) = g(a) = 0 keeps the marchaud endpoint finite
  SampledFunction f = sample(g, [](double x) { return x - 0.25; });
  SampledFunction h = sample(g, [](double x) { return std::sin(x - 0.25); });

  check_linear([](const SampledFunction& u) { return rl_integral(u, 0.5); },
               f, h);
  check_linear([](const SampledFunction& u) { return rl_derivative(u, 0.5); },
               f, h);
  check_linear(
      [](const SampledFunction& u) { return caputo_derivative(u, 0.5); }, f,
      h);
  check_linear(
      [](const SampledFunction& u) { return caputo_diffusive(u, 0.5, 32); },
      f, h);
  check_linear([](const SampledFunction& u) { return gl_derivative(u, 0.5); },
               f, h);
  check_linear([](const SampledFunction& u) { return gl_integral(u, 0.5); },
               f, h);
  check_linear([](const SampledFunction& u) { return marchaud(u, 0.5); }, f,
               h);
  check_linear(
      [](const SampledFunction& u) {
        return riesz_apply(u, 0.5, RieszMode::derivative);
      },
      f, h);
  check_linear(
      [](const SampledFunction& u) { return riesz_feller(u, {0.5, 0.2}); }, f,
      h);
  check_linear(
      [](const SampledFunction& u) { return erdelyi_kober(u, {0.3, 0.4, 1.0},
                                                          EKMode::integral); },
      f, h);
  check_linear(
      [](const SampledFunction& u) { return caputo_fabrizio(u, 0.5); }, f, h);
  check_linear(
      [](const SampledFunction& u) {
        return gc_derivative(u, 0.5, KernelSpec::ml_kernel());
      },
      f, h);
  check_linear(
      [](const SampledFunction& u) {
        return tempered_apply(u, {0.5, 1.0}, TemperedMode::rl_deriv);
      },
      f, h);
  check_linear([](const SampledFunction& u) { return conformable(u, 0.5); },
               f, h);
  check_linear([](const SampledFunction& u) { return hausdorff(u, 1.5); }, f,
               h);
  check_linear([](const SampledFunction& u) { return jumarie(u, 0.5); }, f,
               h);

  Grid1D gp = make_uniform_grid(0.0, 2.0 * kPi, 128);
  SampledFunction fp = sample(gp, [](double x) { return std::sin(x); });
  SampledFunction hp = sample(gp, [](double x) { return std::cos(2.0 * x); });
  check_linear(
      [](const SampledFunction& u) { return weyl_derivative(u, 0.5); }, fp,
      hp);
}

TEST_CASE("backward compatibility at alpha = 1") {
  Grid1D g = make_uniform_grid(0.5, 2.0, 256);
  SampledFunction f = sample(g, [](double x) { return std::sin(x); });
  SampledFunction d = finite_diff(f, 1);

  CHECK(rl_derivative(f, 1.0).values == d.values);
  CHECK(caputo_derivative(f, 1.0).values == d.values);
  CHECK(conformable(f, 1.0).values == d.values);
  CHECK(hausdorff(f, 1.0).values == d.values);

  // GL at alpha = 1 is the backward difference: first-order agreement
  CHECK(sup_diff(gl_derivative(f, 1.0), d, 0.6, 2.0) <= 2.0 * g.h);

  Grid1D gp = make_uniform_grid(0.0, 2.0 * kPi, 256);
  SampledFunction s = sample(gp, [](double x) { return std::sin(x); });
  CHECK(sup_diff(weyl_derivative(s, 1.0), finite_diff(s, 1)) <=
        gp.h * gp.h * 2.0);
}

TEST_CASE("RL eigenfunction residual shrinks under refinement") {
  // f = x^{alpha-1} E_{alpha,alpha}(-x^alpha) satisfies D^alpha f = -f on
  // (0,1]; the grid starts at h > 0, so the discrete transform misses the
  // [0,h) mass and converges only like h^alpha in the interior.
  const double a = 0.6;
  double prev = 1e300;
  for (int n : {256, 1024}) {
    Grid1D g = make_uniform_grid(1.0 / n, 1.0, n);
    SampledFunction f = sample(g, [&](double x) {
      return std::pow(x, a - 1.0) * mittag_leffler(a, a, -std::pow(x, a));
    });
    SampledFunction d = rl_derivative(f, a);
    double e = 0.0;
    for (int i = 0; i <= g.n; ++i) {
      if (g.node(i) < 0.25) continue;
      e = std::max(e,
                   std::fabs(d.values[i] + f.values[i]) /
                       std::fabs(f.values[i]));
    }
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev <= 0.1);
}
