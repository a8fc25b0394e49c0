#include "fraccore/matrixop.hpp"

#include <cmath>
#include <cstdio>

namespace fraccore {

StripMatrix build_strip_matrix(double alpha, int n, double tau, StripSide side) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("build_strip_matrix: alpha must be positive");
  if (n < 1) throw std::invalid_argument("build_strip_matrix: need n >= 1");
  if (!(tau > 0.0))
    throw std::invalid_argument("build_strip_matrix: tau must be positive");
  StripMatrix B;
  B.alpha = alpha;
  B.tau = tau;
  B.n = n;
  B.side = side;
  B.first_row = gl_weights(alpha, n);
  const double scale = std::pow(tau, -alpha);
  for (double& w : B.first_row) w *= scale;
  return B;
}

std::vector<double> apply_strip(const StripMatrix& B, const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != B.n + 1)
    throw std::invalid_argument("apply_strip: vector length must be n + 1");
  std::vector<double> out(v.size(), 0.0);
  const int n = B.n;
  if (B.side == StripSide::lower) {
    for (int i = 0; i <= n; ++i) {
      double acc = 0.0;
      for (int j = 0; j <= i; ++j) acc += B.first_row[i - j] * v[j];
      out[i] = acc;
    }
  } else {
    for (int i = 0; i <= n; ++i) {
      double acc = 0.0;
      for (int j = i; j <= n; ++j) acc += B.first_row[j - i] * v[j];
      out[i] = acc;
    }
  }
  return out;
}

SampledFunction solve_linear_fde(double alpha, double lam,
                                 const SampledFunction& forcing, double y0) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("solve_linear_fde: alpha must lie in (0,1]");
  const Grid1D& g = forcing.grid;
  if (static_cast<int>(forcing.values.size()) != g.nodes())
    throw std::invalid_argument("solve_linear_fde: forcing size mismatch");
  const double tau = g.h;
  const double h_a = std::pow(tau, -alpha);
  if (std::fabs(h_a - lam) < 1e-14)
    throw std::invalid_argument(
        "solve_linear_fde: step is singular (omega_0/tau^alpha == lambda)");
  std::vector<double> w = gl_weights(alpha, g.n);
  // march z = y - y0:  h^-a sum_k w_k z_{i-k} = lam (z_i + y0) + f_i
  std::vector<double> z(g.nodes(), 0.0);
  for (int i = 1; i <= g.n; ++i) {
    double hist = 0.0;
    for (int k = 1; k <= i; ++k) hist += w[k] * z[i - k];
    z[i] = (lam * y0 + forcing.values[i] - h_a * hist) / (h_a - lam);
  }
  SampledFunction y;
  y.grid = g;
  y.values.resize(g.nodes());
  for (int i = 0; i <= g.n; ++i) y.values[i] = z[i] + y0;
  return y;
}

}  // namespace fraccore
