#pragma once

#include "fraccore/grid.hpp"
#include "fraccore/operators.hpp"

namespace fraccore {

enum class StripSide { upper, lower };

// Triangular Toeplitz ("strip") matrix for the Grunwald-Letnikov scheme on
// n + 1 nodes with step tau.  Only the generating row is stored:
//   upper: B[i][j] = gen[j - i]  (j >= i), matching the convention where the
//          sample vector is ordered from the newest node down to the oldest;
//   lower: B[i][j] = gen[i - j]  (j <= i), acting on samples in natural
//          ascending order.
struct StripMatrix {
  double alpha = 0.5;
  double tau = 1.0;
  int n = 1;
  StripSide side = StripSide::lower;
  std::vector<double> first_row;  // gl_weights(alpha, n) / tau^alpha
};

StripMatrix build_strip_matrix(double alpha, int n, double tau, StripSide side);

// Dense mat-vec with the implied triangular Toeplitz matrix, O(n^2).
std::vector<double> apply_strip(const StripMatrix& B, const std::vector<double>& v);

// Marches the Caputo initial-value problem D^alpha y = lam * y + f, y(0) = y0,
// alpha in (0,1], with the Grunwald-Letnikov scheme applied to y - y0.
SampledFunction solve_linear_fde(double alpha, double lam,
                                 const SampledFunction& forcing, double y0);

}  // namespace fraccore
