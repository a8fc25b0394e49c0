#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraccore {

// Uniform grid on [a, b] with n intervals (n + 1 nodes).
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n = 1;
  double h = 1.0;

  int nodes() const { return n + 1; }
  double node(int i) const { return a + i * h; }
};

struct SampledFunction {
  Grid1D grid;
  std::vector<double> values;  // one per node, all finite
};

// Product-integration weights for int_a^{x_i} (x_i - t)^{alpha-1} f(t) dt
// with f piecewise linear; row i holds i + 1 weights (row 0 is {0}).
struct SingularWeights {
  double alpha = 0.5;
  Grid1D grid;
  std::vector<std::vector<double>> rows;
};

Grid1D make_uniform_grid(double a, double b, int n);

SampledFunction sample(const Grid1D& g, const std::function<double(double)>& f);

// One row of the singular product-integration rule: weights w_0..w_i such
// that sum_j w_j f_j approximates int_0^{i h} (i h - t)^{alpha-1} f(t) dt
// exactly for piecewise-linear f.  Valid for any alpha > 0; the public
// singular_weights entry point restricts to the singular range (0,1).
std::vector<double> singular_row(double alpha, int i, double h);

SingularWeights singular_weights(double alpha, const Grid1D& g);

// First or second derivative by central differences, with one-sided
// second-order stencils at the ends.  order must be 1 or 2.
SampledFunction finite_diff(const SampledFunction& f, int order);

// CSV with header "x,value", one row per node, LF line endings, 17
// significant digits (round-trips bit-exactly).
void write_csv(std::ostream& os, const SampledFunction& f);
SampledFunction read_csv(std::istream& is);

}  // namespace fraccore
