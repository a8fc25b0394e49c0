#pragma once

#include <iosfwd>

#include "fraccore/grid.hpp"

namespace fraccore {

enum class DiffusionForm { caputo, rl };

// Time-fractional diffusion u_t^(beta) = u_xx on x_grid x t_grid with
// homogeneous Dirichlet boundaries.  The Caputo form solves
// D_t^beta u = u_xx directly; the RL form marches the equivalent integral
// equation u = u0 + J^beta u_xx.
struct DiffusionProblem {
  double beta = 0.5;  // in (0,1]
  Grid1D x_grid;
  Grid1D t_grid;               // must start at t = 0
  std::vector<double> u0;      // per x node; ~0 at both boundaries
  DiffusionForm form = DiffusionForm::caputo;
};

struct DiffusionSolution {
  Grid1D x_grid;
  Grid1D t_grid;
  std::vector<std::vector<double>> u;  // u[m][i] = u(t_m, x_i)
};

struct DistributedOrderSpec {
  std::vector<double> nodes;    // strictly increasing, each in (0,1]
  std::vector<double> weights;  // non-negative, summing to 1
};

struct GreenFLQuery {
  double k;     // spatial frequency
  double s;     // Laplace variable, > 0
  double beta;  // in (0,1]
};

struct Moments {
  double mass;
  double mean;
  double second;
};

DiffusionSolution solve_time_fractional_diffusion(const DiffusionProblem& p);

// Multi-term (distributed-order) version; p.beta is ignored, the Caputo
// form is required.
DiffusionSolution solve_distributed_order_diffusion(
    const DistributedOrderSpec& spec, const DiffusionProblem& p);

// Gauss-Legendre discretization of the uniform order density b(beta) = 1
// on (0,1): m nodes/weights packaged as a DistributedOrderSpec.
DistributedOrderSpec uniform_order_quadrature(int m);

// Initial delta profile: 1/h at the center node of the grid.
std::vector<double> delta_initial_condition(const Grid1D& x_grid);

// Self-similar fundamental solution of the Cauchy problem on the line,
// beta in (0,1]; reduces to the Gaussian heat kernel at beta = 1.
double fundamental_solution(double beta, double x, double t);

// Fourier-Laplace picture of the same Green function: s^{beta-1}/(s^beta + k^2).
double green_function_fl(const GreenFLQuery& q);

// Trapezoid moments of a profile; throws on (numerically) zero total mass.
Moments moments(const SampledFunction& u_row);
double second_moment(const SampledFunction& u_row);

// Fractional complex transform s = x^alpha / Gamma(1 + alpha) applied to the
// grid nodes (all nodes must be >= 0), and the Boltzmann-type similarity
// variable chi = s / sqrt(t).
std::vector<double> fractional_complex_transform(const Grid1D& g, double alpha);
std::vector<double> boltzmann_transform(const Grid1D& g, double alpha, double t);

// CSV dump with header "t,x,u", row-major: all x for t_0, then t_1, ...
void write_solution_csv(std::ostream& os, const DiffusionSolution& sol);

}  // namespace fraccore
