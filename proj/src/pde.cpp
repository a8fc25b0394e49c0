#include "fraccore/pde.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "fraccore/specfun.hpp"

namespace fraccore {

namespace {

// Solves (d * I + off * A2) x = rhs on the interior nodes, where A2 is the
// 1D Laplacian stencil [1 -2 1] (so the matrix is tridiagonal with diagonal
// d - 2 off and off-diagonals off).
void thomas_constant(double diag, double off, std::vector<double>& rhs) {
  const int m = static_cast<int>(rhs.size());
  std::vector<double> c(m);
  double beta = diag;
  rhs[0] /= beta;
  for (int i = 1; i < m; ++i) {
    c[i] = off / beta;
    beta = diag - off * c[i];
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / beta;
  }
  for (int i = m - 2; i >= 0; --i) rhs[i] -= c[i + 1] * rhs[i + 1];
}

void validate_problem(const DiffusionProblem& p, bool check_beta) {
  if (check_beta && !(p.beta > 0.0 && p.beta <= 1.0))
    throw std::invalid_argument("diffusion: beta must lie in (0,1]");
  if (std::fabs(p.t_grid.a) > 1e-15 * std::max(1.0, std::fabs(p.t_grid.b)))
    throw std::invalid_argument("diffusion: time grid must start at t = 0");
  if (static_cast<int>(p.u0.size()) != p.x_grid.nodes())
    throw std::invalid_argument("diffusion: u0 size must match the x grid");
  for (double v : p.u0)
    if (!std::isfinite(v))
      throw std::invalid_argument("diffusion: u0 must be finite");
  if (std::fabs(p.u0.front()) > 1e-12 || std::fabs(p.u0.back()) > 1e-12)
    throw std::invalid_argument(
        "diffusion: u0 must vanish at the Dirichlet boundaries");
  if (p.x_grid.n < 2)
    throw std::invalid_argument("diffusion: x grid too small");
  if (p.t_grid.n < 1)
    throw std::invalid_argument("diffusion: time grid too small");
}

// L1 weights b_j = (j+1)^{1-beta} - j^{1-beta} with the 0^0 pitfall at
// beta = 1 avoided explicitly (b_0 must be exactly 1).
std::vector<double> l1_bweights(double beta, int nt) {
  std::vector<double> b(nt);
  for (int j = 0; j < nt; ++j)
    b[j] = std::pow(j + 1.0, 1.0 - beta) -
           (j > 0 ? std::pow(static_cast<double>(j), 1.0 - beta) : 0.0);
  return b;
}

DiffusionSolution solve_multi_term(const std::vector<double>& betas,
                                   const std::vector<double>& wts,
                                   const DiffusionProblem& p) {
  const int nx = p.x_grid.n;
  const int nt = p.t_grid.n;
  const double h = p.x_grid.h;
  const double tau = p.t_grid.h;
  const size_t nb = betas.size();

  std::vector<double> c(nb);
  std::vector<std::vector<double>> b(nb);
  double ctot = 0.0;
  for (size_t q = 0; q < nb; ++q) {
    c[q] = wts[q] * recip_gamma(2.0 - betas[q]) * std::pow(tau, -betas[q]);
    b[q] = l1_bweights(betas[q], nt);
    ctot += c[q];
  }

  DiffusionSolution sol;
  sol.x_grid = p.x_grid;
  sol.t_grid = p.t_grid;
  sol.u.assign(nt + 1, std::vector<double>(nx + 1, 0.0));
  sol.u[0] = p.u0;

  const double off = -1.0 / (h * h);
  const double diag = ctot + 2.0 / (h * h);
  std::vector<double> rhs(nx - 1);
  for (int m = 1; m <= nt; ++m) {
    for (int i = 1; i < nx; ++i) {
      double acc = 0.0;
      for (size_t q = 0; q < nb; ++q) {
        double s = b[q][m - 1] * sol.u[0][i];
        for (int j = 1; j < m; ++j)
          s += (b[q][j - 1] - b[q][j]) * sol.u[m - j][i];
        acc += c[q] * s;
      }
      rhs[i - 1] = acc;
    }
    thomas_constant(diag, off, rhs);
    for (int i = 1; i < nx; ++i) sol.u[m][i] = rhs[i - 1];
  }
  return sol;
}

DiffusionSolution solve_rl_form(const DiffusionProblem& p) {
  const int nx = p.x_grid.n;
  const int nt = p.t_grid.n;
  const double h = p.x_grid.h;
  const double tau = p.t_grid.h;
  const double rg = recip_gamma(p.beta);

  DiffusionSolution sol;
  sol.x_grid = p.x_grid;
  sol.t_grid = p.t_grid;
  sol.u.assign(nt + 1, std::vector<double>(nx + 1, 0.0));
  sol.u[0] = p.u0;

  // history of A u at past times (interior stencil values)
  std::vector<std::vector<double>> au(nt + 1, std::vector<double>(nx - 1, 0.0));
  auto laplacian = [&](const std::vector<double>& u, std::vector<double>& out) {
    for (int i = 1; i < nx; ++i)
      out[i - 1] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
  };
  laplacian(sol.u[0], au[0]);

  std::vector<double> rhs(nx - 1);
  for (int m = 1; m <= nt; ++m) {
    std::vector<double> w = singular_row(p.beta, m, tau);
    for (int i = 1; i < nx; ++i) {
      double acc = p.u0[i];
      for (int j = 0; j < m; ++j) acc += rg * w[j] * au[j][i - 1];
      rhs[i - 1] = acc;
    }
    // (I - rg w_m A) u^m = rhs
    const double s = rg * w[m];
    thomas_constant(1.0 + 2.0 * s / (h * h), -s / (h * h), rhs);
    for (int i = 1; i < nx; ++i) sol.u[m][i] = rhs[i - 1];
    laplacian(sol.u[m], au[m]);
  }
  return sol;
}

}  // namespace

DiffusionSolution solve_time_fractional_diffusion(const DiffusionProblem& p) {
  validate_problem(p, true);
  if (p.form == DiffusionForm::rl) return solve_rl_form(p);
  return solve_multi_term({p.beta}, {1.0}, p);
}

DiffusionSolution solve_distributed_order_diffusion(
    const DistributedOrderSpec& spec, const DiffusionProblem& p) {
  if (spec.nodes.empty() || spec.nodes.size() != spec.weights.size())
    throw std::invalid_argument(
        "distributed order: nodes and weights must be non-empty and match");
  double wsum = 0.0;
  for (size_t q = 0; q < spec.nodes.size(); ++q) {
    if (!(spec.nodes[q] > 0.0 && spec.nodes[q] <= 1.0))
      throw std::invalid_argument("distributed order: nodes must lie in (0,1]");
    if (q > 0 && !(spec.nodes[q] > spec.nodes[q - 1]))
      throw std::invalid_argument(
          "distributed order: nodes must be strictly increasing");
    if (!(spec.weights[q] >= 0.0))
      throw std::invalid_argument("distributed order: weights must be >= 0");
    wsum += spec.weights[q];
  }
  if (std::fabs(wsum - 1.0) > 1e-12)
    throw std::invalid_argument("distributed order: weights must sum to 1");
  if (p.form != DiffusionForm::caputo)
    throw std::invalid_argument(
        "distributed order: only the caputo form is supported");
  validate_problem(p, false);
  return solve_multi_term(spec.nodes, spec.weights, p);
}

DistributedOrderSpec uniform_order_quadrature(int m) {
  if (m < 1) throw std::invalid_argument("uniform_order_quadrature: need m >= 1");
  // Gauss-Legendre on [-1,1] by Newton iteration, then mapped to (0,1).
  DistributedOrderSpec spec;
  spec.nodes.resize(m);
  spec.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (m == 1) p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pm = (m == 1) ? x : p1;
      pp = m * (x * pm - p0) / (x * x - 1.0);
      double dx = pm / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    spec.nodes[m - 1 - i] = 0.5 * (1.0 + x);
    spec.weights[m - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
  return spec;
}

std::vector<double> delta_initial_condition(const Grid1D& x_grid) {
  std::vector<double> u0(x_grid.nodes(), 0.0);
  u0[x_grid.n / 2] = 1.0 / x_grid.h;
  return u0;
}

double fundamental_solution(double beta, double x, double t) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("fundamental_solution: beta must lie in (0,1]");
  if (!(t > 0.0))
    throw std::invalid_argument("fundamental_solution: t must be positive");
  if (beta == 1.0)
    return std::exp(-x * x / (4.0 * t)) / (2.0 * std::sqrt(M_PI * t));
  const double scale = std::pow(t, -beta / 2.0);
  return 0.5 * scale *
         wright_auxiliary(WrightKind::M, beta / 2.0, std::fabs(x) * scale);
}

double green_function_fl(const GreenFLQuery& q) {
  if (!(q.beta > 0.0 && q.beta <= 1.0))
    throw std::invalid_argument("green_function_fl: beta must lie in (0,1]");
  if (!(q.s > 0.0))
    throw std::invalid_argument("green_function_fl: s must be positive");
  return std::pow(q.s, q.beta - 1.0) / (std::pow(q.s, q.beta) + q.k * q.k);
}

Moments moments(const SampledFunction& u_row) {
  const Grid1D& g = u_row.grid;
  if (static_cast<int>(u_row.values.size()) != g.nodes())
    throw std::invalid_argument("moments: values/grid size mismatch");
  double mass = 0.0, m1 = 0.0, m2 = 0.0, scale = 0.0;
  for (int i = 0; i <= g.n; ++i) {
    double w = (i == 0 || i == g.n) ? 0.5 : 1.0;
    double x = g.node(i);
    mass += w * u_row.values[i];
    m1 += w * x * u_row.values[i];
    m2 += w * x * x * u_row.values[i];
    scale += w * std::fabs(u_row.values[i]);
  }
  mass *= g.h;
  m1 *= g.h;
  m2 *= g.h;
  scale *= g.h;
  if (std::fabs(mass) <= 1e-12 * std::max(scale, 1e-300))
    throw std::domain_error("moments: profile has zero total mass");
  Moments out;
  out.mass = mass;
  out.mean = m1 / mass;
  out.second = m2 / mass;
  return out;
}

double second_moment(const SampledFunction& u_row) { return moments(u_row).second; }

std::vector<double> fractional_complex_transform(const Grid1D& g, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument(
        "fractional_complex_transform: alpha must lie in (0,1]");
  if (g.a < 0.0)
    throw std::invalid_argument(
        "fractional_complex_transform: negative nodes are not allowed");
  const double rg = recip_gamma(1.0 + alpha);
  std::vector<double> s(g.nodes());
  for (int i = 0; i <= g.n; ++i) s[i] = std::pow(g.node(i), alpha) * rg;
  return s;
}

std::vector<double> boltzmann_transform(const Grid1D& g, double alpha, double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("boltzmann_transform: t must be positive");
  std::vector<double> s = fractional_complex_transform(g, alpha);
  const double rs = 1.0 / std::sqrt(t);
  for (double& v : s) v *= rs;
  return s;
}

void write_solution_csv(std::ostream& os, const DiffusionSolution& sol) {
  os << "t,x,u\n";
  char buf[120];
  for (int m = 0; m <= sol.t_grid.n; ++m) {
    for (int i = 0; i <= sol.x_grid.n; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", sol.t_grid.node(m),
                    sol.x_grid.node(i), sol.u[m][i]);
      os << buf;
    }
  }
}

}  // namespace fraccore
