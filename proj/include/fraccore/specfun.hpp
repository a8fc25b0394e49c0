#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fraccore {

// Controls truncation of the power series used by the special functions.
struct SeriesConfig {
  double tol = 1e-14;
  int max_terms = 10000;
};

// Thrown when a series cannot reach the requested tolerance within
// max_terms.  The partial sum accumulated so far is kept so a caller can
// decide whether it is still useful.
class precision_error : public std::runtime_error {
 public:
  precision_error(const std::string& what, double partial, int terms)
      : std::runtime_error(what), partial_sum(partial), terms_used(terms) {}
  double partial_sum;
  int terms_used;
};

struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;  // Prabhakar exponent; 1 gives the two-parameter function
};

struct MultiIndexML {
  std::vector<double> rhos;  // all > 0
  std::vector<double> mus;   // same length as rhos
};

enum class WrightKind { F, M };

// 1/Gamma(x) as a total function: exactly 0 at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

// Rising factorial g(g+1)...(g+n-1); n = 0 gives 1.
double pochhammer(double g, int n);

// First n+1 coefficients of (1-z)^alpha, i.e. the Grunwald-Letnikov weights
// (-1)^k binom(alpha, k), via the stable ratio recurrence.  alpha > 0.
std::vector<double> gl_weights(double alpha, int n);

// Generalized (three-parameter) Mittag-Leffler function
//   E^gamma_{alpha,beta}(x) = sum_k (gamma)_k x^k / (k! Gamma(alpha k + beta))
// For gamma = 1 and alpha in (0,2] an asymptotic expansion replaces the
// series for large arguments: at x > 30, and on the negative axis already at
// |x| > min(30, 16^alpha), where the series would lose accuracy to
// cancellation.  Accuracy there is about 8 digits (absolute) for alpha <= 1;
// for alpha in (1,2) the negative-axis expansion omits an oscillatory
// exponentially small term and degrades near the switch point.  alpha = 2,
// beta = 1, x < 0 evaluates exactly as cos(sqrt(-x)).
double mittag_leffler(const MLParams& p, double x, const SeriesConfig& cfg = {});
double mittag_leffler(double alpha, double beta, double x,
                      const SeriesConfig& cfg = {});

// Same as mittag_leffler but requires gamma > 0 explicitly.
double prabhakar_ml(const MLParams& p, double x, const SeriesConfig& cfg = {});

// Multi-index Mittag-Leffler: sum_k x^k / prod_i Gamma(mu_i + k / rho_i).
double multi_index_ml(const MultiIndexML& m, double x,
                      const SeriesConfig& cfg = {});

// Wright function W_{lambda,mu}(z) = sum_n z^n / (n! Gamma(lambda n + mu)),
// lambda > -1.
double wright(double lambda, double mu, double z, const SeriesConfig& cfg = {});

// Auxiliary functions of the Wright type, nu in (0,1):
//   F_nu(z) = sum_n (-z)^n / (n! Gamma(-nu n))
//   M_nu(z) = sum_n (-z)^n / (n! Gamma(-nu n + 1 - nu))
double wright_auxiliary(WrightKind which, double nu, double z,
                        const SeriesConfig& cfg = {});

// Rabotnov function R_alpha(beta, x) = x^alpha sum_n beta^n x^{n(alpha+1)} /
// Gamma((n+1)(1+alpha)), alpha > -1, x >= 0.
double rabotnov(double alpha, double beta, double x,
                const SeriesConfig& cfg = {});

}  // namespace fraccore
