#include "fraccore/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace fraccore {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void check_cfg(const SeriesConfig& cfg) {
  if (!(cfg.tol > 0.0))
    throw std::invalid_argument("series tolerance must be positive");
  if (cfg.max_terms < 1)
    throw std::invalid_argument("max_terms must be at least 1");
}

// Shared series loop.  next(k) must return term k (k = 0, 1, ...).  Stops
// once three consecutive terms fall below tol; this is robust against the
// interleaved exact zeros produced by reciprocal-gamma poles.
template <class F>
double sum_series(F next, const SeriesConfig& cfg, const char* name) {
  double acc = 0.0;
  int small_run = 0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    double t = next(k);
    if (!std::isfinite(t))
      throw precision_error(std::string(name) + ": series term became non-finite",
                            acc, k);
    double prev = acc;
    acc += t;
    if (!std::isfinite(acc))
      throw precision_error(std::string(name) + ": series sum overflowed",
                            prev, k);
    if (std::fabs(t) <= cfg.tol) {
      if (++small_run >= 3) return acc;
    } else {
      small_run = 0;
    }
  }
  throw precision_error(std::string(name) + ": series did not converge within " +
                            std::to_string(cfg.max_terms) + " terms",
                        acc, cfg.max_terms);
}

}  // namespace

double recip_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 0.0) return 1.0 / std::tgamma(x);
  // reflection 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, evaluated in long
  // double: the series code depends on accurate values at negative args
  const long double pi = 3.14159265358979323846264338327950288L;
  const long double xl = x;
  long double v =
      std::sin(pi * xl) / pi * std::exp(std::lgamma(1.0L - xl));
  return static_cast<double>(v);
}

double pochhammer(double g, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= g + k;
  return p;
}

std::vector<double> gl_weights(double alpha, int n) {
  if (!(alpha > 0.0))
    throw std::invalid_argument(fmt("gl_weights: alpha must be positive, got %g", alpha));
  if (n < 0) throw std::invalid_argument("gl_weights: n must be non-negative");
  std::vector<double> w(static_cast<size_t>(n) + 1);
  w[0] = 1.0;
  for (int k = 1; k <= n; ++k) w[k] = w[k - 1] * (1.0 - (alpha + 1.0) / k);
  return w;
}

namespace {

// Asymptotics of E_{alpha,beta}(x) for large |x|, gamma = 1, alpha in (0,2].
double ml_asymptotic(double alpha, double beta, double x) {
  if (x > 0.0) {
    // exponential branch dominates; algebraic corrections are below the
    // 1e-8 target at |x| > 30
    return std::pow(x, (1.0 - beta) / alpha) * std::exp(std::pow(x, 1.0 / alpha)) /
           alpha;
  }
  // x < 0: algebraic expansion -sum_{k>=1} x^{-k} / Gamma(beta - alpha k).
  // The expansion is asymptotic: term magnitudes shrink until
  // k* ~ (|x|^{1/alpha} - 1 + beta) / alpha and diverge afterwards, so the
  // sum is truncated at the smallest term.
  int kstop = 300;
  double kopt = (std::pow(-x, 1.0 / alpha) - 1.0 + beta) / alpha;
  if (kopt < kstop) kstop = std::max(4, static_cast<int>(kopt));
  double acc = 0.0;
  double xk = 1.0;
  int small = 0;
  for (int k = 1; k <= kstop; ++k) {
    xk /= x;
    double t = -xk * recip_gamma(beta - alpha * k);
    acc += t;
    // exact zeros (Gamma poles, e.g. every other term for alpha = 1/2) must
    // not stop the sum, so demand two consecutive negligible terms
    if (std::fabs(t) < 1e-17 * std::fabs(acc) && k > 2) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
  }
  return acc;
}

double ml_core(double alpha, double beta, double gamma, double x,
               const SeriesConfig& cfg) {
  check_cfg(cfg);
  if (!(alpha >= 0.0))
    throw std::invalid_argument(fmt("mittag_leffler: alpha must be >= 0, got %g", alpha));
  if (!std::isfinite(x))
    throw std::invalid_argument("mittag_leffler: x must be finite");
  if (gamma == 1.0 && alpha == 2.0 && beta == 1.0 && x < 0.0)
    return std::cos(std::sqrt(-x));  // exact; series cancels badly for x << 0
  // The power series is evaluated in the regime where its largest term stays
  // below ~e^16, which keeps the cancellation noise on the negative axis near
  // 1e-9 absolute.  Beyond that the asymptotic expansion takes over (for
  // x < 0 that happens at |x| = 16^alpha, long before the classic |x| = 30
  // cutoff when alpha < 1; for small alpha the series terms overflow well
  // before |x| = 30).
  if (gamma == 1.0 && alpha > 0.0 && alpha <= 2.0) {
    if (x > 30.0) return ml_asymptotic(alpha, beta, x);
    if (x < 0.0 && (-x > 30.0 || std::pow(-x, 1.0 / alpha) > 16.0))
      return ml_asymptotic(alpha, beta, x);
  }

  double c = 1.0;   // (gamma)_k / k!
  double xp = 1.0;  // x^k
  return sum_series(
      [&](int k) {
        if (k > 0) {
          c *= (gamma + (k - 1)) / k;
          xp *= x;
        }
        return c * xp * recip_gamma(alpha * k + beta);
      },
      cfg, "mittag_leffler");
}

}  // namespace

double mittag_leffler(const MLParams& p, double x, const SeriesConfig& cfg) {
  return ml_core(p.alpha, p.beta, p.gamma, x, cfg);
}

double mittag_leffler(double alpha, double beta, double x,
                      const SeriesConfig& cfg) {
  return ml_core(alpha, beta, 1.0, x, cfg);
}

double prabhakar_ml(const MLParams& p, double x, const SeriesConfig& cfg) {
  if (!(p.gamma > 0.0))
    throw std::invalid_argument(fmt("prabhakar_ml: gamma must be positive, got %g", p.gamma));
  return ml_core(p.alpha, p.beta, p.gamma, x, cfg);
}

double multi_index_ml(const MultiIndexML& m, double x, const SeriesConfig& cfg) {
  check_cfg(cfg);
  if (m.rhos.empty() || m.rhos.size() != m.mus.size())
    throw std::invalid_argument(
        "multi_index_ml: rhos and mus must be non-empty and of equal length");
  for (double r : m.rhos)
    if (!(r > 0.0))
      throw std::invalid_argument(fmt("multi_index_ml: rho must be positive, got %g", r));

  double xp = 1.0;
  return sum_series(
      [&](int k) {
        if (k > 0) xp *= x;
        double g = xp;
        for (size_t i = 0; i < m.rhos.size(); ++i)
          g *= recip_gamma(m.mus[i] + k / m.rhos[i]);
        return g;
      },
      cfg, "multi_index_ml");
}

double wright(double lambda, double mu, double z, const SeriesConfig& cfg) {
  check_cfg(cfg);
  if (!(lambda > -1.0))
    throw std::invalid_argument(fmt("wright: lambda must be > -1, got %g", lambda));

  double zp = 1.0;  // z^n / n!
  return sum_series(
      [&](int n) {
        if (n > 0) zp *= z / n;
        return zp * recip_gamma(lambda * n + mu);
      },
      cfg, "wright");
}

double wright_auxiliary(WrightKind which, double nu, double z,
                        const SeriesConfig& cfg) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::invalid_argument(fmt("wright_auxiliary: nu must lie in (0,1), got %g", nu));
  if (which == WrightKind::F) return wright(-nu, 0.0, -z, cfg);
  return wright(-nu, 1.0 - nu, -z, cfg);
}

double rabotnov(double alpha, double beta, double x, const SeriesConfig& cfg) {
  check_cfg(cfg);
  if (!(alpha > -1.0))
    throw std::invalid_argument(fmt("rabotnov: alpha must be > -1, got %g", alpha));
  if (!(x >= 0.0))
    throw std::invalid_argument(fmt("rabotnov: x must be >= 0, got %g", x));
  if (x == 0.0) {
    if (alpha > 0.0) return 0.0;
    if (alpha == 0.0) return recip_gamma(1.0);
    throw std::domain_error("rabotnov: x = 0 is singular for alpha < 0");
  }
  double u = 1.0;  // beta^n x^{n(alpha+1)}
  double step = beta * std::pow(x, alpha + 1.0);
  double series = sum_series(
      [&](int n) {
        if (n > 0) u *= step;
        return u * recip_gamma((n + 1) * (1.0 + alpha));
      },
      cfg, "rabotnov");
  return std::pow(x, alpha) * series;
}

}  // namespace fraccore
