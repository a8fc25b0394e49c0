#pragma once

#include <cmath>
#include <functional>

#include "fraccore/grid.hpp"
#include "fraccore/specfun.hpp"

namespace fraccore {

enum class Side { left, right };

// Fractional order; each operator checks its own admissible range and
// reports the operator name when the value is outside it.
struct FracOrder {
  double alpha;
  FracOrder(double a) : alpha(a) {
    if (!std::isfinite(a))
      throw std::invalid_argument("fractional order must be finite");
  }
  operator double() const { return alpha; }
};

enum class KernelKind { cf_exp, ab_ml, gauss, stretched_exp, custom };

// Non-singular relaxation kernel k(x, alpha) with its normalizer N(alpha).
// The kernel must be non-increasing in x >= 0 (fading memory); this is
// probed on the grid offsets whenever the kernel is applied.
struct KernelSpec {
  KernelKind kind = KernelKind::cf_exp;
  double beta_s = 0.5;  // stretching exponent (stretched_exp only)
  std::function<double(double x, double alpha)> k;         // custom only
  std::function<double(double alpha)> normalizer;          // custom only

  static KernelSpec exp_kernel();
  static KernelSpec ml_kernel();
  static KernelSpec gauss_kernel();
  static KernelSpec stretched_kernel(double beta_s);
  static KernelSpec custom_kernel(std::function<double(double, double)> k,
                                  std::function<double(double)> normalizer);

  double eval(double x, double alpha) const;
  double norm(double alpha) const;
};

struct TemperedParams {
  double alpha;   // in (0,1) or (1,2) for the derivative forms
  double lambda;  // tempering rate, >= 0
};

struct FellerParams {
  double alpha;  // in (0,2]
  double theta;  // skewness, |theta| <= min(alpha, 2 - alpha)
};

struct EKParams {
  double gamma;
  double mu;   // >= 0
  double eta;  // > 0
};

enum class RieszMode { potential, derivative };
enum class EKMode { integral, derivative };
enum class TemperedMode { deriv, integ, rl_deriv };
enum class ConformableVariant { khalil, katugampola };

// Riemann-Liouville integral J^alpha, alpha >= 0 (0 is the identity).
// Orders above 1 are peeled off with exact trapezoid J^1 factors.
SampledFunction rl_integral(const SampledFunction& f, FracOrder alpha,
                            Side side = Side::left);

// Riemann-Liouville derivative, alpha in (0,1]: d/dx of J^{1-alpha}.
SampledFunction rl_derivative(const SampledFunction& f, FracOrder alpha,
                              Side side = Side::left);

// Caputo derivative, alpha in (0,1], classic L1 scheme; alpha = 1 falls
// back to finite_diff.
SampledFunction caputo_derivative(const SampledFunction& f, FracOrder alpha,
                                  Side side = Side::left);

// Caputo derivative through its diffusive (infinite-state) representation,
// alpha in (0,1); quad_nodes >= 4 auxiliary states.
SampledFunction caputo_diffusive(const SampledFunction& f, FracOrder alpha,
                                 int quad_nodes = 64);

// Grunwald-Letnikov derivative, alpha > 0.  memory < 0 keeps the full
// history; otherwise only the most recent `memory` nodes are used
// (short-memory principle).
SampledFunction gl_derivative(const SampledFunction& f, FracOrder alpha,
                              Side side = Side::left, int memory = -1);

// Grunwald-Letnikov fractional integral, alpha >= 0.
SampledFunction gl_integral(const SampledFunction& f, FracOrder alpha,
                            Side side = Side::left);

// Marchaud derivative, alpha in (0,1).  The hypersingular integral is
// truncated at distance eps (default h, must be >= h; quantized to whole
// intervals).  Note the value at the starting endpoint is +-inf when
// f(a) != 0.
SampledFunction marchaud(const SampledFunction& f, FracOrder alpha,
                         Side side = Side::left, double eps = -1.0);

// Riesz fractional potential (alpha in (0,1)) or derivative (alpha in
// (0,2), alpha != 1), built from the two one-sided operators.
SampledFunction riesz_apply(const SampledFunction& f, FracOrder alpha,
                            RieszMode mode);

// Riesz-Feller derivative with skewness theta, alpha in (0,2].
SampledFunction riesz_feller(const SampledFunction& f, const FellerParams& p);

// Weyl derivative of a periodic sample set via the Fourier multiplier
// (+-ik)^alpha.  The grid must span one full period with the first value
// repeated at the end.
SampledFunction weyl_derivative(const SampledFunction& f, FracOrder alpha,
                                Side side = Side::left);

// Erdelyi-Kober integral / derivative on a grid with a > 0.  The integral
// is anchored at the left edge of the grid.
SampledFunction erdelyi_kober(const SampledFunction& f, const EKParams& p,
                              EKMode mode);

// Caputo-Fabrizio derivative (exponential-kernel general Caputo form),
// alpha in (0,1).
SampledFunction caputo_fabrizio(const SampledFunction& f, FracOrder alpha,
                                const KernelSpec& k = KernelSpec::exp_kernel());

// General Caputo / general Riemann-Liouville derivatives with a
// non-singular kernel, alpha in (0,1).
SampledFunction gc_derivative(const SampledFunction& f, FracOrder alpha,
                              const KernelSpec& k);
SampledFunction grl_derivative(const SampledFunction& f, FracOrder alpha,
                               const KernelSpec& k);

// Tempered fractional operators.  deriv/rl_deriv need alpha in (0,1) or
// (1,2); integ accepts any alpha > 0.
SampledFunction tempered_apply(const SampledFunction& f,
                               const TemperedParams& p, TemperedMode mode,
                               Side side = Side::left);

// Conformable derivative t^{1-alpha} f'(t), alpha in (0,1], grid.a > 0.
SampledFunction conformable(const SampledFunction& f, FracOrder alpha,
                            ConformableVariant variant = ConformableVariant::khalil);

// Hausdorff derivative: df/d(t^sigma), sigma > 0, grid.a > 0.
SampledFunction hausdorff(const SampledFunction& f, double sigma);

// Jumarie's modified Riemann-Liouville derivative: RL derivative of
// f - f(a), alpha in (0,1].
SampledFunction jumarie(const SampledFunction& f, FracOrder alpha);

}  // namespace fraccore
