#include "fraccore/grid.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace fraccore {

Grid1D make_uniform_grid(double a, double b, int n) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("make_uniform_grid: endpoints must be finite");
  if (!(b > a))
    throw std::invalid_argument("make_uniform_grid: need b > a");
  if (n < 1)
    throw std::invalid_argument("make_uniform_grid: need at least one interval");
  Grid1D g;
  g.a = a;
  g.b = b;
  g.n = n;
  g.h = (b - a) / n;
  return g;
}

SampledFunction sample(const Grid1D& g, const std::function<double(double)>& f) {
  SampledFunction s;
  s.grid = g;
  s.values.resize(g.nodes());
  for (int i = 0; i <= g.n; ++i) {
    double v = f(g.node(i));
    if (!std::isfinite(v)) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "sample: non-finite value at node %d (x = %.17g)", i,
                    g.node(i));
      throw std::domain_error(buf);
    }
    s.values[i] = v;
  }
  return s;
}

std::vector<double> singular_row(double alpha, int i, double h) {
  // Exact moments of (ih - t)^{alpha-1} against the piecewise-linear hat
  // basis.  With p = i - j, the interval [t_j, t_{j+1}] contributes
  //   IL to node j,   IR to node j + 1.
  std::vector<double> w(static_cast<size_t>(i) + 1, 0.0);
  const double ha = std::pow(h, alpha);
  for (int j = 0; j < i; ++j) {
    double p = static_cast<double>(i - j);
    double pm = p - 1.0;
    double pa = std::pow(p, alpha), pma = std::pow(pm, alpha);
    double pa1 = pa * p, pma1 = pma * pm;  // p^{alpha+1}, (p-1)^{alpha+1}
    double il = ha * ((pa1 - pma1) / (alpha + 1.0) - pm * (pa - pma) / alpha);
    double ir = ha * (p * (pa - pma) / alpha - (pa1 - pma1) / (alpha + 1.0));
    w[j] += il;
    w[j + 1] += ir;
  }
  return w;
}

SingularWeights singular_weights(double alpha, const Grid1D& g) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "singular_weights: alpha must lie in (0,1), got %.17g", alpha);
    throw std::invalid_argument(buf);
  }
  SingularWeights sw;
  sw.alpha = alpha;
  sw.grid = g;
  sw.rows.resize(g.nodes());
  for (int i = 0; i <= g.n; ++i) sw.rows[i] = singular_row(alpha, i, g.h);
  return sw;
}

SampledFunction finite_diff(const SampledFunction& f, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("finite_diff: order must be 1 or 2");
  const Grid1D& g = f.grid;
  if (static_cast<int>(f.values.size()) != g.nodes())
    throw std::invalid_argument("finite_diff: values/grid size mismatch");
  if (g.n < 2)
    throw std::invalid_argument("finite_diff: grid too small (need n >= 2)");
  const std::vector<double>& v = f.values;
  SampledFunction out;
  out.grid = g;
  out.values.resize(g.nodes());
  const double h = g.h;
  const int n = g.n;
  if (order == 1) {
    out.values[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    for (int i = 1; i < n; ++i) out.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    out.values[n] = (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
  } else {
    const double h2 = h * h;
    for (int i = 1; i < n; ++i)
      out.values[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / h2;
    if (n >= 3) {
      out.values[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
      out.values[n] =
          (2.0 * v[n] - 5.0 * v[n - 1] + 4.0 * v[n - 2] - v[n - 3]) / h2;
    } else {
      out.values[0] = (v[0] - 2.0 * v[1] + v[2]) / h2;
      out.values[n] = out.values[0];
    }
  }
  return out;
}

void write_csv(std::ostream& os, const SampledFunction& f) {
  os << "x,value\n";
  char buf[80];
  for (int i = 0; i < static_cast<int>(f.values.size()); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", f.grid.node(i), f.values[i]);
    os << buf;
  }
}

SampledFunction read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("read_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,value")
    throw std::invalid_argument("read_csv: expected header \"x,value\"");
  std::vector<double> xs, vs;
  int row = 1;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("read_csv: missing comma on row " +
                                  std::to_string(row));
    char* end = nullptr;
    std::string xs_str = line.substr(0, comma), vs_str = line.substr(comma + 1);
    double x = std::strtod(xs_str.c_str(), &end);
    if (end == xs_str.c_str() || *end != '\0')
      throw std::invalid_argument("read_csv: bad x on row " + std::to_string(row));
    double v = std::strtod(vs_str.c_str(), &end);
    if (end == vs_str.c_str() || *end != '\0')
      throw std::invalid_argument("read_csv: bad value on row " +
                                  std::to_string(row));
    xs.push_back(x);
    vs.push_back(v);
    ++row;
  }
  if (xs.size() < 2)
    throw std::invalid_argument("read_csv: need at least two rows");
  SampledFunction f;
  f.grid = make_uniform_grid(xs.front(), xs.back(),
                             static_cast<int>(xs.size()) - 1);
  f.values = std::move(vs);
  return f;
}

}  // namespace fraccore
