#include "fraccore/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fraccore/expr.hpp"
#include "fraccore/matrixop.hpp"
#include "fraccore/operators.hpp"
#include "fraccore/pde.hpp"

namespace fraccore {

namespace {

// Post-parse problems that are still the caller's fault (missing files,
// inconsistent flag combinations): exit code 1, like CLI11 parse errors.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      throw usage_error(std::string("bad ") + what + " list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw usage_error(std::string("empty ") + what + " list");
  return out;
}

Grid1D parse_grid_arg(const std::string& s, const char* flag) {
  std::vector<double> parts = parse_list(s, flag);
  if (parts.size() != 3)
    throw usage_error(std::string(flag) + " must be a,b,n");
  double nd = parts[2];
  int n = static_cast<int>(nd);
  if (nd != n || n < 1)
    throw usage_error(std::string(flag) + ": n must be a positive integer");
  return make_uniform_grid(parts[0], parts[1], n);
}

struct IOOpts {
  std::string expr, in, out, grid;

  void attach(CLI::App* sub) {
    auto* g = sub->add_option_group("input");
    g->add_option("--expr", expr, "expression in x to sample");
    g->add_option("--in", in, "input CSV file with x,value rows");
    g->require_option(1);
    sub->add_option("--grid", grid, "sampling grid a,b,n (with --expr)");
    sub->add_option("--out", out, "output file (default stdout)");
  }

  SampledFunction load() const {
    if (!in.empty()) {
      std::ifstream fs(in);
      if (!fs) throw usage_error("cannot open input file: " + in);
      return read_csv(fs);
    }
    if (grid.empty()) throw usage_error("--grid is required with --expr");
    Grid1D g = parse_grid_arg(grid, "--grid");
    ExprPtr e = parse_expression(expr);
    return sample(g, [&](double x) { return eval_expression(e, x); });
  }

  void emit(std::ostream& stdout_stream, const SampledFunction& f) const {
    if (out.empty()) {
      write_csv(stdout_stream, f);
      return;
    }
    std::ofstream fs(out);
    if (!fs) throw usage_error("cannot open output file: " + out);
    write_csv(fs, f);
  }
};

Side parse_side(const std::string& s) {
  return s == "right" ? Side::right : Side::left;
}

KernelSpec make_kernel(const std::string& name, double beta_s) {
  if (name == "exp") return KernelSpec::exp_kernel();
  if (name == "ml") return KernelSpec::ml_kernel();
  if (name == "gauss") return KernelSpec::gauss_kernel();
  return KernelSpec::stretched_kernel(beta_s);
}

void print_value(std::ostream& os, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g\n", v);
  os << buf;
}

std::vector<double> make_u0(const std::string& spec, const Grid1D& x) {
  if (spec == "delta") return delta_initial_condition(x);
  ExprPtr e = parse_expression(spec);
  SampledFunction s = sample(x, [&](double v) { return eval_expression(e, v); });
  return s.values;
}

void emit_solution(const std::string& out, std::ostream& stdout_stream,
                   const DiffusionSolution& sol) {
  if (out.empty()) {
    write_solution_csv(stdout_stream, sol);
    return;
  }
  std::ofstream fs(out);
  if (!fs) throw usage_error("cannot open output file: " + out);
  write_solution_csv(fs, sol);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  SeriesConfig cfg;
  if (const char* tol_env = std::getenv("FRACCORE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(tol_env, &end);
    if (end == tol_env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      err << "error: invalid FRACCORE_TOL value\n";
      return 1;
    }
    cfg.tol = v;
  }

  CLI::App app{"fraccore: fractional integrals, derivatives and diffusion"};
  app.require_subcommand(1);

  // ---- integ ----
  auto* integ = app.add_subcommand("integ", "fractional integral of a function");
  IOOpts integ_io;
  integ_io.attach(integ);
  std::string integ_op = "rl", integ_side = "left";
  double integ_alpha = 0.5, integ_lambda = 0.0;
  double integ_ekg = 0.0, integ_eke = 1.0;
  integ->add_option("--op", integ_op, "rl|gl|tempered|erdelyi-kober|riesz-potential")
      ->check(CLI::IsMember({"rl", "gl", "tempered", "erdelyi-kober",
                             "riesz-potential"}));
  integ->add_option("--alpha", integ_alpha, "fractional order")->required();
  integ->add_option("--side", integ_side)->check(CLI::IsMember({"left", "right"}));
  integ->add_option("--lambda", integ_lambda, "tempering rate");
  integ->add_option("--ek-gamma", integ_ekg, "Erdelyi-Kober gamma");
  integ->add_option("--ek-eta", integ_eke, "Erdelyi-Kober eta");

  // ---- deriv ----
  auto* deriv = app.add_subcommand("deriv", "fractional derivative of a function");
  IOOpts deriv_io;
  deriv_io.attach(deriv);
  std::string deriv_op = "rl", deriv_side = "left", deriv_kernel = "exp";
  std::string deriv_variant = "khalil";
  double deriv_alpha = 0.5, deriv_lambda = 0.0, deriv_theta = 0.0;
  double deriv_eps = -1.0, deriv_sigma = 0.5, deriv_beta_s = 0.5;
  double deriv_ekg = 0.0, deriv_eke = 1.0;
  int deriv_memory = -1, deriv_qnodes = 64;
  bool deriv_tempered_rl = false;
  deriv->add_option("--op", deriv_op,
                    "rl|caputo|caputo-diffusive|gl|marchaud|riesz|riesz-feller|"
                    "weyl|erdelyi-kober|caputo-fabrizio|gc|grl|tempered|"
                    "conformable|hausdorff|jumarie")
      ->check(CLI::IsMember({"rl", "caputo", "caputo-diffusive", "gl",
                             "marchaud", "riesz", "riesz-feller", "weyl",
                             "erdelyi-kober", "caputo-fabrizio", "gc", "grl",
                             "tempered", "conformable", "hausdorff", "jumarie"}));
  deriv->add_option("--alpha", deriv_alpha, "fractional order");
  deriv->add_option("--side", deriv_side)->check(CLI::IsMember({"left", "right"}));
  deriv->add_option("--memory", deriv_memory, "short-memory window (gl)");
  deriv->add_option("--eps", deriv_eps, "truncation distance (marchaud)");
  deriv->add_option("--theta", deriv_theta, "skewness (riesz-feller)");
  deriv->add_option("--lambda", deriv_lambda, "tempering rate (tempered)");
  deriv->add_flag("--tempered-rl", deriv_tempered_rl,
                  "tempered: include the Riemann-Liouville lambda terms");
  deriv->add_option("--kernel", deriv_kernel, "gc/grl kernel: exp|ml|gauss|stretched")
      ->check(CLI::IsMember({"exp", "ml", "gauss", "stretched"}));
  deriv->add_option("--beta-s", deriv_beta_s, "stretching exponent");
  deriv->add_option("--variant", deriv_variant, "conformable variant")
      ->check(CLI::IsMember({"khalil", "katugampola"}));
  deriv->add_option("--sigma", deriv_sigma, "Hausdorff exponent");
  deriv->add_option("--quad-nodes", deriv_qnodes, "caputo-diffusive quadrature nodes");
  deriv->add_option("--ek-gamma", deriv_ekg, "Erdelyi-Kober gamma");
  deriv->add_option("--ek-eta", deriv_eke, "Erdelyi-Kober eta");

  // ---- scalar special functions ----
  auto* mlf = app.add_subcommand("mlf", "Mittag-Leffler function value");
  double mlf_alpha = 1.0, mlf_beta = 1.0, mlf_gamma = 1.0, mlf_x = 0.0;
  mlf->add_option("--alpha", mlf_alpha)->required();
  mlf->add_option("--beta", mlf_beta);
  mlf->add_option("--gamma", mlf_gamma);
  mlf->add_option("--x", mlf_x)->required();

  auto* wrightc = app.add_subcommand("wright", "Wright function value");
  std::string wright_aux;
  double wright_lambda = 0.5, wright_mu = 1.0, wright_z = 0.0, wright_nu = 0.5;
  wrightc->add_option("--lambda", wright_lambda);
  wrightc->add_option("--mu", wright_mu);
  wrightc->add_option("--z", wright_z)->required();
  wrightc->add_option("--aux", wright_aux, "auxiliary function F or M")
      ->check(CLI::IsMember({"F", "M"}));
  wrightc->add_option("--nu", wright_nu, "auxiliary index");

  auto* weights = app.add_subcommand("weights", "Grunwald-Letnikov weights");
  double weights_alpha = 0.5;
  int weights_n = 8;
  weights->add_option("--alpha", weights_alpha)->required();
  weights->add_option("--n", weights_n)->required();

  // ---- solvers ----
  auto* strip = app.add_subcommand("strip-solve", "linear FDE D^alpha y = lambda y + f");
  double strip_alpha = 0.5, strip_lambda = -1.0, strip_y0 = 1.0;
  std::string strip_grid, strip_forcing, strip_out;
  strip->add_option("--alpha", strip_alpha)->required();
  strip->add_option("--lambda", strip_lambda)->required();
  strip->add_option("--y0", strip_y0);
  strip->add_option("--grid", strip_grid, "time grid a,b,n")->required();
  strip->add_option("--forcing", strip_forcing, "forcing expression (default 0)");
  strip->add_option("--out", strip_out);

  auto* diff = app.add_subcommand("solve-diffusion", "time-fractional diffusion");
  double diff_beta = 0.5;
  std::string diff_form = "caputo", diff_xgrid, diff_tgrid, diff_u0 = "delta",
              diff_out;
  diff->add_option("--beta", diff_beta)->required();
  diff->add_option("--form", diff_form)->check(CLI::IsMember({"caputo", "rl"}));
  diff->add_option("--xgrid", diff_xgrid, "space grid a,b,n")->required();
  diff->add_option("--tgrid", diff_tgrid, "time grid 0,T,m")->required();
  diff->add_option("--u0", diff_u0, "initial profile expression or 'delta'");
  diff->add_option("--out", diff_out);

  auto* dist = app.add_subcommand("solve-distributed", "distributed-order diffusion");
  std::string dist_nodes, dist_weights, dist_xgrid, dist_tgrid,
      dist_u0 = "delta", dist_out;
  int dist_uniform = 0;
  dist->add_option("--nodes", dist_nodes, "order nodes b1,b2,...");
  dist->add_option("--weights", dist_weights, "order weights w1,w2,...");
  dist->add_option("--uniform", dist_uniform,
                   "use an m-point quadrature of the uniform order density");
  dist->add_option("--xgrid", dist_xgrid, "space grid a,b,n")->required();
  dist->add_option("--tgrid", dist_tgrid, "time grid 0,T,m")->required();
  dist->add_option("--u0", dist_u0, "initial profile expression or 'delta'");
  dist->add_option("--out", dist_out);

  auto* mom = app.add_subcommand("moments", "mass, mean and second moment of a profile");
  std::string mom_in;
  mom->add_option("--in", mom_in, "CSV file with x,value rows")->required();

  std::vector<std::string> argv_like;
  argv_like.reserve(args.size() + 1);
  argv_like.push_back("fraccore");
  for (const std::string& a : args) argv_like.push_back(a);
  std::vector<const char*> argv;
  for (const std::string& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (integ->parsed()) {
      SampledFunction f = integ_io.load();
      Side side = parse_side(integ_side);
      SampledFunction r;
      if (integ_op == "rl") {
        r = rl_integral(f, integ_alpha, side);
      } else if (integ_op == "gl") {
        r = gl_integral(f, integ_alpha, side);
      } else if (integ_op == "tempered") {
        r = tempered_apply(f, {integ_alpha, integ_lambda}, TemperedMode::integ,
                           side);
      } else if (integ_op == "erdelyi-kober") {
        r = erdelyi_kober(f, {integ_ekg, integ_alpha, integ_eke},
                          EKMode::integral);
      } else {
        r = riesz_apply(f, integ_alpha, RieszMode::potential);
      }
      integ_io.emit(out, r);
    } else if (deriv->parsed()) {
      SampledFunction f = deriv_io.load();
      Side side = parse_side(deriv_side);
      SampledFunction r;
      if (deriv_op == "rl") {
        r = rl_derivative(f, deriv_alpha, side);
      } else if (deriv_op == "caputo") {
        r = caputo_derivative(f, deriv_alpha, side);
      } else if (deriv_op == "caputo-diffusive") {
        r = caputo_diffusive(f, deriv_alpha, deriv_qnodes);
      } else if (deriv_op == "gl") {
        r = gl_derivative(f, deriv_alpha, side, deriv_memory);
      } else if (deriv_op == "marchaud") {
        r = marchaud(f, deriv_alpha, side, deriv_eps);
      } else if (deriv_op == "riesz") {
        r = riesz_apply(f, deriv_alpha, RieszMode::derivative);
      } else if (deriv_op == "riesz-feller") {
        r = riesz_feller(f, {deriv_alpha, deriv_theta});
      } else if (deriv_op == "weyl") {
        r = weyl_derivative(f, deriv_alpha, side);
      } else if (deriv_op == "erdelyi-kober") {
        r = erdelyi_kober(f, {deriv_ekg, deriv_alpha, deriv_eke},
                          EKMode::derivative);
      } else if (deriv_op == "caputo-fabrizio") {
        r = caputo_fabrizio(f, deriv_alpha);
      } else if (deriv_op == "gc") {
        r = gc_derivative(f, deriv_alpha, make_kernel(deriv_kernel, deriv_beta_s));
      } else if (deriv_op == "grl") {
        r = grl_derivative(f, deriv_alpha, make_kernel(deriv_kernel, deriv_beta_s));
      } else if (deriv_op == "tempered") {
        r = tempered_apply(f, {deriv_alpha, deriv_lambda},
                           deriv_tempered_rl ? TemperedMode::rl_deriv
                                             : TemperedMode::deriv,
                           side);
      } else if (deriv_op == "conformable") {
        r = conformable(f, deriv_alpha,
                        deriv_variant == "khalil"
                            ? ConformableVariant::khalil
                            : ConformableVariant::katugampola);
      } else if (deriv_op == "hausdorff") {
        r = hausdorff(f, deriv_sigma);
      } else {
        r = jumarie(f, deriv_alpha);
      }
      deriv_io.emit(out, r);
    } else if (mlf->parsed()) {
      MLParams p{mlf_alpha, mlf_beta, mlf_gamma};
      print_value(out, mittag_leffler(p, mlf_x, cfg));
    } else if (wrightc->parsed()) {
      if (!wright_aux.empty()) {
        WrightKind kind = wright_aux == "F" ? WrightKind::F : WrightKind::M;
        print_value(out, wright_auxiliary(kind, wright_nu, wright_z, cfg));
      } else {
        print_value(out, wright(wright_lambda, wright_mu, wright_z, cfg));
      }
    } else if (weights->parsed()) {
      std::vector<double> w = gl_weights(weights_alpha, weights_n);
      out << "k,weight\n";
      char buf[48];
      for (size_t k = 0; k < w.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k, w[k]);
        out << buf;
      }
    } else if (strip->parsed()) {
      Grid1D g = parse_grid_arg(strip_grid, "--grid");
      SampledFunction forcing;
      if (strip_forcing.empty()) {
        forcing.grid = g;
        forcing.values.assign(g.nodes(), 0.0);
      } else {
        ExprPtr e = parse_expression(strip_forcing);
        forcing = sample(g, [&](double x) { return eval_expression(e, x); });
      }
      SampledFunction y = solve_linear_fde(strip_alpha, strip_lambda, forcing,
                                           strip_y0);
      IOOpts io;
      io.out = strip_out;
      io.emit(out, y);
    } else if (diff->parsed()) {
      DiffusionProblem p;
      p.beta = diff_beta;
      p.x_grid = parse_grid_arg(diff_xgrid, "--xgrid");
      p.t_grid = parse_grid_arg(diff_tgrid, "--tgrid");
      p.u0 = make_u0(diff_u0, p.x_grid);
      p.form = diff_form == "rl" ? DiffusionForm::rl : DiffusionForm::caputo;
      emit_solution(diff_out, out, solve_time_fractional_diffusion(p));
    } else if (dist->parsed()) {
      DistributedOrderSpec spec;
      if (dist_uniform > 0) {
        if (!dist_nodes.empty() || !dist_weights.empty())
          throw usage_error("--uniform excludes --nodes/--weights");
        spec = uniform_order_quadrature(dist_uniform);
      } else {
        if (dist_nodes.empty() || dist_weights.empty())
          throw usage_error("need --nodes and --weights (or --uniform m)");
        spec.nodes = parse_list(dist_nodes, "--nodes");
        spec.weights = parse_list(dist_weights, "--weights");
      }
      DiffusionProblem p;
      p.x_grid = parse_grid_arg(dist_xgrid, "--xgrid");
      p.t_grid = parse_grid_arg(dist_tgrid, "--tgrid");
      p.u0 = make_u0(dist_u0, p.x_grid);
      p.form = DiffusionForm::caputo;
      emit_solution(dist_out, out, solve_distributed_order_diffusion(spec, p));
    } else if (mom->parsed()) {
      std::ifstream fs(mom_in);
      if (!fs) throw usage_error("cannot open input file: " + mom_in);
      Moments m = moments(read_csv(fs));
      out << "mass,mean,second_moment\n";
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", m.mass, m.mean,
                    m.second);
      out << buf;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace fraccore
