#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "nonlimit/calculus.hpp"
#include "nonlimit/cli.hpp"
#include "nonlimit/heat.hpp"
#include "nonlimit/oracle.hpp"
#include "nonlimit/oscillator.hpp"
#include "nonlimit/random.hpp"
#include "nonlimit/vanderpol.hpp"

#ifndef NONLIMIT_VERSION
#define NONLIMIT_VERSION "0.0.0"
#endif

namespace nonlimit::cli {
namespace {

using nlohmann::json;

RunReport make_report(std::string command) {
  RunReport r;
  r.command = std::move(command);
  r.version = NONLIMIT_VERSION;
  return r;
}

void put(json& j, const std::string& key, Complex z) {
  j[key + "_re"] = z.real();
  j[key + "_im"] = z.imag();
}

std::string sign_name(Sign s) { return std::string(1, to_char(s)); }

// ---------------------------------------------------------------------------
// rules-check

struct TrialFunction {
  Complex a, b, c;
  double base;
  Complex operator()(double t) const { return a * std::pow(base, t) + b * t * t + c; }
};

TrialFunction draw_function(UniformSource& rng) {
  return {rng.complex_box(1.0), rng.complex_box(1.0), rng.complex_box(1.0), rng.uniform(0.5, 2.0)};
}

}  // namespace

CommandResult rules_check(const RulesCheckOptions& opt) {
  if (opt.trials < 1) throw Error(ErrorKind::Domain, "trials must be at least 1");

  UniformSource rng(opt.seed);
  double linearity = 0, product = 0, quotient = 0, exponential = 0, power = 0, logarithm = 0, twice = 0;

  for (int trial = 0; trial < opt.trials; ++trial) {
    const Step tau(rng.uniform(0.1, 1.0));
    const double t = rng.uniform(-1.0, 1.0);
    const TrialFunction f = draw_function(rng);
    const TrialFunction g = draw_function(rng);
    const Complex k = rng.complex_box(2.0);
    const Complex l = rng.complex_box(2.0);

    const auto combo = [&](double s) { return k * f(s) + l * g(s); };
    linearity = std::max(linearity, scaled_error(nl_derivative(combo, t, tau),
                                                 k * nl_derivative(f, t, tau) + l * nl_derivative(g, t, tau)));

    const auto fg = [&](double s) { return f(s) * g(s); };
    product = std::max(product, scaled_error(nl_derivative(fg, t, tau), rules::product(f, g, t, tau)));

    // |den| >= 2 - 0.5 * 1.4^2 > 0 on [-1, 2]
    const TrialFunction den{rng.complex_box(0.5), 0.0, Complex(rng.uniform(2.0, 3.0), rng.uniform(-1.0, 1.0)),
                            rng.uniform(0.7, 1.4)};
    const auto ratio = [&](double s) { return f(s) / den(s); };
    quotient = std::max(quotient, scaled_error(nl_derivative(ratio, t, tau), rules::quotient(f, den, t, tau)));

    const double p = rng.uniform(0.2, 3.0);
    const auto expo = [p](double s) { return Complex(std::pow(p, s)); };
    exponential = std::max(exponential, scaled_error(nl_derivative(expo, t, tau), rules::exponential(p, t, tau)));

    const TrialFunction x{rng.complex_box(0.5), rng.complex_box(0.2), rng.complex_box(0.5), rng.uniform(0.7, 1.4)};
    for (int n = 1; n <= 8; ++n) {
      const auto xn = [&](double s) { return std::pow(x(s), n); };
      power = std::max(power, scaled_error(nl_derivative(xn, t, tau), rules::power(x, n, t, tau)));
    }

    const TrialFunction pos{rng.uniform(0.0, 1.0), rng.uniform(0.0, 0.5), rng.uniform(0.5, 2.0),
                            rng.uniform(0.5, 2.0)};
    const double base = rng.uniform(0.0, 1.0) < 0.5 ? rng.uniform(0.1, 0.9) : rng.uniform(1.5, 10.0);
    const auto logx = [&](double s) { return Complex(std::log(pos(s).real()) / std::log(base)); };
    logarithm =
        std::max(logarithm, scaled_error(nl_derivative(logx, t, tau), rules::logarithm(pos, base, t, tau)));

    const auto df = [&](double s) { return nl_derivative(f, s, tau); };
    twice = std::max(twice, scaled_error(nl_second_derivative(f, t, tau), nl_derivative(df, t, tau)));
  }

  CommandResult res{make_report("rules-check"), Table{{"rule", "trials", "max_error", "tolerance", "pass"}, {}}};
  res.report.inputs = {{"seed", opt.seed}, {"trials", opt.trials}, {"tolerance", opt.tolerance}};
  const std::pair<const char*, double> results[] = {
      {"linearity", linearity}, {"product", product},     {"quotient", quotient},          {"exponential", exponential},
      {"power", power},         {"logarithm", logarithm}, {"second_derivative", twice},
  };
  for (const auto& [name, err] : results) {
    const bool pass = err <= opt.tolerance;
    res.checks_passed = res.checks_passed && pass;
    res.table.add_row({std::string(name), std::int64_t{opt.trials}, err, opt.tolerance, pass});
    res.report.outputs[std::string(name) + "_max_error"] = err;
  }
  return res;
}

CommandResult deriv(const DerivOptions& opt) {
  CommandResult res{make_report("deriv"), {}};
  const Step tau(opt.tau);
  res.report.inputs = {{"tau", opt.tau}};

  if (opt.values) {
    std::vector<Complex> samples(opt.values->begin(), opt.values->end());
    const auto d = nl_derivative(GridSignal(opt.t0, tau, std::move(samples)));
    res.report.inputs["values"] = *opt.values;
    res.report.inputs["t0"] = opt.t0;
    res.table.columns = {"n", "t", "d_re", "d_im"};
    for (std::size_t n = 0; n < d.size(); ++n) {
      res.table.add_row({static_cast<std::int64_t>(n), d.time_at(n), d[n].real(), d[n].imag()});
    }
    return res;
  }

  ScalarFunction f;
  const double a = opt.param;
  if (opt.func == "constant") {
    f = [a](double) { return Complex(a); };
  } else if (opt.func == "identity") {
    f = [](double t) { return Complex(t); };
  } else if (opt.func == "square") {
    f = [](double t) { return Complex(t * t); };
  } else if (opt.func == "exp") {
    if (!(a > 0.0)) throw Error(ErrorKind::Domain, "exp needs a positive base (--param)");
    f = [a](double t) { return Complex(std::pow(a, t)); };
  } else if (opt.func == "sin") {
    f = [a](double t) { return Complex(std::sin(a * t)); };
  } else {
    throw Error(ErrorKind::Domain, "unknown function '" + opt.func + "'");
  }
  res.report.inputs["func"] = opt.func;
  res.report.inputs["param"] = opt.param;
  res.report.inputs["t"] = opt.t;

  const Complex d1 = nl_derivative(f, opt.t, tau);
  const Complex d2 = nl_second_derivative(f, opt.t, tau);
  const Complex dx = nl_differential(f, opt.t, tau);
  put(res.report.outputs, "derivative", d1);
  put(res.report.outputs, "second_derivative", d2);
  put(res.report.outputs, "differential", dx);

  res.table.columns = {"quantity", "re", "im"};
  res.table.add_row({std::string("derivative"), d1.real(), d1.imag()});
  res.table.add_row({std::string("second_derivative"), d2.real(), d2.imag()});
  res.table.add_row({std::string("differential"), dx.real(), dx.imag()});
  return res;
}

CommandResult osc(const OscOptions& opt) {
  CommandResult res{make_report("osc"), {}};
  res.report.inputs = {{"omega", opt.omega}, {"tau", opt.tau}};

  if (opt.convergence) {
    if (opt.halvings < 1) throw Error(ErrorKind::Domain, "halvings must be at least 1");
    const double steps0 = std::nearbyint(opt.at / opt.tau);
    if (!(steps0 >= 1.0) || std::abs(steps0 * opt.tau - opt.at) > 1e-9 * std::abs(opt.at)) {
      throw Error(ErrorKind::OffGrid, "convergence point --at must be a positive multiple of tau");
    }
    res.report.inputs["at"] = opt.at;
    res.report.inputs["halvings"] = opt.halvings;
    res.table.columns = {"k", "tau", "steps", "error", "ratio"};

    const Complex exact = osc_classical(1.0, 0.0, opt.omega, opt.at);
    double previous = 0.0, worst = 0.0;
    for (int k = 0; k <= opt.halvings; ++k) {
      const long n = static_cast<long>(steps0) << k;
      const double h = opt.at / static_cast<double>(n);
      const double err = std::abs(osc_eval_step(OscSolution{1.0, 0.0, opt.omega, Step(h)}, n) - exact);
      Cell ratio;
      if (k > 0) {
        const double r = previous / err;
        ratio = r;
        worst = std::max(worst, std::abs(r - 2.0) / 2.0);
      }
      res.table.add_row({std::int64_t{k}, h, std::int64_t{n}, err, ratio});
      previous = err;
    }
    res.report.diagnostics["max_ratio_deviation"] = worst;
    res.report.diagnostics["ratio_tolerance"] = 0.05;
    res.checks_passed = worst <= 0.05;
    return res;
  }

  if (opt.steps < 3) throw Error(ErrorKind::InsufficientSamples, "steps must be at least 3");
  put(res.report.inputs, "x0", opt.x0);
  put(res.report.inputs, "v0", opt.v0);
  res.report.inputs["steps"] = opt.steps;

  const Step tau(opt.tau);
  const OscSolution sol = osc_fit(opt.x0, opt.v0, opt.omega, tau);
  const auto grid = osc_sample(sol, static_cast<std::size_t>(opt.steps));
  const auto residual = oscillator_residual(grid, opt.omega);
  const auto [mu_plus, mu_minus] = osc_growth_factors(opt.omega, tau);

  put(res.report.outputs, "c1", sol.c1);
  put(res.report.outputs, "c2", sol.c2);
  put(res.report.outputs, "mu_plus", mu_plus);
  put(res.report.outputs, "mu_minus", mu_minus);

  res.table.columns = {"n", "t", "x_re", "x_im", "residual", "classical_re", "classical_im", "abs_diff"};
  double max_diff = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double t = grid.time_at(n);
    const Complex classical = osc_classical(sol.c1, sol.c2, opt.omega, t);
    const double diff = std::abs(grid[n] - classical);
    max_diff = std::max(max_diff, diff);
    Cell r;
    if (n < residual.per_point.size()) r = residual.per_point[n];
    res.table.add_row({static_cast<std::int64_t>(n), t, grid[n].real(), grid[n].imag(), r, classical.real(),
                       classical.imag(), diff});
  }
  res.report.diagnostics["residual_max"] = residual.max_abs_residual;
  res.report.diagnostics["residual_tolerance"] = opt.tolerance;
  res.report.diagnostics["max_abs_diff_classical"] = max_diff;
  res.checks_passed = residual.max_abs_residual <= opt.tolerance;
  return res;
}

namespace {

FourierSpec make_fourier_spec(const HeatOptions& opt) {
  const double l = opt.l;
  FourierSpec spec{l, {}, opt.modes, opt.quadrature};
  if (opt.phi.rfind("sin:", 0) == 0) {
    const int k = std::stoi(opt.phi.substr(4));
    spec.phi = [l, k](double s) { return std::sin(k * std::numbers::pi * s / l); };
  } else if (opt.phi == "parabola") {
    spec.phi = [l](double s) { return s * (l - s); };
  } else if (opt.phi == "tent") {
    spec.phi = [l](double s) { return std::min(s, l - s); };
  } else {
    throw Error(ErrorKind::Domain, "unknown profile '" + opt.phi + "' (expected sin:K, parabola or tent)");
  }
  spec.validate();
  return spec;
}

}  // namespace

CommandResult heat(const HeatOptions& opt) {
  CommandResult res{make_report("heat"), {}};
  const HeatParams p(opt.alpha, opt.tau, opt.xi, opt.c1, opt.c4);
  if (opt.nt < 2 || opt.ny < 3) throw Error(ErrorKind::InsufficientSamples, "grid must be at least 2 x 3");

  res.report.inputs = {{"alpha", opt.alpha}, {"tau", opt.tau}, {"xi", opt.xi}, {"nt", opt.nt}, {"ny", opt.ny}};
  put(res.report.inputs, "c1", opt.c1);
  put(res.report.inputs, "c4", opt.c4);

  const double beta = heat_beta(p);
  const auto [root0, root1] = heat_characteristic_roots(beta);
  const auto field = heat_sample_ty(p, static_cast<std::size_t>(opt.nt), static_cast<std::size_t>(opt.ny));
  const auto residual = heat_residual(field, beta);
  res.report.outputs["beta"] = beta;
  res.report.outputs["gamma"] = heat_growth(p);
  res.report.outputs["root_0"] = root0;
  res.report.outputs["root_1"] = root1;
  res.report.diagnostics["residual_max"] = residual.max_abs_residual;
  res.report.diagnostics["residual_tolerance"] = opt.tolerance;
  res.checks_passed = residual.max_abs_residual <= opt.tolerance;

  if (!opt.series) {
    res.table.columns = {"m", "n", "t", "y", "x", "u_re", "u_im", "residual"};
    const std::size_t cols = field.ny() - 2;
    for (std::size_t m = 0; m < field.nt(); ++m) {
      for (std::size_t n = 0; n < field.ny(); ++n) {
        Cell r;
        if (m + 1 < field.nt() && n < cols) r = residual.per_point[m * cols + n];
        const Complex u = field.at(m, n);
        res.table.add_row({static_cast<std::int64_t>(m), static_cast<std::int64_t>(n), m * opt.tau, n * opt.tau,
                           n * opt.xi, u.real(), u.imag(), r});
      }
    }
    return res;
  }

  const FourierSpec spec = make_fourier_spec(opt);
  const auto coeffs = fourier_coefficients(spec);
  res.report.inputs["l"] = opt.l;
  res.report.inputs["phi"] = opt.phi;
  res.report.inputs["modes"] = opt.modes;
  res.report.inputs["quadrature"] = opt.quadrature;
  res.report.inputs["points"] = opt.points;
  res.report.inputs["seed"] = opt.seed;
  res.report.inputs["t_max"] = opt.t_max;
  res.report.outputs["fourier_coefficients"] = coeffs;

  UniformSource rng(opt.seed);
  res.table.columns = {"i", "t", "x", "classical", "mode_sum_im", "abs_diff"};
  double worst = 0.0;
  for (int i = 0; i < opt.points; ++i) {
    const double t = rng.uniform(0.0, opt.t_max);
    const double x = rng.uniform(0.0, opt.l);
    const double classical = heat_classical_series(coeffs, opt.l, opt.alpha, t, x);
    const double modes = heat_mode_sum_im(coeffs, opt.l, opt.alpha, t, x);
    const double diff = std::abs(modes - classical);
    worst = std::max(worst, diff);
    res.table.add_row({std::int64_t{i}, t, x, classical, modes, diff});
  }
  res.report.diagnostics["series_max_abs_diff"] = worst;
  res.checks_passed = res.checks_passed && worst <= opt.tolerance;
  return res;
}

CommandResult vdp(const VdpOptions& opt) {
  CommandResult res{make_report("vdp"), {}};
  const VdpParams p(opt.lambda, opt.omega);
  if (opt.steps < 3) throw Error(ErrorKind::InsufficientSamples, "steps must be at least 3");
  res.report.inputs = {{"lambda", opt.lambda}, {"omega", opt.omega}, {"t0", opt.t0}, {"steps", opt.steps}};
  res.report.diagnostics["residual_tolerance"] = opt.tolerance;

  if (opt.tau) {
    const double tau = *opt.tau;
    res.report.inputs["tau"] = tau;
    res.report.inputs["r_branch"] = sign_name(opt.r_branch);
    res.report.inputs["phase"] = sign_name(opt.phase);

    const auto form = vdp_closed_form(p, tau, opt.r_branch, opt.phase, opt.t0);
    const auto xs = vdp_sample(form, static_cast<std::size_t>(opt.steps));
    const auto residual = vdp_residual(xs, tau, p);
    const auto [em, ep] = vdp_case_c_residuals(form.p, form.r, p, tau);

    res.report.outputs["Lambda"] = form.lambda_capital;
    res.report.outputs["Omega"] = form.omega_capital;
    put(res.report.outputs, "P", form.p);
    put(res.report.outputs, "R", form.r);
    put(res.report.outputs, "A", form.cycle_a());
    put(res.report.outputs, "B", form.cycle_b());
    res.report.outputs["real_cycle"] = form.is_real();
    res.report.diagnostics["case_c_abs_minus"] = std::abs(em);
    res.report.diagnostics["case_c_abs_plus"] = std::abs(ep);
    res.report.diagnostics["residual_max"] = residual.max_abs_residual;
    res.checks_passed = residual.max_abs_residual <= opt.tolerance;

    res.table.columns = {"n", "t", "x_re", "x_im", "residual"};
    for (std::size_t n = 0; n < xs.size(); ++n) {
      Cell r;
      if (n < residual.per_point.size()) r = residual.per_point[n];
      res.table.add_row({static_cast<std::int64_t>(n), opt.t0 + static_cast<double>(n) * tau, xs[n].real(),
                         xs[n].imag(), r});
    }
    return res;
  }

  if (!opt.x0 || !opt.v0) {
    throw Error(ErrorKind::Domain, "vdp needs either --tau or both --x0 and --v0");
  }
  const CauchyProblem cp{*opt.x0, *opt.v0, opt.t0};
  res.report.inputs["x0"] = cp.x0;
  res.report.inputs["v0"] = cp.v0;
  const auto candidates = vdp_cauchy_solve(cp, p, static_cast<std::size_t>(opt.steps));

  res.table.columns = {"tau_branch", "r_branch", "status",   "tau_re",      "tau_im",      "tau_positive",
                       "Lambda",     "Omega",    "P_re",     "P_im",        "R_re",        "R_im",
                       "A_re",       "A_im",     "B_re",     "B_im",        "phase",       "real_cycle",
                       "residual_max", "ic_error_x0", "ic_error_v0"};
  int admissible = 0;
  for (const auto& c : candidates) {
    std::vector<Cell> row{sign_name(c.tau_branch), sign_name(c.r_branch), c.status, c.tau.real(), c.tau.imag(),
                          c.diagnostics.tau_positive};
    if (c.form) {
      ++admissible;
      const auto& f = *c.form;
      const Complex a = f.cycle_a(), b = f.cycle_b();
      row.insert(row.end(), {f.lambda_capital, f.omega_capital, f.p.real(), f.p.imag(), f.r.real(), f.r.imag(),
                             a.real(), a.imag(), b.real(), b.imag(), sign_name(f.phase), f.is_real(),
                             c.diagnostics.nlde_residual_max, c.diagnostics.ic_error_x0, c.diagnostics.ic_error_v0});
      if (!(c.diagnostics.nlde_residual_max <= opt.tolerance)) res.checks_passed = false;
    } else {
      Cell lambda_capital;
      if (c.diagnostics.tau_real) lambda_capital = c.diagnostics.lambda_capital;
      row.push_back(lambda_capital);
    }
    res.table.add_row(std::move(row));
  }
  res.report.diagnostics["admissible_candidates"] = admissible;
  res.report.diagnostics["note"] =
      "ic_error_x0 and ic_error_v0 are measured, not enforced: a 2-cycle fixes both x(t0) x(t0+tau) = P and "
      "x(t0) / x(t0+tau) = R^(+/-1), which generic (x0, v0) cannot satisfy together";
  return res;
}

}  // namespace nonlimit::cli
