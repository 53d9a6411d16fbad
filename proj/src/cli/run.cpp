#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "nonlimit/cli.hpp"

namespace nonlimit::cli {
namespace {

const std::map<std::string, Sign> kSigns{{"+", Sign::Plus}, {"plus", Sign::Plus}, {"-", Sign::Minus},
                                         {"minus", Sign::Minus}};
const std::map<std::string, Format> kFormats{{"csv", Format::Csv}, {"json", Format::Json}};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-limit (fixed-step) calculus: closed forms and recurrence checks", "nonlimit"};
  app.require_subcommand(1);

  Format format = Format::Csv;
  std::string out_path;
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::function<CommandResult()> command;

  RulesCheckOptions rules_opt;
  auto* rules_cmd = app.add_subcommand("rules-check", "Check the calculus identities on seeded random inputs");
  rules_cmd->add_option("--seed", rules_opt.seed, "RNG seed");
  rules_cmd->add_option("--trials", rules_opt.trials, "Number of random trials")->check(CLI::Range(1, 1000000));
  rules_cmd->callback([&] { command = [&] { return rules_check(rules_opt); }; });

  DerivOptions deriv_opt;
  std::vector<double> deriv_values;
  auto* deriv_cmd = app.add_subcommand("deriv", "Non-limit derivative of a built-in function or of samples");
  deriv_cmd->add_option("--func", deriv_opt.func, "constant | identity | square | exp | sin");
  deriv_cmd->add_option("--param", deriv_opt.param, "Constant value, exponential base or sine frequency");
  deriv_cmd->add_option("--t", deriv_opt.t, "Evaluation time");
  deriv_cmd->add_option("--tau", deriv_opt.tau, "Step");
  auto* values_opt = deriv_cmd->add_option("--values", deriv_values, "Comma-separated samples")->delimiter(',');
  deriv_cmd->add_option("--t0", deriv_opt.t0, "Time of the first sample");
  deriv_cmd->callback([&] {
    if (values_opt->count() > 0) deriv_opt.values = deriv_values;
    command = [&] { return deriv(deriv_opt); };
  });

  OscOptions osc_opt;
  double x0_re = 1.0, x0_im = 0.0, v0_re = 0.0, v0_im = 0.0;
  auto* osc_cmd = app.add_subcommand("osc", "Discrete free oscillator: fit, tabulate and verify");
  osc_cmd->add_option("--omega", osc_opt.omega, "Frequency");
  osc_cmd->add_option("--tau", osc_opt.tau, "Step");
  osc_cmd->add_option("--x0", x0_re, "Initial value (real part)");
  osc_cmd->add_option("--x0-im", x0_im, "Initial value (imaginary part)");
  osc_cmd->add_option("--v0", v0_re, "Initial non-limit derivative (real part)");
  osc_cmd->add_option("--v0-im", v0_im, "Initial non-limit derivative (imaginary part)");
  osc_cmd->add_option("--steps", osc_opt.steps, "Grid points")->check(CLI::Range(3, 100000000));
  osc_cmd->add_flag("--convergence", osc_opt.convergence, "Step-halving study against exp(i omega t)");
  osc_cmd->add_option("--halvings", osc_opt.halvings, "Number of halvings in the convergence study");
  osc_cmd->add_option("--at", osc_opt.at, "Comparison time of the convergence study");
  osc_cmd->callback([&] {
    osc_opt.x0 = {x0_re, x0_im};
    osc_opt.v0 = {v0_re, v0_im};
    command = [&] { return osc(osc_opt); };
  });

  HeatOptions heat_opt;
  double c1_re = 0.0, c1_im = 0.0, c4_re = 1.0, c4_im = 0.0;
  auto* heat_cmd = app.add_subcommand("heat", "Discrete heat-equation closed form and Fourier-mode bridge");
  heat_cmd->add_option("--alpha", heat_opt.alpha, "Diffusivity");
  heat_cmd->add_option("--tau", heat_opt.tau, "Time step");
  heat_cmd->add_option("--xi", heat_opt.xi, "Space step");
  heat_cmd->add_option("--c1", c1_re, "C1 (real part)");
  heat_cmd->add_option("--c1-im", c1_im, "C1 (imaginary part)");
  heat_cmd->add_option("--c4", c4_re, "C4 (real part)");
  heat_cmd->add_option("--c4-im", c4_im, "C4 (imaginary part)");
  heat_cmd->add_option("--nt", heat_opt.nt, "Grid points in t")->check(CLI::Range(2, 100000));
  heat_cmd->add_option("--ny", heat_opt.ny, "Grid points in y")->check(CLI::Range(3, 100000));
  heat_cmd->add_flag("--series", heat_opt.series, "Compare the classical series with the mode sum");
  heat_cmd->add_option("--l", heat_opt.l, "Rod length");
  heat_cmd->add_option("--phi", heat_opt.phi, "Initial profile: sin:K | parabola | tent");
  heat_cmd->add_option("--modes", heat_opt.modes, "Number of Fourier modes");
  heat_cmd->add_option("--quad", heat_opt.quadrature, "Simpson panels (even, >= 16)");
  heat_cmd->add_option("--points", heat_opt.points, "Random comparison points");
  heat_cmd->add_option("--seed", heat_opt.seed, "RNG seed for comparison points");
  heat_cmd->add_option("--t-max", heat_opt.t_max, "Largest comparison time");
  heat_cmd->callback([&] {
    heat_opt.c1 = {c1_re, c1_im};
    heat_opt.c4 = {c4_re, c4_im};
    command = [&] { return heat(heat_opt); };
  });

  VdpOptions vdp_opt;
  double vdp_x0 = 0.0, vdp_v0 = 0.0, vdp_tau = 0.0;
  auto* vdp_cmd = app.add_subcommand("vdp", "van der Pol 2-cycle closed form and Cauchy candidates");
  vdp_cmd->add_option("--lambda", vdp_opt.lambda, "Damping coefficient");
  vdp_cmd->add_option("--omega", vdp_opt.omega, "Frequency");
  auto* x0_opt = vdp_cmd->add_option("--x0", vdp_x0, "Initial value");
  auto* v0_opt = vdp_cmd->add_option("--v0", vdp_v0, "Initial non-limit derivative");
  vdp_cmd->add_option("--t0", vdp_opt.t0, "Initial time");
  vdp_cmd->add_option("--steps", vdp_opt.steps, "Residual horizon in grid points")->check(CLI::Range(3, 100000000));
  auto* tau_opt = vdp_cmd->add_option("--tau", vdp_tau, "Evaluate the closed form at this step directly");
  vdp_cmd->add_option("--r-branch", vdp_opt.r_branch, "R root: + or -")->transform(CLI::CheckedTransformer(kSigns));
  vdp_cmd->add_option("--phase", vdp_opt.phase, "Starting phase: + or -")->transform(CLI::CheckedTransformer(kSigns));
  vdp_cmd->callback([&] {
    if (x0_opt->count() > 0) vdp_opt.x0 = vdp_x0;
    if (v0_opt->count() > 0) vdp_opt.v0 = vdp_v0;
    if (tau_opt->count() > 0) vdp_opt.tau = vdp_tau;
    command = [&] { return vdp(vdp_opt); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CommandResult result;
  try {
    result = command();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = render(result, format);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return 2;
    }
    file << text;
  }
  return result.checks_passed ? 0 : 1;
}

}  // namespace nonlimit::cli
