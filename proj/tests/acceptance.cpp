// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nonlimit/calculus.hpp"
#include "nonlimit/cli.hpp"
#include "nonlimit/heat.hpp"
#include "nonlimit/oracle.hpp"
#include "nonlimit/oscillator.hpp"
#include "nonlimit/random.hpp"
#include "nonlimit/vanderpol.hpp"

using namespace nonlimit;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Calculus identities on >= 100 random trials, within 1 s.
Verdict calculus_identities() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = cli::rules_check(cli::RulesCheckOptions{42, 100, 1e-12});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double worst = 0.0;
  for (const auto& row : r.table.rows) worst = std::max(worst, std::get<double>(row[2]));
  return {r.checks_passed && seconds < 1.0,
          fmt("7 rules x 100 trials (power n = 1..8), worst scaled error %.3g, %.3f s", worst, seconds)};
}

// 2. Oscillator general solution is exact on the grid.
Verdict oscillator_exactness() {
  UniformSource rng(2);
  double worst_residual = 0.0, worst_growth = 0.0;
  for (int i = 0; i < 50; ++i) {
    // omega tau <= 0.25 keeps |mu|^64 below 8, so an absolute 1e-10 is meaningful.
    const double tau = rng.uniform(0.05, 0.5);
    const double omega = rng.uniform(0.1, 0.25 / tau);
    const OscSolution s{rng.complex_box(1.0), rng.complex_box(1.0), omega, Step(tau)};
    worst_residual = std::max(worst_residual, oscillator_residual(osc_sample(s, 64), omega).max_abs_residual);

    const double expected = std::sqrt(1.0 + omega * omega * tau * tau);
    for (const OscSolution& mode : {OscSolution{s.c1, 0.0, omega, s.tau}, OscSolution{0.0, s.c2, omega, s.tau}}) {
      const auto g = osc_sample(mode, 64);
      for (std::size_t n = 0; n + 1 < g.size(); ++n) {
        worst_growth = std::max(worst_growth, std::abs(std::abs(g[n + 1]) / std::abs(g[n]) - expected));
      }
    }
  }
  return {worst_residual <= 1e-10 && worst_growth <= 1e-12,
          fmt("50 sets x 64 steps: residual %.3g, growth-factor error %.3g", worst_residual, worst_growth)};
}

// 3. First-order convergence to exp(i omega t).
Verdict oscillator_limit() {
  const Complex exact = osc_classical(1.0, 0.0, 1.0, 1.0);
  double err[3];
  const double taus[3] = {1e-3, 5e-4, 2.5e-4};
  for (int k = 0; k < 3; ++k) {
    const long n = std::lround(1.0 / taus[k]);
    err[k] = std::abs(osc_eval_step(OscSolution{1.0, 0.0, 1.0, Step(taus[k])}, n) - exact);
  }
  const double r1 = err[0] / err[1], r2 = err[1] / err[2];
  const bool pass = std::abs(r1 - 2.0) <= 0.1 && std::abs(r2 - 2.0) <= 0.1;
  return {pass, fmt("errors %.6g, %.6g, %.6g; ratios %.5f, %.5f", err[0], err[1], err[2], r1, r2)};
}

// 4. Heat closed form is exact; injected single-variable exponentials are not.
Verdict heat_exactness() {
  UniformSource rng(4);
  double worst = 0.0, min_margin = INFINITY;
  for (int i = 0; i < 20; ++i) {
    // gamma - 1 in [0.01, 0.05] keeps the 32 x 32 field O(1..500).
    const double alpha = rng.uniform(0.2, 5.0);
    const double tau = rng.uniform(0.1, 1.0);
    const double xi = std::sqrt(rng.uniform(0.01, 0.05) * alpha * tau);
    const HeatParams p(alpha, tau, xi, rng.complex_box(1.0), rng.complex_box(1.0));
    const double beta = heat_beta(p);
    const double g = heat_growth(p);
    const auto field = heat_sample_ty(p, 32, 32);
    worst = std::max(worst, heat_residual(field, beta).max_abs_residual);

    const double floor = 0.1 * (g - 1.0) * (g - 1.0) / (tau * tau);
    for (bool along_y : {true, false}) {
      std::vector<Complex> v = field.values();
      for (std::size_t m = 0; m < 32; ++m)
        for (std::size_t n = 0; n < 32; ++n) v[m * 32 + n] += std::pow(g, static_cast<double>(along_y ? n : m));
      const double r = heat_residual(GridField2D(Step(tau), 32, 32, v), beta).max_abs_residual;
      min_margin = std::min(min_margin, r / floor);
    }
  }
  return {worst <= 1e-10 && min_margin >= 1.0,
          fmt("20 sets on 32x32: residual %.3g; injected terms reach >= %.3g x the floor", worst, min_margin)};
}

// 5. Imaginary part of the mode sum reproduces the classical series.
Verdict heat_series_bridge() {
  const double l = 1.0, alpha = 0.5;
  UniformSource rng(5);
  double worst = 0.0;
  for (int k : {1, 3}) {
    const FourierSpec spec{l, [=](double s) { return std::sin(k * pi * s / l); }, 20, 256};
    const auto a = fourier_coefficients(spec);
    for (int i = 0; i < 100; ++i) {
      const double t = rng.uniform(0.0, 1.0);
      const double x = rng.uniform(0.0, l);
      worst = std::max(worst, std::abs(heat_mode_sum_im(a, l, alpha, t, x) - heat_classical_series(a, l, alpha, t, x)));
    }
  }
  const auto a = fourier_coefficients(FourierSpec{l, [=](double s) { return std::sin(pi * s / l); }, 20, 256});
  double tail = 0.0;
  for (std::size_t n = 1; n < a.size(); ++n) tail = std::max(tail, std::abs(a[n]));
  const double head = std::abs(a[0] - 1.0);
  return {worst <= 1e-10 && head <= 1e-8 && tail <= 1e-8,
          fmt("max |Im sum - series| %.3g; |A_1 - 1| %.3g, max |A_n>1| %.3g", worst, head, tail)};
}

// 6. The 2-cycle closed form solves the recurrence across the parameter grid.
Verdict vdp_core_claim() {
  double worst = 0.0;
  int cases = 0;
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    for (double omega : {0.5, 1.0, 3.0}) {
      for (double tau : {0.1, 0.5, 1.0}) {
        for (Sign r : {Sign::Plus, Sign::Minus}) {
          for (Sign phase : {Sign::Plus, Sign::Minus}) {
            const auto form = vdp_closed_form(VdpParams(lambda, omega), tau, r, phase);
            const GridSignal grid(0.0, Step(tau), vdp_sample(form, 64));
            worst = std::max(worst, vdp_residual(grid, form.params).max_abs_residual);
            ++cases;
          }
        }
      }
    }
  }
  return {worst <= 1e-10, fmt("%d configurations x 64 steps: residual %.3g", cases, worst)};
}

// 7. lambda = omega = 1, tau = 0.5.
Verdict vdp_worked_instance() {
  const VdpParams p(1.0, 1.0);
  const auto form = vdp_closed_form(p, 0.5, Sign::Plus, Sign::Plus);
  const Complex a = form.cycle_a(), b = form.cycle_b();
  const double e_p = std::abs(form.p - 5.0);
  const double e_omega = std::abs(form.omega_capital - 1.05);
  const double e_r = std::abs(form.r - (1.05 + std::sqrt(0.1025)));
  const double e_ab = std::abs(a * b - 5.0);
  const double e_step = std::max(std::abs(vdp_step(a, b, p, 0.5) - a), std::abs(vdp_step(b, a, p, 0.5) - b));
  // A and B are quoted to five decimals; allow one unit in the last place.
  const bool quoted = std::abs(a - 2.61740) <= 1e-5 && std::abs(b - 1.91030) <= 1e-5;
  const bool pass = e_p <= 1e-12 && e_omega <= 1e-12 && e_r <= 1e-12 && e_ab <= 1e-12 && e_step <= 1e-12 && quoted;
  return {pass, fmt("A = %.8f, B = %.8f; |dP| %.2g, |dOmega| %.2g, |dR+| %.2g, |AB - 5| %.2g, oracle step %.2g",
                    a.real(), b.real(), e_p, e_omega, e_r, e_ab, e_step)};
}

// 8. Step roots from Cauchy data, v0 round trip, residuals of all candidates.
Verdict vdp_cauchy() {
  const auto [tp, tm] = vdp_tau_from_cauchy(CauchyProblem{2.0, 1.0}, 1.0);
  const double e_roots = std::max(std::abs(tp - 0.5), std::abs(tm + 2.0));

  UniformSource rng(8);
  double worst_speed = 0.0, worst_residual = 0.0, worst_ic = 0.0;
  int real_roots = 0, admissible = 0, flagged = 0;
  bool flags_ok = true, ic_reported = true;
  for (int i = 0; i < 100; ++i) {
    const double x0 = rng.uniform(0.0, 1.0) < 0.5 ? rng.uniform(-3.0, -0.3) : rng.uniform(0.3, 3.0);
    const double v0 = rng.uniform(0.0, 1.0) < 0.5 ? rng.uniform(-2.0, -0.2) : rng.uniform(0.2, 2.0);
    const VdpParams p(rng.uniform(0.2, 3.0), rng.uniform(0.2, 2.0));
    const CauchyProblem cp{x0, v0};

    const auto roots = vdp_tau_from_cauchy(cp, p.lambda);
    for (Complex t : {roots.first, roots.second}) {
      if (t.imag() != 0.0) continue;
      ++real_roots;
      worst_speed = std::max(worst_speed, std::abs(vdp_initial_speed(x0, p, t.real()) - v0) / std::abs(v0));
    }
    for (const auto& c : vdp_cauchy_solve(cp, p)) {
      if (c.form) {
        ++admissible;
        worst_residual = std::max(worst_residual, c.diagnostics.nlde_residual_max);
        ic_reported = ic_reported && std::isfinite(c.diagnostics.ic_error_x0) && std::isfinite(c.diagnostics.ic_error_v0);
        worst_ic = std::max({worst_ic, c.diagnostics.ic_error_x0, c.diagnostics.ic_error_v0});
      } else {
        ++flagged;
        flags_ok = flags_ok && c.status != "ok" && std::isnan(c.diagnostics.nlde_residual_max);
      }
    }
  }
  const bool pass = e_roots <= 1e-12 && real_roots > 0 && worst_speed <= 1e-10 && admissible > 0 &&
                    worst_residual <= 1e-10 && flags_ok && ic_reported;
  return {pass, fmt("roots err %.2g; v0 round trip %.2g on %d real roots; residual %.3g on %d buildable "
                    "candidates, %d flagged (complex or degenerate tau); largest ic error %.3g (reported only)",
                    e_roots, worst_speed, real_roots, worst_residual, admissible, flagged, worst_ic)};
}

// 9. Excluded steps and excluded initial data.
Verdict vdp_exclusions() {
  const VdpParams p(3.0, 1.0);
  const auto [a, b] = vdp_excluded_taus(p);
  bool pass = a.imag() == 0.0 && b.imag() == 0.0;
  double worst_lambda = 0.0;
  for (Complex t : {a, b}) {
    worst_lambda = std::max(worst_lambda, std::abs(vdp_lambda_capital(p, t.real())));
    try {
      (void)vdp_closed_form(p, t.real(), Sign::Plus, Sign::Plus);
      pass = false;
    } catch (const Error& e) {
      pass = pass && e.kind() == ErrorKind::ExcludedStep;
    }
  }
  pass = pass && worst_lambda <= 1e-12;

  int rejected = 0;
  for (const CauchyProblem& cp : {CauchyProblem{0.0, 1.0}, CauchyProblem{1.0, 1.0}, CauchyProblem{2.0, 0.0}}) {
    try {
      (void)vdp_cauchy_solve(cp, VdpParams(1.0, 1.0));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::RejectedInitialData &&
          std::string(e.what()).find("x0 = 0, x0 = 1 and v0 = 0") != std::string::npos)
        ++rejected;
    }
  }
  pass = pass && rejected == 3;
  return {pass, fmt("tau = %.15f, %.15f: |Lambda| <= %.2g, both rejected; %d/3 initial data rejected", a.real(),
                    b.real(), worst_lambda, rejected)};
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(NONLIMIT_TOOL_PATH) + " " + args;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  pclose(pipe);
  return text;
}

// 10. Byte-identical output across processes.
Verdict determinism() {
  const char* invocations[] = {
      "rules-check --seed 42",
      "--format json rules-check --seed 7 --trials 200",
      "deriv --func sin --param 2 --t 0.3 --tau 0.1",
      "osc --omega 2 --tau 0.05 --x0 1 --v0 0.5 --steps 64",
      "--format json osc --convergence",
      "heat --alpha 1 --tau 0.5 --xi 0.1",
      "--format json heat --series --phi tent --seed 9",
      "vdp --lambda 2 --omega 3 --tau 0.1 --r-branch - --phase -",
      "--format json vdp --x0 2 --v0 1",
  };
  int same = 0, total = 0;
  for (const char* args : invocations) {
    ++total;
    const std::string first = capture(args);
    if (!first.empty() && first == capture(args)) ++same;
  }
  return {same == total, fmt("%d/%d invocations identical across two runs", same, total)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"calculus identities", calculus_identities},
      {"oscillator exactness", oscillator_exactness},
      {"oscillator limit", oscillator_limit},
      {"heat exactness", heat_exactness},
      {"heat series bridge", heat_series_bridge},
      {"van der Pol 2-cycle across the parameter grid", vdp_core_claim},
      {"van der Pol worked instance", vdp_worked_instance},
      {"Cauchy machinery", vdp_cauchy},
      {"exclusion handling", vdp_exclusions},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
