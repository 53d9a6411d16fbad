#include "nonlimit/vanderpol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>

namespace nonlimit {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool near_root(double tau, Complex root) {
  return root.imag() == 0.0 && std::abs(tau - root.real()) <= kDegeneracyTolerance;
}

}  // namespace

Complex VdpClosedForm::cycle_a() const { return std::sqrt(p) * std::sqrt(r); }

Complex VdpClosedForm::cycle_b() const { return std::sqrt(p) / std::sqrt(r); }

bool VdpClosedForm::is_real() const {
  const Complex a = cycle_a();
  const Complex b = cycle_b();
  return a.imag() == 0.0 && b.imag() == 0.0;
}

void CauchyProblem::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(v0) || !std::isfinite(t0)) {
    throw Error(ErrorKind::NonFinite, "initial data must be finite");
  }
  if (x0 == 0.0 || x0 == 1.0 || v0 == 0.0) {
    throw Error(ErrorKind::RejectedInitialData,
                "initial data excluded (x0 = 0, x0 = 1 and v0 = 0 admit no Cauchy solution): x0 = " + fmt(x0) +
                    ", v0 = " + fmt(v0));
  }
}

double vdp_lambda_capital(const VdpParams& p, double tau) {
  return 1.0 + p.lambda * tau + tau * tau * p.omega * p.omega;
}

std::pair<Complex, Complex> vdp_excluded_taus(const VdpParams& p) {
  const double w2 = p.omega * p.omega;
  const Complex root = std::sqrt(Complex(p.lambda * p.lambda - 4.0 * w2, 0.0));
  return {(-p.lambda + root) / (2.0 * w2), (-p.lambda - root) / (2.0 * w2)};
}

double vdp_omega_capital(const VdpParams& p, double tau) {
  const double denom = 2.0 + p.lambda * tau;
  if (std::abs(denom) <= kDegeneracyTolerance) {
    throw Error(ErrorKind::Pole, "Omega has a pole at 2 + lambda tau = 0 (tau = " + fmt(tau) + ")");
  }
  return 1.0 + p.omega * p.omega * tau * tau / (2.0 * denom);
}

VdpClosedForm vdp_closed_form(const VdpParams& p, double tau, Sign r_branch, Sign phase, double t0) {
  if (!std::isfinite(tau) || !std::isfinite(t0)) {
    throw Error(ErrorKind::NonFinite, "tau and t0 must be finite");
  }
  const double lt = p.lambda * tau;
  if (std::abs(lt) <= kDegeneracyTolerance) {
    throw Error(ErrorKind::Domain, "closed form needs lambda tau != 0");
  }
  const double lambda_capital = vdp_lambda_capital(p, tau);
  const auto [ex_plus, ex_minus] = vdp_excluded_taus(p);
  if (std::abs(lambda_capital) <= kDegeneracyTolerance || near_root(tau, ex_plus) || near_root(tau, ex_minus)) {
    throw Error(ErrorKind::ExcludedStep,
                "tau = " + fmt(tau) + " is excluded: Lambda = 1 + lambda tau + tau^2 omega^2 vanishes");
  }
  const double omega_capital = vdp_omega_capital(p, tau);

  const Complex p_value = (2.0 + lt) / lt;
  const Complex disc = std::sqrt(Complex(omega_capital * omega_capital - 1.0, 0.0));
  const Complex r_value = omega_capital + static_cast<double>(to_int(r_branch)) * disc;
  return VdpClosedForm{p, tau, lambda_capital, omega_capital, p_value, r_value, r_branch, phase, t0};
}

Complex vdp_eval(const VdpClosedForm& form, long n) {
  const bool even = n % 2 == 0;
  const bool take_a = even == (form.phase == Sign::Plus);
  return take_a ? form.cycle_a() : form.cycle_b();
}

Complex vdp_eval_at(const VdpClosedForm& form, double t) {
  const double k = (t - form.t0) / form.tau;
  const double n = std::nearbyint(k);
  if (!std::isfinite(k) || std::abs(k - n) > 1e-9 * std::max(1.0, std::abs(k))) {
    throw Error(ErrorKind::OffGrid, "t = " + fmt(t) + " is not on the grid t0 + n tau");
  }
  return vdp_eval(form, static_cast<long>(n));
}

std::vector<Complex> vdp_sample(const VdpClosedForm& form, std::size_t count) {
  std::vector<Complex> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = vdp_eval(form, static_cast<long>(n));
  return out;
}

std::pair<Complex, Complex> vdp_case_c_residuals(Complex p_value, Complex r_value, const VdpParams& p, double tau) {
  if (r_value == 0.0) {
    throw Error(ErrorKind::Domain, "R must be nonzero");
  }
  const double lt = p.lambda * tau;
  const double constant = 2.0 + lt + tau * tau * p.omega * p.omega;
  const Complex e_minus = -(2.0 + lt) * r_value + lt * p_value - lt * p_value / r_value + constant;
  const Complex e_plus = -(2.0 + lt) / r_value + lt * p_value - lt * p_value * r_value + constant;
  return {e_minus, e_plus};
}

double vdp_initial_speed(double x0, const VdpParams& p, double tau) {
  const double lt = p.lambda * tau;
  if (x0 == 0.0 || lt == 0.0) {
    throw Error(ErrorKind::Domain, "initial speed needs x0 != 0 and lambda tau != 0");
  }
  return (2.0 + lt - x0 * x0 * lt) / (x0 * lt * tau);
}

std::pair<Complex, Complex> vdp_tau_from_cauchy(const CauchyProblem& cp, double lambda) {
  if (cp.x0 == 0.0 || cp.v0 == 0.0 || lambda == 0.0) {
    throw Error(ErrorKind::Domain, "tau roots need x0, v0 and lambda nonzero");
  }
  const double x0 = cp.x0;
  const double d = x0 - 1.0 / x0;
  const Complex root = std::sqrt(Complex(d * d + 8.0 * cp.v0 / (lambda * x0), 0.0));
  const double base = 1.0 / x0 - x0;
  return {(base + root) / (2.0 * cp.v0), (base - root) / (2.0 * cp.v0)};
}

std::vector<CauchyCandidate> vdp_cauchy_solve(const CauchyProblem& cp, const VdpParams& p, std::size_t horizon) {
  cp.validate();
  if (horizon < 3) {
    throw Error(ErrorKind::InsufficientSamples, "residual horizon needs at least three steps");
  }
  const auto [tau_plus, tau_minus] = vdp_tau_from_cauchy(cp, p.lambda);

  std::vector<CauchyCandidate> out;
  out.reserve(4);
  for (const Sign tau_branch : {Sign::Plus, Sign::Minus}) {
    const Complex tau = tau_branch == Sign::Plus ? tau_plus : tau_minus;
    const bool tau_real = tau.imag() == 0.0;
    for (const Sign r_branch : {Sign::Plus, Sign::Minus}) {
      CauchyCandidate c{tau_branch, r_branch, tau, std::nullopt, "ok",
                        CauchyDiagnostics{kNaN, kNaN, kNaN, tau_real, tau_real && tau.real() > 0.0, kNaN}};
      if (!tau_real) {
        c.status = "complex tau";
        out.push_back(std::move(c));
        continue;
      }
      const double t = tau.real();
      c.diagnostics.lambda_capital = vdp_lambda_capital(p, t);
      try {
        const auto plus = vdp_closed_form(p, t, r_branch, Sign::Plus, cp.t0);
        const auto minus = vdp_closed_form(p, t, r_branch, Sign::Minus, cp.t0);
        const double err_plus = std::abs(vdp_eval(plus, 0) - cp.x0);
        const double err_minus = std::abs(vdp_eval(minus, 0) - cp.x0);
        const VdpClosedForm& form = err_minus < err_plus ? minus : plus;

        const auto samples = vdp_sample(form, horizon);
        c.diagnostics.nlde_residual_max = vdp_residual(std::span<const Complex>(samples), t, p).max_abs_residual;
        c.diagnostics.ic_error_x0 = std::abs(samples[0] - cp.x0);
        c.diagnostics.ic_error_v0 = std::abs((samples[1] - samples[0]) / t - cp.v0);
        c.form = form;
      } catch (const Error& e) {
        c.status = e.what();
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace nonlimit
