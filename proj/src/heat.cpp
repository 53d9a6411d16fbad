#include "nonlimit/heat.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nonlimit {
namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw Error(ErrorKind::Domain, std::string(name) + " must be finite and positive");
  }
}

}  // namespace

HeatParams::HeatParams(double alpha_, double tau_, double xi_, Complex c1_, Complex c4_)
    : alpha(alpha_), tau(tau_), xi(xi_), c1(c1_), c4(c4_) {
  require_positive(alpha, "alpha");
  require_positive(tau, "tau");
  require_positive(xi, "xi");
}

void FourierSpec::validate() const {
  require_positive(l, "rod length");
  if (!phi) throw Error(ErrorKind::Domain, "initial profile is not set");
  if (n_modes < 1) throw Error(ErrorKind::Domain, "n_modes must be at least 1");
  if (quadrature_points < 16 || quadrature_points % 2 != 0) {
    throw Error(ErrorKind::Domain, "quadrature_points must be even and at least 16");
  }
}

double heat_beta(const HeatParams& p) { return p.alpha * p.tau * p.tau / (p.xi * p.xi); }

double heat_growth(const HeatParams& p) { return p.xi * p.xi / (p.alpha * p.tau) + 1.0; }

std::pair<double, double> heat_characteristic_roots(double beta) {
  if (beta == 0.0 || !std::isfinite(beta)) {
    throw Error(ErrorKind::Domain, "characteristic equation needs a finite nonzero beta");
  }
  return {0.0, 1.0 / beta};
}

Complex heat_eval_ty(const HeatParams& p, double t, double y) {
  const double gamma = p.tau / heat_beta(p) + 1.0;
  return p.c1 + p.c4 * std::pow(gamma, t / p.tau + y / p.tau);
}

Complex heat_eval_tx(const HeatParams& p, double t, double x) {
  return p.c1 + p.c4 * std::pow(heat_growth(p), t / p.tau + x / p.xi);
}

GridField2D heat_sample_ty(const HeatParams& p, std::size_t nt, std::size_t ny) {
  const double gamma = heat_growth(p);
  std::vector<Complex> values(nt * ny);
  for (std::size_t m = 0; m < nt; ++m) {
    for (std::size_t n = 0; n < ny; ++n) {
      values[m * ny + n] = p.c1 + p.c4 * std::pow(gamma, static_cast<double>(m + n));
    }
  }
  return GridField2D(Step(p.tau), nt, ny, std::move(values));
}

Complex heat_limit_eval(double alpha, Complex k, Complex c1, Complex c4, double t, double x) {
  require_positive(alpha, "alpha");
  return c1 + c4 * std::exp(k * k * t / alpha) * std::exp(k * x / alpha);
}

std::vector<double> fourier_coefficients(const FourierSpec& spec) {
  spec.validate();
  const int panels = spec.quadrature_points;
  const double h = spec.l / panels;

  std::vector<double> samples(static_cast<std::size_t>(panels) + 1);
  for (int j = 0; j <= panels; ++j) {
    const double s = j * h;
    samples[j] = spec.phi(s);
    if (!std::isfinite(samples[j])) {
      throw Error(ErrorKind::NonFinite, "initial profile is not finite at " + std::to_string(s));
    }
  }

  std::vector<double> coeffs(static_cast<std::size_t>(spec.n_modes));
  for (int n = 1; n <= spec.n_modes; ++n) {
    const double kn = std::numbers::pi * n / spec.l;
    double sum = 0.0;
    for (int j = 0; j <= panels; ++j) {
      const double w = (j == 0 || j == panels) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      sum += w * samples[j] * std::sin(kn * j * h);
    }
    coeffs[n - 1] = (2.0 / spec.l) * sum * h / 3.0;
  }
  return coeffs;
}

double heat_classical_series(std::span<const double> coeffs, double l, double alpha, double t, double x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double kn = std::numbers::pi * static_cast<double>(i + 1) / l;
    sum += coeffs[i] * std::sin(kn * x) * std::exp(-alpha * kn * kn * t);
  }
  return sum;
}

double heat_classical_series(const FourierSpec& spec, double alpha, double t, double x) {
  const auto coeffs = fourier_coefficients(spec);
  return heat_classical_series(coeffs, spec.l, alpha, t, x);
}

double heat_mode_sum_im(std::span<const double> coeffs, double l, double alpha, double t, double x) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Complex kn(0.0, alpha * std::numbers::pi * static_cast<double>(i + 1) / l);
    sum += heat_limit_eval(alpha, kn, 0.0, coeffs[i], t, x);
  }
  return sum.imag();
}

double heat_mode_sum_im(const FourierSpec& spec, double alpha, double t, double x) {
  const auto coeffs = fourier_coefficients(spec);
  return heat_mode_sum_im(coeffs, spec.l, alpha, t, x);
}

}  // namespace nonlimit
