#include "nonlimit/oracle.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nonlimit/calculus.hpp"

namespace nonlimit {

VdpParams::VdpParams(double lambda_, double omega_) : lambda(lambda_), omega(omega_) {
  if (!std::isfinite(lambda) || !std::isfinite(omega)) {
    throw Error(ErrorKind::NonFinite, "van der Pol parameters must be finite");
  }
  if (!(omega > 0.0)) {
    throw Error(ErrorKind::Domain, "omega must be positive");
  }
  if (lambda == 0.0) {
    throw Error(ErrorKind::Domain, "lambda must be nonzero");
  }
}

ResidualReport ResidualReport::from_points(std::vector<double> points) {
  ResidualReport r;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // NaN compares false, so it would be skipped silently; surface it instead.
    if (std::isnan(points[i]) || points[i] > r.max_abs_residual) {
      r.max_abs_residual = points[i];
      r.argmax_index = i;
      if (std::isnan(points[i])) break;
    }
  }
  r.per_point = std::move(points);
  return r;
}

GridField2D::GridField2D(Step tau, std::size_t nt, std::size_t ny, std::vector<Complex> values)
    : tau_(tau), nt_(nt), ny_(ny), values_(std::move(values)) {
  if (values_.size() != nt_ * ny_) {
    throw Error(ErrorKind::Domain, "field size does not match grid dimensions");
  }
}

Complex vdp_step(Complex x_n, Complex x_n1, const VdpParams& p, double tau) {
  if (!is_finite(x_n) || !is_finite(x_n1) || !std::isfinite(tau)) {
    throw Error(ErrorKind::NonFinite, "recurrence inputs must be finite");
  }
  const double lt = p.lambda * tau;
  const double wt2 = p.omega * p.omega * tau * tau;
  return 2.0 * x_n1 - x_n + lt * (1.0 - x_n * x_n) * (x_n1 - x_n) - wt2 * x_n;
}

ResidualReport vdp_residual(std::span<const Complex> x, double tau, const VdpParams& p) {
  if (x.size() < 3) {
    throw Error(ErrorKind::InsufficientSamples, "van der Pol residual needs at least three samples");
  }
  const double w2 = p.omega * p.omega;
  std::vector<double> points(x.size() - 2);
  for (std::size_t n = 0; n + 2 < x.size(); ++n) {
    const Complex dx = forward_quotient(x[n], x[n + 1], tau);
    const Complex d2x = second_quotient(x[n], x[n + 1], x[n + 2], tau);
    points[n] = std::abs(d2x - p.lambda * (1.0 - x[n] * x[n]) * dx + w2 * x[n]);
  }
  return ResidualReport::from_points(std::move(points));
}

ResidualReport vdp_residual(const GridSignal& x, const VdpParams& p) {
  return vdp_residual(std::span<const Complex>(x.values()), x.tau(), p);
}

std::vector<Complex> vdp_iterate(Complex x0, Complex x1, const VdpParams& p, double tau, std::size_t count) {
  std::vector<Complex> out;
  out.reserve(count);
  if (count > 0) out.push_back(x0);
  if (count > 1) out.push_back(x1);
  while (out.size() < count) {
    const std::size_t n = out.size();
    out.push_back(vdp_step(out[n - 2], out[n - 1], p, tau));
  }
  return out;
}

ResidualReport oscillator_residual(const GridSignal& x, double omega) {
  if (x.size() < 3) {
    throw Error(ErrorKind::InsufficientSamples, "oscillator residual needs at least three samples");
  }
  const double w2 = omega * omega;
  std::vector<double> points(x.size() - 2);
  for (std::size_t n = 0; n + 2 < x.size(); ++n) {
    points[n] = std::abs(second_quotient(x[n], x[n + 1], x[n + 2], x.tau()) + w2 * x[n]);
  }
  return ResidualReport::from_points(std::move(points));
}

ResidualReport heat_residual(const GridField2D& u, double beta) {
  if (u.nt() < 2 || u.ny() < 3) {
    throw Error(ErrorKind::InsufficientSamples, "heat residual needs at least 2 points in t and 3 in y");
  }
  const double h = u.tau();
  const std::size_t cols = u.ny() - 2;
  std::vector<double> points((u.nt() - 1) * cols);
  for (std::size_t m = 0; m + 1 < u.nt(); ++m) {
    for (std::size_t n = 0; n < cols; ++n) {
      const Complex ut = forward_quotient(u.at(m, n), u.at(m + 1, n), h);
      const Complex uyy = second_quotient(u.at(m, n), u.at(m, n + 1), u.at(m, n + 2), h);
      points[m * cols + n] = std::abs(ut - beta * uyy);
    }
  }
  return ResidualReport::from_points(std::move(points));
}

}  // namespace nonlimit
