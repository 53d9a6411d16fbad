#pragma once

// Heat equation u_t - alpha u_xx = 0 with non-limit derivatives.
//
// With step tau in t and xi in x, the change y = (tau / xi) x gives
// u_t - beta u_yy = 0 with beta = alpha tau^2 / xi^2 and step tau in both
// variables. The product ansatz over the characteristic roots {0, 1/beta}
// leaves the two-constant family
//   u(t, y) = C1 + C4 gamma^(t/tau + y/tau),   gamma = tau / beta + 1,
// whose tau, xi -> 0 limit (with xi / tau -> k) is
//   u(t, x) = C1 + C4 exp(k^2 t / alpha) exp(k x / alpha).
// Choosing k_n = i alpha pi n / l turns each limit term into a Fourier mode
// of the classical Dirichlet series.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "nonlimit/oracle.hpp"
#include "nonlimit/types.hpp"

namespace nonlimit {

struct HeatParams {
  double alpha;
  double tau;
  double xi;
  Complex c1;
  Complex c4;

  HeatParams(double alpha_, double tau_, double xi_, Complex c1_, Complex c4_);
};

struct FourierSpec {
  double l;
  std::function<double(double)> phi;
  int n_modes;
  int quadrature_points = 256;

  void validate() const;
};

[[nodiscard]] double heat_beta(const HeatParams& p);

/// gamma = tau / beta + 1 = xi^2 / (alpha tau) + 1
[[nodiscard]] double heat_growth(const HeatParams& p);

/// Roots of lambda - beta lambda^2 = 0.
[[nodiscard]] std::pair<double, double> heat_characteristic_roots(double beta);

[[nodiscard]] Complex heat_eval_ty(const HeatParams& p, double t, double y);
[[nodiscard]] Complex heat_eval_tx(const HeatParams& p, double t, double x);

/// heat_eval_ty on t = m tau, y = n tau for m < nt, n < ny.
[[nodiscard]] GridField2D heat_sample_ty(const HeatParams& p, std::size_t nt, std::size_t ny);

[[nodiscard]] Complex heat_limit_eval(double alpha, Complex k, Complex c1, Complex c4, double t, double x);

/// A_n = (2/l) * integral_0^l phi(s) sin(pi n s / l) ds, n = 1..n_modes,
/// by composite Simpson over `quadrature_points` panels.
[[nodiscard]] std::vector<double> fourier_coefficients(const FourierSpec& spec);

/// sum_n A_n sin(pi n x / l) exp(-alpha (pi n / l)^2 t)
[[nodiscard]] double heat_classical_series(std::span<const double> coeffs, double l, double alpha, double t,
                                           double x);
[[nodiscard]] double heat_classical_series(const FourierSpec& spec, double alpha, double t, double x);

/// Im sum_n heat_limit_eval(alpha, i alpha pi n / l, 0, A_n, t, x)
[[nodiscard]] double heat_mode_sum_im(std::span<const double> coeffs, double l, double alpha, double t, double x);
[[nodiscard]] double heat_mode_sum_im(const FourierSpec& spec, double alpha, double t, double x);

}  // namespace nonlimit
