#pragma once

// Closed-form grid solution of the van der Pol equation
//   x'' - lambda (1 - x^2) x' + omega^2 x = 0
// with non-limit derivatives of step tau.
//
// Writing x = k^y and requiring 2y + tau y' to be constant forces y to
// alternate with (-1)^(t/tau). The two resulting algebraic equations fix
//   P = k^a3  = (2 + lambda tau) / (lambda tau)
//   R = k^2b3 = Omega +/- sqrt(Omega^2 - 1),  Omega = 1 + omega^2 tau^2 / (2 (2 + lambda tau))
// and the solution is the 2-cycle
//   x(t0 + n tau) = sqrt(P) * sqrt(R)^(s0 (-1)^n),
// alternating between A = sqrt(P R) and B = sqrt(P / R). The base k and the
// exponents a3, b3 never appear on their own and are not represented.
//
// The construction is valid while Lambda = 1 + lambda tau + omega^2 tau^2,
// lambda tau and 2 + lambda tau are all nonzero.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonlimit/oracle.hpp"
#include "nonlimit/types.hpp"

namespace nonlimit {

enum class Sign : int { Plus = 1, Minus = -1 };

[[nodiscard]] constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
[[nodiscard]] constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// |Lambda|, |lambda tau| and |2 + lambda tau| at or below this are treated as zero.
inline constexpr double kDegeneracyTolerance = 1e-12;

struct VdpClosedForm {
  VdpParams params;
  double tau;
  double lambda_capital;
  double omega_capital;
  Complex p;
  Complex r;
  Sign r_branch;
  Sign phase;
  double t0;

  /// sqrt(P R): value at even steps when phase is +.
  [[nodiscard]] Complex cycle_a() const;
  /// sqrt(P / R): value at odd steps when phase is +.
  [[nodiscard]] Complex cycle_b() const;
  /// True when both cycle values are real.
  [[nodiscard]] bool is_real() const;
};

struct CauchyProblem {
  double x0;
  double v0;
  double t0 = 0.0;

  /// Throws RejectedInitialData for x0 in {0, 1} or v0 = 0.
  void validate() const;
};

struct CauchyDiagnostics {
  double nlde_residual_max;
  double ic_error_x0;
  double ic_error_v0;
  bool tau_real;
  bool tau_positive;
  double lambda_capital;
};

struct CauchyCandidate {
  Sign tau_branch;
  Sign r_branch;
  Complex tau;
  /// Empty when tau is complex or the closed form is degenerate at tau.
  std::optional<VdpClosedForm> form;
  /// "ok", or the reason the form could not be built.
  std::string status;
  CauchyDiagnostics diagnostics;
};

[[nodiscard]] double vdp_lambda_capital(const VdpParams& p, double tau);

/// Roots of Lambda(tau) = omega^2 tau^2 + lambda tau + 1, "+" root first.
[[nodiscard]] std::pair<Complex, Complex> vdp_excluded_taus(const VdpParams& p);

/// Throws Pole when 2 + lambda tau = 0.
[[nodiscard]] double vdp_omega_capital(const VdpParams& p, double tau);

/// Throws Domain (lambda tau = 0), ExcludedStep (Lambda = 0) or Pole (2 + lambda tau = 0).
[[nodiscard]] VdpClosedForm vdp_closed_form(const VdpParams& p, double tau, Sign r_branch, Sign phase,
                                            double t0 = 0.0);

/// Value at t0 + n tau; 2-periodic in n.
[[nodiscard]] Complex vdp_eval(const VdpClosedForm& form, long n);

/// Value at time t; throws OffGrid unless (t - t0) / tau is an integer.
[[nodiscard]] Complex vdp_eval_at(const VdpClosedForm& form, double t);

[[nodiscard]] std::vector<Complex> vdp_sample(const VdpClosedForm& form, std::size_t count);

/// The two algebraic equations that the cycle must satisfy at odd and even
/// steps, returned as (E_minus, E_plus). Both vanish on a valid (P, R).
[[nodiscard]] std::pair<Complex, Complex> vdp_case_c_residuals(Complex p_value, Complex r_value, const VdpParams& p,
                                                               double tau);

/// v0 = (2 + lambda tau - x0^2 lambda tau) / (x0 lambda tau^2) = (P / x0 - x0) / tau
[[nodiscard]] double vdp_initial_speed(double x0, const VdpParams& p, double tau);

/// Roots of lambda v0 x0 tau^2 + lambda (x0^2 - 1) tau - 2 = 0, as
/// (1/x0 - x0 +/- sqrt((x0 - 1/x0)^2 + 8 v0 / (lambda x0))) / (2 v0).
[[nodiscard]] std::pair<Complex, Complex> vdp_tau_from_cauchy(const CauchyProblem& cp, double lambda);

/// All four (tau branch, R branch) candidates with recomputed diagnostics.
/// Candidates are never filtered.
[[nodiscard]] std::vector<CauchyCandidate> vdp_cauchy_solve(const CauchyProblem& cp, const VdpParams& p,
                                                            std::size_t horizon = 64);

}  // namespace nonlimit
