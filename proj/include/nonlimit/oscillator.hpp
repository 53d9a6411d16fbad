#pragma once

// Discrete free oscillator x'' + omega^2 x = 0 with non-limit derivatives.
//
// Substituting x = mu^(t/tau) gives (mu - 1)^2 = -omega^2 tau^2, so the
// growth factors are mu = 1 +/- i tau omega and the general solution is
//   x(t) = C1 (1 + i tau omega)^(t/tau) + C2 (1 - i tau omega)^(t/tau).
// As tau -> 0 this tends to C1 e^(i omega t) + C2 e^(-i omega t).

#include <cstddef>
#include <utility>

#include "nonlimit/types.hpp"

namespace nonlimit {

struct OscSolution {
  Complex c1;
  Complex c2;
  double omega;
  Step tau;
};

[[nodiscard]] std::pair<Complex, Complex> osc_growth_factors(double omega, Step tau);

/// Principal-branch powers, so any real t is accepted; only grid points
/// t = n * tau are exact solutions of the difference equation.
[[nodiscard]] Complex osc_eval(const OscSolution& sol, double t);

/// Integer-power evaluation at grid index n.
[[nodiscard]] Complex osc_eval_step(const OscSolution& sol, long n);

/// Constants for x(0) = x0 and non-limit derivative at 0 equal to v0.
[[nodiscard]] OscSolution osc_fit(Complex x0, Complex v0, double omega, Step tau);

[[nodiscard]] Complex osc_classical(Complex c1, Complex c2, double omega, double t);

[[nodiscard]] GridSignal osc_sample(const OscSolution& sol, std::size_t count);

}  // namespace nonlimit
