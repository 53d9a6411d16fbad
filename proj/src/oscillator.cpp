#include "nonlimit/oscillator.hpp"

#include <cmath>
#include <vector>

namespace nonlimit {
namespace {

void require_positive_omega(double omega) {
  if (!std::isfinite(omega) || !(omega > 0.0)) {
    throw Error(ErrorKind::Domain, "omega must be finite and positive");
  }
}

}  // namespace

std::pair<Complex, Complex> osc_growth_factors(double omega, Step tau) {
  require_positive_omega(omega);
  const double wt = omega * tau.value();
  return {Complex(1.0, wt), Complex(1.0, -wt)};
}

Complex osc_eval(const OscSolution& sol, double t) {
  const auto [mu_plus, mu_minus] = osc_growth_factors(sol.omega, sol.tau);
  const double k = t / sol.tau.value();
  return sol.c1 * std::pow(mu_plus, k) + sol.c2 * std::pow(mu_minus, k);
}

Complex osc_eval_step(const OscSolution& sol, long n) {
  const auto [mu_plus, mu_minus] = osc_growth_factors(sol.omega, sol.tau);
  // Repeated multiplication keeps grid values exactly conjugate-symmetric.
  Complex a = 1.0;
  Complex b = 1.0;
  const long steps = n < 0 ? -n : n;
  for (long i = 0; i < steps; ++i) {
    a *= mu_plus;
    b *= mu_minus;
  }
  if (n < 0) {
    a = 1.0 / a;
    b = 1.0 / b;
  }
  return sol.c1 * a + sol.c2 * b;
}

OscSolution osc_fit(Complex x0, Complex v0, double omega, Step tau) {
  require_positive_omega(omega);
  // C1 + C2 = x0, i omega (C1 - C2) = v0
  const Complex diff = v0 / Complex(0.0, omega);
  return OscSolution{0.5 * (x0 + diff), 0.5 * (x0 - diff), omega, tau};
}

Complex osc_classical(Complex c1, Complex c2, double omega, double t) {
  const Complex phase(0.0, omega * t);
  return c1 * std::exp(phase) + c2 * std::exp(-phase);
}

GridSignal osc_sample(const OscSolution& sol, std::size_t count) {
  const auto [mu_plus, mu_minus] = osc_growth_factors(sol.omega, sol.tau);
  std::vector<Complex> values;
  values.reserve(count);
  Complex a = 1.0;
  Complex b = 1.0;
  for (std::size_t n = 0; n < count; ++n) {
    values.push_back(sol.c1 * a + sol.c2 * b);
    a *= mu_plus;
    b *= mu_minus;
  }
  return GridSignal(0.0, sol.tau, std::move(values));
}

}  // namespace nonlimit
