#include "nonlimit/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace nonlimit {
namespace {

Complex checked_eval(const ScalarFunction& f, double t) {
  const Complex v = f(t);
  if (!is_finite(v)) {
    throw Error(ErrorKind::NonFinite, "function is not finite at t = " + std::to_string(t));
  }
  return v;
}

bool is_positive_real(Complex z) { return z.imag() == 0.0 && z.real() > 0.0; }

}  // namespace

Complex nl_derivative(const ScalarFunction& f, double t, Step tau) {
  return forward_quotient(checked_eval(f, t), checked_eval(f, t + tau.value()), tau.value());
}

Complex nl_second_derivative(const ScalarFunction& f, double t, Step tau) {
  const double h = tau.value();
  // t + h + h rather than t + 2h, so this matches two nested first derivatives bit for bit.
  const double t1 = t + h;
  return second_quotient(checked_eval(f, t), checked_eval(f, t1), checked_eval(f, t1 + h), h);
}

Complex nl_differential(const ScalarFunction& f, double t, Step tau) {
  return checked_eval(f, t + tau.value()) - checked_eval(f, t);
}

GridSignal nl_derivative(const GridSignal& s) {
  if (s.size() < 2) {
    throw Error(ErrorKind::InsufficientSamples, "derivative of a signal needs at least two samples");
  }
  std::vector<Complex> out(s.size() - 1);
  for (std::size_t n = 0; n + 1 < s.size(); ++n) {
    out[n] = forward_quotient(s[n], s[n + 1], s.tau());
  }
  return GridSignal(s.t0(), s.step(), std::move(out));
}

Complex forward_quotient(Complex now, Complex next, double h) {
  if (h == 0.0 || !std::isfinite(h)) {
    throw Error(ErrorKind::Domain, "difference step must be finite and nonzero");
  }
  return (next - now) / h;
}

// Composed from two first quotients so that it equals D(D f) exactly.
Complex second_quotient(Complex now, Complex next, Complex next2, double h) {
  return forward_quotient(forward_quotient(now, next, h), forward_quotient(next, next2, h), h);
}

namespace rules {

Complex product(const ScalarFunction& f, const ScalarFunction& g, double t, Step tau) {
  const Complex df = nl_derivative(f, t, tau);
  const Complex dg = nl_derivative(g, t, tau);
  return df * checked_eval(g, t) + checked_eval(f, t) * dg + tau.value() * df * dg;
}

Complex quotient(const ScalarFunction& f, const ScalarFunction& g, double t, Step tau) {
  const Complex g_now = checked_eval(g, t);
  const Complex g_next = checked_eval(g, t + tau.value());
  if (g_now == 0.0 || g_next == 0.0) {
    throw Error(ErrorKind::Domain, "quotient rule needs a nonzero denominator at t and t + tau");
  }
  const Complex df = nl_derivative(f, t, tau);
  const Complex dg = nl_derivative(g, t, tau);
  return (g_now * df - checked_eval(f, t) * dg) / (g_now * (g_now + tau.value() * dg));
}

Complex exponential(double base, double t, Step tau) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw Error(ErrorKind::Domain, "exponential rule needs a positive finite base");
  }
  return std::pow(base, t) * (std::pow(base, tau.value()) - 1.0) / tau.value();
}

Complex power(const ScalarFunction& x, int n, double t, Step tau) {
  if (n < 1) {
    throw Error(ErrorKind::Domain, "power rule needs n >= 1");
  }
  const Complex x_now = checked_eval(x, t);
  const Complex dx = nl_derivative(x, t, tau);
  const Complex x_next = tau.value() * dx + x_now;
  Complex d = dx;
  for (int k = 2; k <= n; ++k) {
    d = x_now * d + dx * std::pow(x_next, k - 1);
  }
  return d;
}

Complex logarithm(const ScalarFunction& x, double base, double t, Step tau) {
  if (!(base > 0.0) || base == 1.0 || !std::isfinite(base)) {
    throw Error(ErrorKind::Domain, "logarithm base must be positive and different from 1");
  }
  const Complex x_now = checked_eval(x, t);
  const Complex x_next = checked_eval(x, t + tau.value());
  if (!is_positive_real(x_now) || !is_positive_real(x_next)) {
    throw Error(ErrorKind::Domain, "logarithm rule is defined for positive real signals only");
  }
  const Complex dx = nl_derivative(x, t, tau);
  const double ratio = 1.0 + tau.value() * (dx / x_now).real();
  return std::log(ratio) / std::log(base) / tau.value();
}

}  // namespace rules

double scaled_error(Complex actual, Complex expected) noexcept {
  return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace nonlimit
