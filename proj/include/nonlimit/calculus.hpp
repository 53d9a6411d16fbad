#pragma once

// Non-limit (fixed-step forward difference) calculus.
//
// The derivative of f at t is (f(t + tau) - f(t)) / tau for a fixed tau > 0.
// The rule functions below evaluate the right-hand sides of the calculus
// identities so callers can compare them against the definition.

#include <cstddef>

#include "nonlimit/types.hpp"

namespace nonlimit {

[[nodiscard]] Complex nl_derivative(const ScalarFunction& f, double t, Step tau);

/// (f(t + 2tau) - 2 f(t + tau) + f(t)) / tau^2
[[nodiscard]] Complex nl_second_derivative(const ScalarFunction& f, double t, Step tau);

/// tau * D f(t) = f(t + tau) - f(t)
[[nodiscard]] Complex nl_differential(const ScalarFunction& f, double t, Step tau);

/// Forward difference quotient of a sampled signal; one sample shorter.
[[nodiscard]] GridSignal nl_derivative(const GridSignal& s);

/// Difference quotients on raw samples with a nonzero step of either sign.
/// Used where a step is an algebraic parameter rather than a physical time
/// increment (negative-step candidates of the van der Pol closed form).
[[nodiscard]] Complex forward_quotient(Complex now, Complex next, double h);
[[nodiscard]] Complex second_quotient(Complex now, Complex next, Complex next2, double h);

namespace rules {

/// D(f g) = D f * g + f * D g + tau * D f * D g
[[nodiscard]] Complex product(const ScalarFunction& f, const ScalarFunction& g, double t, Step tau);

/// D(f / g) = (g D f - f D g) / (g (g + tau D g)); needs g(t), g(t + tau) != 0.
[[nodiscard]] Complex quotient(const ScalarFunction& f, const ScalarFunction& g, double t, Step tau);

/// D(p^t) = p^t (p^tau - 1) / tau, p > 0.
[[nodiscard]] Complex exponential(double base, double t, Step tau);

/// D(x^n) = x D(x^(n-1)) + D x (tau D x + x)^(n-1), unrolled from D(x^1) = D x.
[[nodiscard]] Complex power(const ScalarFunction& x, int n, double t, Step tau);

/// D(log_k x) = log_k(1 + tau D x / x) / tau for x(t), x(t + tau) real and positive.
[[nodiscard]] Complex logarithm(const ScalarFunction& x, double base, double t, Step tau);

}  // namespace rules

/// |actual - expected| measured absolutely when |expected| <= 1 and
/// relatively otherwise.
[[nodiscard]] double scaled_error(Complex actual, Complex expected) noexcept;

}  // namespace nonlimit
