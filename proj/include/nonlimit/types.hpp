#pragma once

// Core value types shared by every module: complex scalars, the fixed time
// step, uniformly sampled signals and the library's error type.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonlimit {

using Complex = std::complex<double>;

enum class ErrorKind {
  Domain,
  NonFinite,
  InsufficientSamples,
  Pole,
  ExcludedStep,
  OffGrid,
  RejectedInitialData,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Strictly positive, finite time increment of the non-limit calculus.
class Step {
 public:
  explicit Step(double tau);

  [[nodiscard]] double value() const noexcept { return tau_; }

 private:
  double tau_;
};

/// Samples x(t0 + n*tau), n = 0..size-1.
class GridSignal {
 public:
  GridSignal(double t0, Step tau, std::vector<Complex> values);

  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] Step step() const noexcept { return tau_; }
  [[nodiscard]] double tau() const noexcept { return tau_.value(); }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<Complex>& values() const noexcept { return values_; }
  [[nodiscard]] Complex operator[](std::size_t n) const { return values_[n]; }
  [[nodiscard]] double time_at(std::size_t n) const noexcept {
    return t0_ + static_cast<double>(n) * tau_.value();
  }

 private:
  double t0_;
  Step tau_;
  std::vector<Complex> values_;
};

/// Evaluatable map time -> complex scalar.
using ScalarFunction = std::function<Complex(double)>;

[[nodiscard]] inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Samples f on t0 + n*tau for n = 0..count-1.
[[nodiscard]] GridSignal sample(const ScalarFunction& f, double t0, Step tau, std::size_t count);

}  // namespace nonlimit
