#include "nonlimit/types.hpp"

#include <cmath>
#include <utility>

namespace nonlimit {

Step::Step(double tau) : tau_(tau) {
  if (!std::isfinite(tau) || !(tau > 0.0)) {
    throw Error(ErrorKind::Domain, "step must be finite and strictly positive, got " + std::to_string(tau));
  }
}

GridSignal::GridSignal(double t0, Step tau, std::vector<Complex> values)
    : t0_(t0), tau_(tau), values_(std::move(values)) {
  if (!std::isfinite(t0)) {
    throw Error(ErrorKind::NonFinite, "signal origin must be finite");
  }
  if (values_.empty()) {
    throw Error(ErrorKind::InsufficientSamples, "signal needs at least one sample");
  }
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (!is_finite(values_[n])) {
      throw Error(ErrorKind::NonFinite, "non-finite sample at index " + std::to_string(n));
    }
  }
}

GridSignal sample(const ScalarFunction& f, double t0, Step tau, std::size_t count) {
  std::vector<Complex> values;
  values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    values.push_back(f(t0 + static_cast<double>(n) * tau.value()));
  }
  return GridSignal(t0, tau, std::move(values));
}

}  // namespace nonlimit
