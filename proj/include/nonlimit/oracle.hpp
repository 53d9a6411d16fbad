#pragma once

// Independent verification of closed forms. Every residual here is built
// from raw samples and the forward difference quotient only; nothing in this
// header knows how the closed forms were derived.

#include <cstddef>
#include <span>
#include <vector>

#include "nonlimit/types.hpp"

namespace nonlimit {

/// Coefficients of x'' - lambda (1 - x^2) x' + omega^2 x = 0.
struct VdpParams {
  double lambda;
  double omega;

  VdpParams(double lambda_, double omega_);
};

struct ResidualReport {
  double max_abs_residual = 0.0;
  std::size_t argmax_index = 0;
  std::vector<double> per_point;

  static ResidualReport from_points(std::vector<double> points);
};

/// Field u(t_m, y_n) sampled on a square grid with the same step in t and y,
/// stored row-major with t as the slow index.
class GridField2D {
 public:
  GridField2D(Step tau, std::size_t nt, std::size_t ny, std::vector<Complex> values);

  [[nodiscard]] double tau() const noexcept { return tau_.value(); }
  [[nodiscard]] std::size_t nt() const noexcept { return nt_; }
  [[nodiscard]] std::size_t ny() const noexcept { return ny_; }
  [[nodiscard]] Complex at(std::size_t m, std::size_t n) const { return values_[m * ny_ + n]; }
  [[nodiscard]] const std::vector<Complex>& values() const noexcept { return values_; }

 private:
  Step tau_;
  std::size_t nt_;
  std::size_t ny_;
  std::vector<Complex> values_;
};

/// x_{n+2} that zeroes the van der Pol residual at step n.
[[nodiscard]] Complex vdp_step(Complex x_n, Complex x_n1, const VdpParams& p, double tau);

/// r_n = D^2 x - lambda (1 - x^2) D x + omega^2 x at every n with two successors.
[[nodiscard]] ResidualReport vdp_residual(const GridSignal& x, const VdpParams& p);

/// Same residual on raw samples with a signed step (tau != 0).
[[nodiscard]] ResidualReport vdp_residual(std::span<const Complex> x, double tau, const VdpParams& p);

/// Iterates vdp_step from two seeds; returns `count` samples.
[[nodiscard]] std::vector<Complex> vdp_iterate(Complex x0, Complex x1, const VdpParams& p, double tau,
                                               std::size_t count);

/// r_n = D^2 x + omega^2 x
[[nodiscard]] ResidualReport oscillator_residual(const GridSignal& x, double omega);

/// r(m, n) = (u[m+1,n] - u[m,n]) / tau - beta (u[m,n+2] - 2u[m,n+1] + u[m,n]) / tau^2,
/// reported with flat index m * (ny - 2) + n.
[[nodiscard]] ResidualReport heat_residual(const GridField2D& u, double beta);

}  // namespace nonlimit
