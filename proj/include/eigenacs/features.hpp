#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>

#include "eigenacs/common.hpp"

namespace eigenacs {

inline constexpr int kMaxDerivOrder = 4;

// Partial-derivative orders, one entry per spatial coordinate.
struct DerivMultiIndex {
  std::array<int, 2> orders{0, 0};
  int dim = 1;

  static DerivMultiIndex d1(int ox) { return {{ox, 0}, 1}; }
  static DerivMultiIndex d2(int ox, int oy) { return {{ox, oy}, 2}; }

  int total() const { return orders[0] + orders[1]; }
  bool operator==(const DerivMultiIndex&) const = default;
};

// Frozen random Fourier-feature layer: M cosine units with frequencies and
// phases drawn once, uniform on [-B, B], never trained. Every partial
// derivative of a unit is again a scaled/shifted cosine, so derivative
// matrices are evaluated in closed form.
class FeatureBasis {
 public:
  FeatureBasis(int width, int dim, double bandwidth, std::uint64_t seed);

  int width() const { return static_cast<int>(frequencies_.rows()); }
  int dim() const { return static_cast<int>(frequencies_.cols()); }
  double bandwidth() const { return bandwidth_; }
  std::uint64_t seed() const { return seed_; }
  const Eigen::MatrixXd& frequencies() const { return frequencies_; }
  const Eigen::VectorXd& phases() const { return phases_; }

  // N x M matrix with entry (n, m) = D^alpha cos(omega_m . x_n + b_m).
  // d/dx_k multiplies by omega_{m,k} and advances the phase by pi/2, so
  // D^alpha cos(theta) = (prod_k omega_k^{alpha_k}) * cos(theta + |alpha| pi/2);
  // the quarter-turn is applied as an exact cos/sin swap.
  Eigen::MatrixXd eval(const Eigen::Ref<const Eigen::MatrixXd>& points,
                       const DerivMultiIndex& alpha) const;

 private:
  Eigen::MatrixXd frequencies_;  // M x d
  Eigen::VectorXd phases_;       // M
  double bandwidth_;
  std::uint64_t seed_;
};

inline FeatureBasis build_basis(int width, int dim, double bandwidth,
                                std::uint64_t seed) {
  return FeatureBasis(width, dim, bandwidth, seed);
}

}  // namespace eigenacs
