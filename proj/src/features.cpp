#include "eigenacs/features.hpp"

#include <cmath>

namespace eigenacs {

FeatureBasis::FeatureBasis(int width, int dim, double bandwidth,
                           std::uint64_t seed)
    : bandwidth_(bandwidth), seed_(seed) {
  if (width < 1) throw ConfigError("feature width must be >= 1");
  if (dim != 1 && dim != 2) throw ConfigError("spatial dimension must be 1 or 2");
  if (!(bandwidth > 0.0)) throw ConfigError("bandwidth must be positive");

  UniformRng rng(seed);
  frequencies_.resize(width, dim);
  for (int m = 0; m < width; ++m)
    for (int k = 0; k < dim; ++k) frequencies_(m, k) = rng.symmetric(bandwidth);
  phases_.resize(width);
  for (int m = 0; m < width; ++m) phases_(m) = rng.symmetric(bandwidth);
}

Eigen::MatrixXd FeatureBasis::eval(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                   const DerivMultiIndex& alpha) const {
  if (alpha.dim != dim())
    throw ConfigError("multi-index dimension does not match basis dimension");
  if (alpha.orders[0] < 0 || alpha.orders[1] < 0 || alpha.total() > kMaxDerivOrder)
    throw ConfigError("derivative order must be between 0 and 4");
  if (points.cols() != dim())
    throw ConfigError("points must have one column per spatial dimension");

  // theta(n, m) = omega_m . x_n + b_m
  Eigen::MatrixXd theta = points * frequencies_.transpose();
  theta.rowwise() += phases_.transpose();

  const int quarter_turns = alpha.total() % 4;
  switch (quarter_turns) {
    case 0: theta = theta.array().cos(); break;
    case 1: theta = -theta.array().sin(); break;
    case 2: theta = -theta.array().cos(); break;
    default: theta = theta.array().sin(); break;
  }

  if (alpha.total() > 0) {
    Eigen::VectorXd coeff = Eigen::VectorXd::Ones(width());
    for (int k = 0; k < dim(); ++k)
      for (int rep = 0; rep < alpha.orders[k]; ++rep)
        coeff.array() *= frequencies_.col(k).array();
    theta *= coeff.asDiagonal();
  }
  return theta;
}

}  // namespace eigenacs
