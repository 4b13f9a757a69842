#include "cvent/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace cvent {

Eigen::MatrixXd sample_quadratures(const GaussianState& state,
                                   const std::vector<Eigen::VectorXd>& observables,
                                   std::uint64_t seed, int n_samples) {
  if (observables.empty()) {
    throw std::invalid_argument("need at least one observable to sample");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("sample count must be positive");
  }
  const int dim = static_cast<int>(state.mean().size());
  const int k = static_cast<int>(observables.size());
  for (const Eigen::VectorXd& obs : observables) {
    if (obs.size() != dim) {
      throw std::invalid_argument("observable coefficient vector must have length 2N");
    }
  }
  const Eigen::MatrixXd omega = symplectic_form(state.n_modes());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double product = observables[i].dot(omega * observables[j]);
      if (std::abs(product) > kCommuteTol) {
        throw std::invalid_argument(
            "observables " + std::to_string(i) + " and " + std::to_string(j) +
            " do not commute (symplectic product " + std::to_string(product) +
            "); joint sampling is undefined");
      }
    }
  }

  Eigen::VectorXd mean(k);
  Eigen::MatrixXd cov(k, k);
  for (int i = 0; i < k; ++i) {
    mean(i) = observables[i].dot(state.mean());
    for (int j = 0; j <= i; ++j) {
      const double c = observables[i].dot(state.cov() * observables[j]);
      cov(i, j) = c;
      cov(j, i) = c;
    }
  }

  // The observable covariance can be singular (repeated observables), so
  // factor via eigendecomposition with clamped eigenvalues.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  Eigen::VectorXd scale = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXd transform = solver.eigenvectors() * scale.asDiagonal();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd samples(n_samples, k);
  Eigen::VectorXd z(k);
  for (int row = 0; row < n_samples; ++row) {
    for (int i = 0; i < k; ++i) {
      z(i) = normal(rng);
    }
    samples.row(row) = (mean + transform * z).transpose();
  }
  return samples;
}

Eigen::VectorXd sample_quadratures(const GaussianState& state,
                                   const std::vector<Eigen::VectorXd>& observables,
                                   std::uint64_t seed) {
  return sample_quadratures(state, observables, seed, 1).row(0);
}

}  // namespace cvent
