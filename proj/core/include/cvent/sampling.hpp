#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cvent/gaussian_state.hpp"

namespace cvent {

/// Joint homodyne records for a set of pairwise commuting quadrature
/// combinations: rows are independent draws from the multivariate normal with
/// means a_i . mean and covariances a_i V a_j^T.  Deterministic for a given
/// seed.  Throws std::invalid_argument if any pair fails the commutation
/// check |a Omega b^T| <= kCommuteTol (joint sampling is undefined then).
Eigen::MatrixXd sample_quadratures(const GaussianState& state,
                                   const std::vector<Eigen::VectorXd>& observables,
                                   std::uint64_t seed, int n_samples);

/// Single joint draw.
Eigen::VectorXd sample_quadratures(const GaussianState& state,
                                   const std::vector<Eigen::VectorXd>& observables,
                                   std::uint64_t seed);

}  // namespace cvent
