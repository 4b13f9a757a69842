#include "cvent/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace cvent {

SymplecticOp::SymplecticOp(int n_modes, Eigen::MatrixXd matrix)
    : n_modes_(n_modes), matrix_(std::move(matrix)) {
  if (n_modes_ < 1) {
    throw std::invalid_argument("mode count must be at least 1");
  }
  if (matrix_.rows() != 2 * n_modes_ || matrix_.cols() != 2 * n_modes_) {
    throw std::invalid_argument("symplectic matrix must be 2N x 2N");
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("symplectic matrix must be finite");
  }
  const Eigen::MatrixXd omega = symplectic_form(n_modes_);
  const double defect =
      (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().maxCoeff();
  if (defect > kSymplecticTol) {
    throw std::invalid_argument("matrix is not symplectic (S Omega S^T defect " +
                                std::to_string(defect) + ")");
  }
}

SymplecticOp SymplecticOp::identity(int n_modes) {
  return SymplecticOp(n_modes, Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticOp SymplecticOp::beam_splitter(int n_modes, int k, int l, double theta) {
  if (k < 0 || l < 0 || k >= n_modes || l >= n_modes || k >= l) {
    throw std::invalid_argument("beam splitter needs distinct mode indices 0 <= k < l < N");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("beam splitter angle must be finite");
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  // Same 2x2 kernel on the x and the p coordinates of modes k, l.
  for (int q = 0; q < 2; ++q) {
    m(2 * k + q, 2 * k + q) = s;
    m(2 * k + q, 2 * l + q) = c;
    m(2 * l + q, 2 * k + q) = c;
    m(2 * l + q, 2 * l + q) = -s;
  }
  return SymplecticOp(n_modes, std::move(m));
}

SymplecticOp SymplecticOp::n_splitter(int n_modes) {
  if (n_modes < 2) {
    throw std::invalid_argument("an N-splitter needs at least 2 modes");
  }
  // B_{0,1}(asin 1/sqrt(N)) acts first, B_{N-2,N-1}(asin 1/sqrt(2)) last.
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  for (int j = 0; j + 1 < n_modes; ++j) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n_modes - j)));
    m = beam_splitter(n_modes, j, j + 1, theta).matrix() * m;
  }
  return SymplecticOp(n_modes, std::move(m));
}

SymplecticOp SymplecticOp::local_squeezer(int n_modes, int mode, double s) {
  if (mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("squeezer mode index out of range");
  }
  if (!std::isfinite(s)) {
    throw std::invalid_argument("squeezer strength must be finite");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  m(2 * mode, 2 * mode) = std::exp(-s);
  m(2 * mode + 1, 2 * mode + 1) = std::exp(+s);
  return SymplecticOp(n_modes, std::move(m));
}

SymplecticOp SymplecticOp::inverse() const {
  const Eigen::MatrixXd omega = symplectic_form(n_modes_);
  return SymplecticOp(n_modes_, omega * matrix_.transpose() * omega.transpose());
}

bool SymplecticOp::is_orthogonal(double tol) const {
  return (matrix_ * matrix_.transpose() -
          Eigen::MatrixXd::Identity(2 * n_modes_, 2 * n_modes_))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

SymplecticOp operator*(const SymplecticOp& a, const SymplecticOp& b) {
  if (a.n_modes() != b.n_modes()) {
    throw std::invalid_argument("cannot compose operations on different mode counts");
  }
  return SymplecticOp(a.n_modes(), a.matrix() * b.matrix());
}

GaussianState apply(const SymplecticOp& op, const GaussianState& state) {
  if (op.n_modes() != state.n_modes()) {
    throw std::invalid_argument("operation and state act on different mode counts");
  }
  return GaussianState(op.matrix() * state.mean(),
                       op.matrix() * state.cov() * op.matrix().transpose());
}

}  // namespace cvent
