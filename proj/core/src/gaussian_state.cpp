#include "cvent/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvent {

namespace {

void check_mode_count(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("mode count must be at least 1, got " +
                                std::to_string(n_modes));
  }
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n_modes) {
  check_mode_count(n_modes);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int m = 0; m < n_modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

PhaseSpacePoint point_from_amplitudes(const std::vector<std::complex<double>>& alpha) {
  PhaseSpacePoint point(2 * static_cast<int>(alpha.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    point(2 * i) = alpha[i].real();
    point(2 * i + 1) = alpha[i].imag();
  }
  return point;
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov)) {
  if (mean_.size() < 2 || mean_.size() % 2 != 0) {
    throw std::invalid_argument("mean vector length must be a positive even number");
  }
  n_modes_ = static_cast<int>(mean_.size()) / 2;
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw std::invalid_argument("covariance must be 2N x 2N with N = " +
                                std::to_string(n_modes_));
  }
  if (!mean_.allFinite() || !cov_.allFinite()) {
    throw std::invalid_argument("state moments must be finite");
  }
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    throw std::invalid_argument("covariance is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
  }
  cov_ = ((cov_ + cov_.transpose()) / 2.0).eval();
  const double lambda = min_physicality_eigenvalue();
  if (lambda < -kPhysicalityTol) {
    throw std::invalid_argument(
        "covariance violates the uncertainty relation V + (i/4) Omega >= 0 "
        "(min eigenvalue " + std::to_string(lambda) + ")");
  }
}

GaussianState GaussianState::vacuum(int n_modes) {
  check_mode_count(n_modes);
  return GaussianState(Eigen::VectorXd::Zero(2 * n_modes),
                       Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes) *
                           kVacuumVariance);
}

GaussianState GaussianState::squeezed_vacuum(double r, SqueezeAxis axis) {
  if (!std::isfinite(r)) {
    throw std::invalid_argument("squeezing parameter must be finite");
  }
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2, 2);
  const double narrow = std::exp(-2.0 * r) * kVacuumVariance;
  const double wide = std::exp(+2.0 * r) * kVacuumVariance;
  if (axis == SqueezeAxis::kPosition) {
    cov(0, 0) = narrow;
    cov(1, 1) = wide;
  } else {
    cov(0, 0) = wide;
    cov(1, 1) = narrow;
  }
  return GaussianState(Eigen::VectorXd::Zero(2), cov);
}

double GaussianState::min_physicality_eigenvalue() const {
  using namespace std::complex_literals;
  Eigen::MatrixXcd h = cov_.cast<std::complex<double>>();
  h += 0.25i * symplectic_form(n_modes_).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool GaussianState::is_physical(double tol) const {
  return min_physicality_eigenvalue() >= -tol;
}

std::vector<double> GaussianState::symplectic_eigenvalues() const {
  // The eigenvalues of Omega V come in pairs +- i nu; the moduli give each
  // symplectic eigenvalue twice.
  Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(n_modes_) * cov_, false);
  std::vector<double> moduli(2 * n_modes_);
  for (int i = 0; i < 2 * n_modes_; ++i) {
    moduli[i] = std::abs(solver.eigenvalues()(i));
  }
  std::sort(moduli.begin(), moduli.end());
  std::vector<double> nu(n_modes_);
  for (int m = 0; m < n_modes_; ++m) {
    nu[m] = (moduli[2 * m] + moduli[2 * m + 1]) / 2.0;
  }
  return nu;
}

bool GaussianState::is_pure(double tol) const {
  for (double nu : symplectic_eigenvalues()) {
    if (std::abs(nu - kVacuumVariance) > tol) {
      return false;
    }
  }
  return true;
}

double GaussianState::wigner(const PhaseSpacePoint& point) const {
  if (point.size() != mean_.size()) {
    throw std::invalid_argument("phase-space point has wrong dimension");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(cov_);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("covariance is numerically degenerate; Wigner evaluation undefined");
  }
  double log_det = 0.0;
  for (int i = 0; i < cov_.rows(); ++i) {
    log_det += 2.0 * std::log(llt.matrixL()(i, i));
  }
  if (!std::isfinite(log_det) || log_det < std::log(1e-300)) {
    throw std::domain_error("covariance determinant underflows; Wigner evaluation undefined");
  }
  const Eigen::VectorXd d = point - mean_;
  const double quad = d.dot(llt.solve(d));
  return std::exp(-0.5 * quad - 0.5 * log_det -
                  n_modes_ * std::log(2.0 * std::numbers::pi));
}

double GaussianState::quadrature_variance(const Eigen::VectorXd& coeffs) const {
  if (coeffs.size() != mean_.size()) {
    throw std::invalid_argument("coefficient vector must have length 2N");
  }
  return coeffs.dot(cov_ * coeffs);
}

GaussianState GaussianState::partial_trace(const std::vector<int>& keep) const {
  if (keep.empty()) {
    throw std::invalid_argument("partial trace needs a non-empty set of kept modes");
  }
  std::vector<int> modes(keep);
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  if (modes.front() < 0 || modes.back() >= n_modes_) {
    throw std::invalid_argument("kept mode index out of range");
  }
  const int k = static_cast<int>(modes.size());
  Eigen::VectorXi rows(2 * k);
  for (int i = 0; i < k; ++i) {
    rows(2 * i) = 2 * modes[i];
    rows(2 * i + 1) = 2 * modes[i] + 1;
  }
  return GaussianState(mean_(rows), cov_(rows, rows));
}

double GaussianState::entropy_of_subsystem(const std::vector<int>& subset) const {
  if (!is_pure()) {
    throw std::domain_error(
        "entropy_of_subsystem requires a pure full state "
        "(all symplectic eigenvalues equal to 1/4)");
  }
  const GaussianState reduced = partial_trace(subset);
  double entropy = 0.0;
  for (double nu : reduced.symplectic_eigenvalues()) {
    const double n_bar = 2.0 * nu - 0.5;  // thermal occupation of that mode
    if (n_bar <= 0.0) {
      continue;  // g(0) = 0
    }
    entropy += (n_bar + 1.0) * std::log2(n_bar + 1.0) - n_bar * std::log2(n_bar);
  }
  return entropy;
}

GaussianState tensor(const std::vector<GaussianState>& states) {
  if (states.empty()) {
    throw std::invalid_argument("tensor product of an empty list is undefined");
  }
  int total = 0;
  for (const GaussianState& s : states) {
    total += s.n_modes();
  }
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(2 * total);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(2 * total, 2 * total);
  int offset = 0;
  for (const GaussianState& s : states) {
    const int d = 2 * s.n_modes();
    mean.segment(offset, d) = s.mean();
    cov.block(offset, offset, d, d) = s.cov();
    offset += d;
  }
  return GaussianState(std::move(mean), std::move(cov));
}

}  // namespace cvent
