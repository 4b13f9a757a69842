#pragma once

#include <Eigen/Dense>

#include <vector>

namespace cvent {

// Quadrature convention used throughout: units-free with hbar = 1/2, so
// [x_k, p_l] = i delta_kl / 2 and the vacuum variance of every quadrature
// is 1/4.  Covariance rows/columns are ordered (x_1, p_1, ..., x_N, p_N).
inline constexpr double kVacuumVariance = 0.25;

inline constexpr double kSymmetryTol = 1e-10;     // covariance symmetry
inline constexpr double kPhysicalityTol = 1e-9;   // min eig of V + (i/4) Omega
inline constexpr double kSymplecticTol = 1e-10;   // || S Omega S^T - Omega ||
inline constexpr double kCommuteTol = 1e-10;      // symplectic product a Omega b^T
inline constexpr double kPurityTol = 1e-8;        // symplectic eigenvalue vs 1/4

/// The symplectic form: block diagonal with 2x2 blocks [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int n_modes);

enum class SqueezeAxis { kPosition, kMomentum };

/// A phase-space point (x_1, p_1, ..., x_N, p_N).  The complex amplitude of
/// mode i is alpha_i = x_i + i p_i.
using PhaseSpacePoint = Eigen::VectorXd;

PhaseSpacePoint point_from_amplitudes(const std::vector<std::complex<double>>& alpha);

/// An N-mode Gaussian state represented by its first and second moments.
/// Immutable after construction; construction validates symmetry of the
/// covariance and physicality of V + (i/4) Omega.
class GaussianState {
 public:
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

  static GaussianState vacuum(int n_modes);
  static GaussianState squeezed_vacuum(double r, SqueezeAxis axis);

  int n_modes() const { return n_modes_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  /// Smallest eigenvalue of the Hermitian matrix V + (i/4) Omega.  Physical
  /// states have this >= -kPhysicalityTol; pure states sit on the boundary.
  double min_physicality_eigenvalue() const;
  bool is_physical(double tol = kPhysicalityTol) const;

  /// The N symplectic eigenvalues of V (moduli of the eigenvalues of
  /// i Omega V, one per mode), sorted ascending.  Each is >= 1/4 for a
  /// physical state and all equal 1/4 exactly iff the state is pure.
  std::vector<double> symplectic_eigenvalues() const;
  bool is_pure(double tol = kPurityTol) const;

  /// Wigner function W(point) = exp(-(1/2) d V^-1 d^T) / ((2 pi)^N sqrt(det V))
  /// with d = point - mean.  Throws std::domain_error if V is numerically
  /// degenerate.
  double wigner(const PhaseSpacePoint& point) const;

  /// Variance of the quadrature combination c . (x_1, p_1, ...), i.e. c V c^T.
  /// Central moments: the mean is subtracted by construction.
  double quadrature_variance(const Eigen::VectorXd& coeffs) const;

  /// Restriction of mean and covariance to the kept modes, original mode
  /// order preserved.
  GaussianState partial_trace(const std::vector<int>& keep) const;

  /// Entanglement entropy (base-2, ebits) of a subsystem of a *pure* state:
  /// sum over symplectic eigenvalues nu of the reduced state of g(2 nu - 1/2)
  /// with g(n) = (n+1) log2(n+1) - n log2 n.  Throws std::domain_error if the
  /// full state is not pure.
  double entropy_of_subsystem(const std::vector<int>& subset) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  int n_modes_ = 0;
};

/// Tensor product: block-diagonal covariance, concatenated means, mode order
/// preserved.
GaussianState tensor(const std::vector<GaussianState>& states);

}  // namespace cvent
