#pragma once

#include <Eigen/Dense>

#include "cvent/gaussian_state.hpp"

namespace cvent {

/// A linear phase-space transformation S acting on the quadrature vector
/// (x_1, p_1, ..., x_N, p_N).  Construction validates S Omega S^T = Omega.
/// Phase-free beam splitters act identically on the x and p blocks and are
/// additionally orthogonal.
class SymplecticOp {
 public:
  SymplecticOp(int n_modes, Eigen::MatrixXd matrix);

  static SymplecticOp identity(int n_modes);

  /// Phase-free beam splitter on modes k < l (0-based) with 2x2 kernel
  /// [[sin t, cos t], [cos t, -sin t]] applied to both quadrature blocks.
  static SymplecticOp beam_splitter(int n_modes, int k, int l, double theta);

  /// The N-splitter: the cascade
  ///   B_{N-2,N-1}(asin 1/sqrt(2)) ... B_{1,2}(asin 1/sqrt(N-1)) B_{0,1}(asin 1/sqrt(N))
  /// with B_{0,1} applied first to the mode vector.  Distributes mode 0
  /// evenly: the first column of the x block is (1/sqrt(N), ..., 1/sqrt(N)),
  /// so the first row of the inverse splitter is that same uniform vector.
  static SymplecticOp n_splitter(int n_modes);

  /// Local squeezer on one mode: x -> e^{-s} x, p -> e^{+s} p.
  static SymplecticOp local_squeezer(int n_modes, int mode, double s);

  int n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

  /// S^-1 = Omega S^T Omega^T; for orthogonal S this is simply S^T.
  SymplecticOp inverse() const;

  bool is_orthogonal(double tol = kSymplecticTol) const;

 private:
  int n_modes_ = 0;
  Eigen::MatrixXd matrix_;
};

/// Composition: (a * b) applies b first.
SymplecticOp operator*(const SymplecticOp& a, const SymplecticOp& b);

/// Heisenberg map: mean' = S mean, V' = S V S^T.
GaussianState apply(const SymplecticOp& op, const GaussianState& state);

}  // namespace cvent
