#pragma once

#include <Eigen/Dense>

#include <vector>

namespace cvent::qubit {

inline constexpr int kMaxQubits = 12;

/// Dense finite-dimensional reference state: either a pure state vector or a
/// density matrix.  Qubit 0 is the most significant bit of the basis index,
/// so |100> of three qubits sits at index 4.
class QubitState {
 public:
  static QubitState pure(Eigen::VectorXcd amplitudes);
  static QubitState mixed(Eigen::MatrixXcd density);

  int n_qubits() const { return n_qubits_; }
  bool is_pure() const { return pure_; }

  /// Amplitude vector; only valid for pure states.
  const Eigen::VectorXcd& amplitudes() const;
  /// Density matrix; materialized from the amplitudes for pure states.
  Eigen::MatrixXcd density_matrix() const;

 private:
  QubitState() = default;
  int n_qubits_ = 0;
  bool pure_ = false;
  Eigen::VectorXcd amplitudes_;
  Eigen::MatrixXcd density_;
};

/// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
QubitState ghz(int n_qubits);
/// (|100> + |010> + |001>)/sqrt(3).
QubitState w3();

/// Schmidt coefficients of a pure state across the bipartition
/// (party_a | rest): singular values of the reshaped amplitude matrix,
/// non-negative, descending, squares summing to 1.
std::vector<double> schmidt(const QubitState& state, const std::vector<int>& party_a);

/// Partial trace over the listed qubits.
QubitState trace_out(const QubitState& state, const std::vector<int>& parties);

/// Eigenvalues (ascending) of the partial transpose on the second qubit of a
/// two-qubit density matrix.  The eigenvalues are basis-independent, so which
/// qubit carries the transpose is immaterial.
std::vector<double> partial_transpose_eigs(const QubitState& state);

/// Partial von Neumann entropy of a pure state across (party_a | rest), in
/// units of ebits (base-2 logarithm).
double entanglement_entropy(const QubitState& state, const std::vector<int>& party_a);

struct GhzMeasurement {
  QubitState post_state;  // (|0> +- |1>)/sqrt(2) tensor |Phi^+->
  double probability = 0.0;
};

/// Measures qubit 0 of the three-qubit GHZ state in the conjugate basis
/// {(|0> +- |1>)/sqrt(2)}; outcome_sign is +1 or -1.
GhzMeasurement measure_ghz_conjugate(int outcome_sign);

}  // namespace cvent::qubit
