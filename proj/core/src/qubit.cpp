#include "cvent/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cvent::qubit {

namespace {

constexpr double kStateTol = 1e-10;

int qubits_from_dimension(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) {
    ++n;
  }
  if ((Eigen::Index{1} << n) != dim || n < 1) {
    throw std::invalid_argument("dimension must be a power of two >= 2");
  }
  if (n > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) +
                                " qubits supported");
  }
  return n;
}

void check_subset(const std::vector<int>& subset, int n_qubits) {
  if (subset.empty()) {
    throw std::invalid_argument("qubit subset must be non-empty");
  }
  std::vector<bool> seen(n_qubits, false);
  for (int q : subset) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("qubit index out of range");
    }
    if (seen[q]) {
      throw std::invalid_argument("duplicate qubit index");
    }
    seen[q] = true;
  }
}

// Full basis index from the bits of two disjoint position groups.  Qubit 0 is
// the most significant bit.
Eigen::Index compose_index(const std::vector<int>& positions_a, Eigen::Index bits_a,
                           const std::vector<int>& positions_b, Eigen::Index bits_b,
                           int n_qubits) {
  Eigen::Index index = 0;
  for (std::size_t i = 0; i < positions_a.size(); ++i) {
    const Eigen::Index bit = (bits_a >> (positions_a.size() - 1 - i)) & 1;
    index |= bit << (n_qubits - 1 - positions_a[i]);
  }
  for (std::size_t i = 0; i < positions_b.size(); ++i) {
    const Eigen::Index bit = (bits_b >> (positions_b.size() - 1 - i)) & 1;
    index |= bit << (n_qubits - 1 - positions_b[i]);
  }
  return index;
}

}  // namespace

QubitState QubitState::pure(Eigen::VectorXcd amplitudes) {
  QubitState state;
  state.n_qubits_ = qubits_from_dimension(amplitudes.size());
  state.pure_ = true;
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > kStateTol) {
    throw std::invalid_argument("pure state must have unit norm, got " +
                                std::to_string(norm));
  }
  state.amplitudes_ = std::move(amplitudes);
  return state;
}

QubitState QubitState::mixed(Eigen::MatrixXcd density) {
  QubitState state;
  if (density.rows() != density.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  state.n_qubits_ = qubits_from_dimension(density.rows());
  state.pure_ = false;
  if (std::abs(density.trace().real() - 1.0) > kStateTol ||
      std::abs(density.trace().imag()) > kStateTol) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  if ((density - density.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(density, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStateTol) {
    throw std::invalid_argument("density matrix must be positive semidefinite");
  }
  state.density_ = std::move(density);
  return state;
}

const Eigen::VectorXcd& QubitState::amplitudes() const {
  if (!pure_) {
    throw std::invalid_argument("amplitudes are only defined for pure states");
  }
  return amplitudes_;
}

Eigen::MatrixXcd QubitState::density_matrix() const {
  if (pure_) {
    return amplitudes_ * amplitudes_.adjoint();
  }
  return density_;
}

QubitState ghz(int n_qubits) {
  if (n_qubits < 2) {
    throw std::invalid_argument("the GHZ state needs at least 2 qubits");
  }
  if (n_qubits > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) +
                                " qubits supported");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(dim);
  amplitudes(0) = 1.0 / std::numbers::sqrt2;
  amplitudes(dim - 1) = 1.0 / std::numbers::sqrt2;
  return QubitState::pure(std::move(amplitudes));
}

QubitState w3() {
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(8);
  const double coeff = 1.0 / std::sqrt(3.0);
  amplitudes(0b100) = coeff;
  amplitudes(0b010) = coeff;
  amplitudes(0b001) = coeff;
  return QubitState::pure(std::move(amplitudes));
}

std::vector<double> schmidt(const QubitState& state, const std::vector<int>& party_a) {
  if (!state.is_pure()) {
    throw std::invalid_argument("the Schmidt decomposition applies to pure states");
  }
  const int n = state.n_qubits();
  check_subset(party_a, n);
  if (static_cast<int>(party_a.size()) == n) {
    throw std::invalid_argument("bipartition must leave the complement non-empty");
  }
  std::vector<int> side_a(party_a);
  std::sort(side_a.begin(), side_a.end());
  std::vector<int> side_b;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(side_a.begin(), side_a.end(), q)) {
      side_b.push_back(q);
    }
  }
  const Eigen::Index rows = Eigen::Index{1} << side_a.size();
  const Eigen::Index cols = Eigen::Index{1} << side_b.size();
  Eigen::MatrixXcd reshaped(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a) {
    for (Eigen::Index b = 0; b < cols; ++b) {
      reshaped(a, b) = state.amplitudes()(compose_index(side_a, a, side_b, b, n));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  std::vector<double> coefficients(svd.singularValues().size());
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    coefficients[i] = svd.singularValues()(i);  // descending
  }
  return coefficients;
}

QubitState trace_out(const QubitState& state, const std::vector<int>& parties) {
  const int n = state.n_qubits();
  check_subset(parties, n);
  if (static_cast<int>(parties.size()) == n) {
    throw std::invalid_argument("cannot trace out every qubit");
  }
  std::vector<int> removed(parties);
  std::sort(removed.begin(), removed.end());
  std::vector<int> kept;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(removed.begin(), removed.end(), q)) {
      kept.push_back(q);
    }
  }
  const Eigen::MatrixXcd rho = state.density_matrix();
  const Eigen::Index dim_keep = Eigen::Index{1} << kept.size();
  const Eigen::Index dim_removed = Eigen::Index{1} << removed.size();
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);
  for (Eigen::Index a = 0; a < dim_keep; ++a) {
    for (Eigen::Index b = 0; b < dim_keep; ++b) {
      for (Eigen::Index c = 0; c < dim_removed; ++c) {
        reduced(a, b) += rho(compose_index(kept, a, removed, c, n),
                             compose_index(kept, b, removed, c, n));
      }
    }
  }
  return QubitState::mixed(std::move(reduced));
}

std::vector<double> partial_transpose_eigs(const QubitState& state) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument("partial transpose spectrum implemented for 2 qubits");
  }
  const Eigen::MatrixXcd rho = state.density_matrix();
  Eigen::MatrixXcd pt(4, 4);
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
          pt(2 * a1 + a2, 2 * b1 + b2) = rho(2 * a1 + b2, 2 * b1 + a2);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  std::vector<double> eigs(4);
  for (int i = 0; i < 4; ++i) {
    eigs[i] = solver.eigenvalues()(i);  // ascending
  }
  return eigs;
}

double entanglement_entropy(const QubitState& state, const std::vector<int>& party_a) {
  double entropy = 0.0;
  for (double c : schmidt(state, party_a)) {
    const double p = c * c;
    if (p > 1e-15) {
      entropy -= p * std::log2(p);
    }
  }
  return entropy;
}

GhzMeasurement measure_ghz_conjugate(int outcome_sign) {
  if (outcome_sign != 1 && outcome_sign != -1) {
    throw std::invalid_argument("outcome sign must be +1 or -1");
  }
  const QubitState input = ghz(3);
  // Project qubit 0 onto (|0> + sign |1>)/sqrt(2) without discarding it.
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(8);
  for (Eigen::Index tail = 0; tail < 4; ++tail) {
    const std::complex<double> overlap =
        (input.amplitudes()(tail) +
         static_cast<double>(outcome_sign) * input.amplitudes()(4 + tail)) /
        std::numbers::sqrt2;
    projected(tail) = overlap / std::numbers::sqrt2;
    projected(4 + tail) = static_cast<double>(outcome_sign) * overlap / std::numbers::sqrt2;
  }
  const double probability = projected.squaredNorm();
  projected /= std::sqrt(probability);
  return GhzMeasurement{QubitState::pure(std::move(projected)), probability};
}

}  // namespace cvent::qubit
