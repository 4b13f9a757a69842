#include "cvent/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cvent/circuits.hpp"

namespace cvent {

namespace {

std::string variance_verdict(double margin) {
  if (margin < -kDecisionTol) {
    return kVerdictRulesOut;
  }
  if (margin <= kDecisionTol) {
    return kVerdictBoundary;
  }
  return kVerdictConsistent;
}

CriterionReport make_variance_report(std::string name, double value, double threshold,
                                     std::string scope_note) {
  const double margin = value - threshold;
  return CriterionReport{std::move(name), value,           threshold,
                         margin,          variance_verdict(margin),
                         std::move(scope_note)};
}

Eigen::VectorXd position_difference(int n, int i, int j) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n);
  c(2 * i) = 1.0;
  c(2 * j) = -1.0;
  return c;
}

}  // namespace

CriterionReport crit_variance_sum(const GaussianState& state) {
  const int n = state.n_modes();
  if (n < 2) {
    throw std::invalid_argument("separability criteria need at least 2 modes");
  }
  const GhzAnalyzerResult analyzer = ghz_analyzer(state);
  double value = state.quadrature_variance(analyzer.observables[0]);
  double sum_x = 0.0;
  for (int i = 1; i < n; ++i) {
    sum_x += state.quadrature_variance(analyzer.observables[i]);
  }
  value += sum_x / (n - 1);
  return make_variance_report(
      "variance-sum", value, 0.5,
      "Necessary condition for full N-party separability evaluated on the "
      "GHZ-analyzer observables; a violation rules out full separability but "
      "does not by itself witness genuine multipartite entanglement. For a "
      "pure, totally symmetric state a violation does imply genuine "
      "multipartite entanglement.");
}

CriterionReport crit_relative_total(const GaussianState& state) {
  const int n = state.n_modes();
  if (n < 2) {
    throw std::invalid_argument("separability criteria need at least 2 modes");
  }
  // Ordered pairs: each unordered pair of relative positions counts twice.
  double sum_rel = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        sum_rel += state.quadrature_variance(position_difference(n, i, j));
      }
    }
  }
  Eigen::VectorXd total_p = Eigen::VectorXd::Zero(2 * n);
  for (int i = 0; i < n; ++i) {
    total_p(2 * i + 1) = 1.0;
  }
  const double value = sum_rel / (2.0 * (n - 1)) + state.quadrature_variance(total_p);
  return make_variance_report(
      "relative-total", value, n / 2.0,
      "Necessary condition for full N-party separability from the relative "
      "positions and the total momentum; a violation rules out full "
      "separability only. Coincides with the variance-sum decision for N = 2.");
}

CriterionReport tan_product(const GaussianState& state, int mode_i, int mode_j) {
  const int n = state.n_modes();
  if (mode_i < 0 || mode_j < 0 || mode_i >= n || mode_j >= n || mode_i == mode_j) {
    throw std::invalid_argument("product criterion needs two distinct modes in range");
  }
  Eigen::VectorXd x_diff = position_difference(n, mode_i, mode_j);
  Eigen::VectorXd p_sum = Eigen::VectorXd::Zero(2 * n);
  p_sum(2 * mode_i + 1) = 1.0;
  p_sum(2 * mode_j + 1) = 1.0;
  const double value =
      state.quadrature_variance(x_diff) * state.quadrature_variance(p_sum);
  return make_variance_report(
      "tan-product(" + std::to_string(mode_i) + "," + std::to_string(mode_j) + ")",
      value, 0.25,
      "Product-form necessary condition for separability of the two-mode "
      "marginal of modes (" + std::to_string(mode_i) + ", " +
      std::to_string(mode_j) + "); a violation shows this pair is inseparable.");
}

CriterionReport ppt_test(const GaussianState& state, const std::vector<int>& party_a) {
  const int n = state.n_modes();
  if (party_a.empty()) {
    throw std::invalid_argument("partial transpose needs a non-empty party");
  }
  std::vector<int> modes(party_a);
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  if (modes.front() < 0 || modes.back() >= n) {
    throw std::invalid_argument("party mode index out of range");
  }
  if (static_cast<int>(modes.size()) == n) {
    throw std::invalid_argument("partial transpose needs a proper subset of the modes");
  }
  // Time reversal on the party: p_k -> -p_k.
  Eigen::MatrixXd reversal = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int m : modes) {
    reversal(2 * m + 1, 2 * m + 1) = -1.0;
  }
  const Eigen::MatrixXd transformed = reversal * state.cov() * reversal;
  using namespace std::complex_literals;
  Eigen::MatrixXcd h = transformed.cast<std::complex<double>>();
  h += 0.25i * symplectic_form(n).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();

  std::string cut = "{";
  for (std::size_t i = 0; i < modes.size(); ++i) {
    cut += (i ? "," : "") + std::to_string(modes[i]);
  }
  cut += "}";
  const bool unphysical = min_eig < -kPhysicalityTol;
  return CriterionReport{
      "ppt" + cut,
      min_eig,
      0.0,
      min_eig,
      unphysical ? kVerdictPptUnphysical : kVerdictPptPhysical,
      "Partial transpose (time reversal) on modes " + cut +
          "; an unphysical result certifies inseparability across the cut. "
          "The test is necessary and sufficient only for 1x1-mode Gaussian "
          "bipartitions."};
}

}  // namespace cvent
