#include "cvent/circuits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cvent/sampling.hpp"

namespace cvent {

void FamilySpec::validate() const {
  if (n_modes < 2) {
    throw std::invalid_argument("family states need at least 2 modes");
  }
  if (!std::isfinite(r1) || !std::isfinite(r2) || r1 < 0.0 || r2 < 0.0) {
    throw std::invalid_argument("family squeezing parameters must be finite and >= 0");
  }
}

GaussianState make_family_state(const FamilySpec& spec) {
  spec.validate();
  std::vector<GaussianState> inputs;
  inputs.reserve(spec.n_modes);
  inputs.push_back(GaussianState::squeezed_vacuum(spec.r1, SqueezeAxis::kMomentum));
  for (int i = 1; i < spec.n_modes; ++i) {
    inputs.push_back(GaussianState::squeezed_vacuum(spec.r2, SqueezeAxis::kPosition));
  }
  return apply(SymplecticOp::n_splitter(spec.n_modes), tensor(inputs));
}

GaussianState make_partial_three_mode(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw std::invalid_argument("squeezing parameter must be finite and >= 0");
  }
  return tensor({make_family_state({.n_modes = 2, .r1 = r, .r2 = r}),
                 GaussianState::vacuum(1)});
}

double MqcSpec::sin_lower_bound() const {
  return 1.0 / std::sqrt(static_cast<double>(receivers) + 1.0);
}

double MqcSpec::sin_upper_bound() const {
  return std::sqrt(static_cast<double>(receivers) /
                   (static_cast<double>(receivers) + 1.0));
}

double MqcSpec::derived_exp_minus_2r1() const {
  const double root_m = std::sqrt(static_cast<double>(receivers));
  const double s = std::sin(theta0);
  const double c = std::cos(theta0);
  return (root_m * s - c) / (root_m * s + c);
}

double MqcSpec::derived_exp_minus_2r2() const {
  const double root_m = std::sqrt(static_cast<double>(receivers));
  const double s = std::sin(theta0);
  const double c = std::cos(theta0);
  return (root_m * c - s) / (root_m * c + s);
}

double MqcSpec::derived_r1() const { return -0.5 * std::log(derived_exp_minus_2r1()); }

double MqcSpec::derived_r2() const { return -0.5 * std::log(derived_exp_minus_2r2()); }

void MqcSpec::validate() const {
  if (receivers < 1) {
    throw std::invalid_argument("the multiuser channel needs at least 1 receiver");
  }
  if (!std::isfinite(theta0)) {
    throw std::invalid_argument("theta0 must be finite");
  }
  const double s = std::sin(theta0);
  if (s < sin_lower_bound() - 1e-12) {
    throw std::invalid_argument(
        "theta0 violates the lower admissibility bound sin(theta0) >= 1/sqrt(M+1): "
        "sin(theta0) = " + std::to_string(s) + ", bound = " +
        std::to_string(sin_lower_bound()));
  }
  if (s > sin_upper_bound() + 1e-12) {
    throw std::invalid_argument(
        "theta0 violates the upper admissibility bound sin(theta0) <= sqrt(M/(M+1)): "
        "sin(theta0) = " + std::to_string(s) + ", bound = " +
        std::to_string(sin_upper_bound()));
  }
  // At the interval endpoints one derived squeezer diverges, so the state
  // only exists for strictly interior angles.
  const double floor = std::exp(-2.0 * kMaxDerivedSqueeze);
  if (!(derived_exp_minus_2r1() > floor)) {
    throw std::invalid_argument(
        "derived squeezer r1 diverges at the lower admissibility bound "
        "(exp(-2 r1) = " + std::to_string(derived_exp_minus_2r1()) + ")");
  }
  if (!(derived_exp_minus_2r2() > floor)) {
    throw std::invalid_argument(
        "derived squeezer r2 diverges at the upper admissibility bound "
        "(exp(-2 r2) = " + std::to_string(derived_exp_minus_2r2()) + ")");
  }
}

GaussianState make_mqc_state(const MqcSpec& spec) {
  spec.validate();
  const int n = spec.receivers + 1;
  std::vector<GaussianState> inputs;
  inputs.reserve(n);
  inputs.push_back(GaussianState::squeezed_vacuum(spec.derived_r1(), SqueezeAxis::kMomentum));
  inputs.push_back(GaussianState::squeezed_vacuum(spec.derived_r2(), SqueezeAxis::kPosition));
  for (int i = 2; i < n; ++i) {
    inputs.push_back(GaussianState::vacuum(1));
  }
  // B_{0,1}(theta0) first, then an M-splitter over modes 1..M.
  Eigen::MatrixXd m = SymplecticOp::beam_splitter(n, 0, 1, spec.theta0).matrix();
  for (int j = 1; j + 1 < n; ++j) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n - j)));
    m = SymplecticOp::beam_splitter(n, j, j + 1, theta).matrix() * m;
  }
  return apply(SymplecticOp(n, std::move(m)), tensor(inputs));
}

GhzAnalyzerResult ghz_analyzer(const GaussianState& state) {
  const int n = state.n_modes();
  if (n < 2) {
    throw std::invalid_argument("the GHZ analyzer needs at least 2 modes");
  }
  const SymplecticOp op = SymplecticOp::n_splitter(n).inverse();
  std::vector<Eigen::VectorXd> observables;
  observables.reserve(n);
  observables.push_back(op.matrix().row(1));  // p'_1
  for (int i = 1; i < n; ++i) {
    observables.push_back(op.matrix().row(2 * i));  // x'_{i+1}
  }
  return GhzAnalyzerResult{apply(op, state), std::move(observables), std::nullopt};
}

GhzAnalyzerResult ghz_analyzer_sampled(const GaussianState& state, std::uint64_t seed) {
  GhzAnalyzerResult result = ghz_analyzer(state);
  const Eigen::VectorXd outcomes = sample_quadratures(state, result.observables, seed);
  result.reconstructed = reconstruct_parameters(outcomes, state.n_modes());
  return result;
}

std::vector<double> reconstruct_parameters(const Eigen::VectorXd& outcomes, int n_modes) {
  if (n_modes < 2) {
    throw std::invalid_argument("reconstruction needs at least 2 modes");
  }
  if (outcomes.size() != n_modes) {
    throw std::invalid_argument("expected " + std::to_string(n_modes) +
                                " outcomes (p'_1, x'_2, ..., x'_N)");
  }
  const double n = static_cast<double>(n_modes);
  std::vector<double> params(n_modes);
  params[0] = std::sqrt(n) * outcomes(0);  // v

  // x'_k = sqrt((N-k+1)/(N-k+2)) T_k with T_k = u_{k-1} + (N-k)/(N-k+1) T_{k+1}
  // (1-based k = 2..N, T_{N+1} = 0): strip the prefactor, then back-substitute.
  double t_next = 0.0;
  for (int k = n_modes; k >= 2; --k) {
    const double t_k = outcomes(k - 1) * std::sqrt((n - k + 2.0) / (n - k + 1.0));
    params[k - 1] = t_k - (n - k) / (n - k + 1.0) * t_next;
    t_next = t_k;
  }
  return params;
}

double min_energy_r1(int n_modes, double r2) {
  if (n_modes < 2) {
    throw std::invalid_argument("minimum-energy relation needs at least 2 modes");
  }
  if (!std::isfinite(r2) || r2 <= 0.0) {
    throw std::invalid_argument("minimum-energy relation requires r2 > 0");
  }
  const double a = (n_modes - 1) * std::sinh(2.0 * r2);
  const double exp_2r1 = a * (std::sqrt(1.0 + 1.0 / (a * a)) + 1.0);
  return 0.5 * std::log(exp_2r1);
}

std::pair<GaussianState, GaussianState> convert_one_squeezer_to_canonical(double r1) {
  if (!std::isfinite(r1) || r1 < 0.0) {
    throw std::invalid_argument("squeezing parameter must be finite and >= 0");
  }
  const GaussianState one_squeezer = make_family_state({.n_modes = 2, .r1 = r1, .r2 = 0.0});
  const SymplecticOp locals = SymplecticOp::local_squeezer(2, 0, r1 / 2.0) *
                              SymplecticOp::local_squeezer(2, 1, r1 / 2.0);
  const GaussianState converted = apply(locals, one_squeezer);
  const GaussianState canonical =
      make_family_state({.n_modes = 2, .r1 = r1 / 2.0, .r2 = r1 / 2.0});
  return {converted, canonical};
}

}  // namespace cvent
