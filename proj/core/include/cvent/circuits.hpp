#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cvent/gaussian_state.hpp"
#include "cvent/symplectic.hpp"

namespace cvent {

/// Parameters of the N-mode family states: one momentum-squeezed mode (r1)
/// and N-1 position-squeezed modes (r2) coupled by an N-splitter.
struct FamilySpec {
  int n_modes = 2;
  double r1 = 0.0;
  double r2 = 0.0;

  void validate() const;  // throws std::invalid_argument
};

/// Parameters of the (M+1)-mode multiuser quantum channel state: two squeezed
/// vacua combined at a beam splitter with angle theta0, one output kept as the
/// sender mode, the other distributed over M receiver modes by an M-splitter.
/// The squeezing values r1, r2 are derived from theta0; admissible angles have
/// 1/sqrt(M+1) <= sin theta0 <= sqrt(M/(M+1)), and both derived squeezers must
/// be finite (the endpoints of the interval make one of them diverge).
struct MqcSpec {
  /// Largest representable derived squeezing; angles whose derived r1 or r2
  /// exceed this are treated as divergent and rejected.
  static constexpr double kMaxDerivedSqueeze = 6.0;

  int receivers = 2;  // M
  double theta0 = 0.0;

  double sin_lower_bound() const;
  double sin_upper_bound() const;
  /// exp(-2 r1) and exp(-2 r2) as functions of theta0.
  double derived_exp_minus_2r1() const;
  double derived_exp_minus_2r2() const;
  double derived_r1() const;
  double derived_r2() const;

  void validate() const;  // throws std::invalid_argument naming the violated bound
};

GaussianState make_family_state(const FamilySpec& spec);

/// Modes 0 and 1 in a two-mode squeezed vacuum (r1 = r2 = r), mode 2 vacuum.
GaussianState make_partial_three_mode(double r);

GaussianState make_mqc_state(const MqcSpec& spec);

/// Output of the continuous-variable GHZ analyzer: the state after the
/// inverse N-splitter plus the commuting observable set {p'_1, x'_2, ..., x'_N}
/// expressed as coefficient vectors over the *input* quadratures.
struct GhzAnalyzerResult {
  GaussianState transformed;
  std::vector<Eigen::VectorXd> observables;
  /// (v, u_1, ..., u_{N-1}) reconstructed from a homodyne sample; present
  /// only when the analyzer was run with sampling.
  std::optional<std::vector<double>> reconstructed;
};

GhzAnalyzerResult ghz_analyzer(const GaussianState& state);

/// Analyzer plus one joint homodyne sample of its observables; fills
/// `reconstructed` with the decoded (v, u_1, ..., u_{N-1}).
GhzAnalyzerResult ghz_analyzer_sampled(const GaussianState& state, std::uint64_t seed);

/// Inverts the triangular relation between analyzer outcomes
/// (p'_1, x'_2, ..., x'_N) and the basis-state parameters: v = sqrt(N) p'_1,
/// u_{N-1} = sqrt(2) x'_N, then exact back-substitution upward.  Returns
/// (v, u_1, ..., u_{N-1}).
std::vector<double> reconstruct_parameters(const Eigen::VectorXd& outcomes, int n_modes);

/// Squeezing r1 of the minimum-mean-photon-number ("unbiased") family state
/// for given N and r2:
///   e^{+2 r1} = (N-1) sinh(2 r2) [sqrt(1 + 1/((N-1)^2 sinh^2 2 r2)) + 1],
/// equivalently sinh(2 r1) = (N-1) sinh(2 r2).  Requires r2 > 0.
double min_energy_r1(int n_modes, double r2);

/// Applies local squeezers with s1 = s2 = r1/2 to the two-mode family state
/// built from a single squeezer (r1, r2 = 0) and returns it together with the
/// canonical two-mode squeezed state of squeezing r1/2.  The two covariance
/// matrices agree entrywise.
std::pair<GaussianState, GaussianState> convert_one_squeezer_to_canonical(double r1);

}  // namespace cvent
