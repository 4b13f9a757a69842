#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cvent/gaussian_state.hpp"

namespace cvent {

inline constexpr int kMaxBellParties = 16;

/// One term of a Mermin-Klyshko combination: a dyadic-rational coefficient
/// (exact in double) and the choice of primed/unprimed setting per party,
/// encoded as a bitmask (bit i set = party i uses its primed setting).
struct BellTerm {
  double coefficient = 0.0;
  std::uint32_t primed_mask = 0;

  bool primed(int party) const { return (primed_mask >> party) & 1u; }
};

/// Signed list of setting assignments generated by the Mermin-Klyshko
/// recursion  B_N = [ (s_N + s_N') B_{N-1} + (s_N - s_N') B'_{N-1} ] / 2,
/// base case B_2 = (s_1 + s_1') s_2 + (s_1 - s_1') s_2'.  Under local realism
/// the expectation of the combination is bounded by 2 in absolute value.
struct BellCombination {
  int n_parties = 0;
  std::vector<BellTerm> terms;  // sorted by primed_mask, zero terms dropped
};

BellCombination mermin_combination(int n_parties);

/// Two displacements per party: the unprimed and the primed setting.
struct DisplacementSettings {
  std::vector<std::complex<double>> unprimed;
  std::vector<std::complex<double>> primed;

  /// The symmetric choice used for the family states: unprimed = 0,
  /// primed = sqrt(j) e^{i phase} for every party.
  static DisplacementSettings equal(int n_parties, double j, double phase);
};

/// Expectation of the product of displaced parity operators,
/// Pi(alpha) = (pi/2)^N W(alpha).  Equals 1 at alpha = 0 for pure states.
double displaced_parity(const GaussianState& state,
                        const std::vector<std::complex<double>>& alpha);

/// sum over terms of coefficient * Pi(assignment-selected displacements).
double bell_value(const GaussianState& state, const BellCombination& combo,
                  const DisplacementSettings& settings);

struct BellMaximum {
  double j_star = 0.0;
  double b_star = 0.0;
};

/// Deterministic 1-D maximization of the Mermin-Klyshko value of the family
/// state with r1 = r2 = r over the displacement magnitude j >= 0, using equal
/// settings with the given phase (default pi/2, i.e. primed = i sqrt(j)).
/// Coarse log grid over [j_lo, j_hi] plus golden-section refinement to
/// relative width 1e-8; j = 0 is always a candidate.
BellMaximum maximize_bell(int n_parties, double r, double phase = 1.5707963267948966,
                          double j_lo = 1e-8, double j_hi = 10.0, int grid_points = 200);

}  // namespace cvent
