#pragma once

#include <string>
#include <vector>

#include "cvent/gaussian_state.hpp"

namespace cvent {

// Verdict labels.  Variance-type criteria decide by the sign of the margin
// with tolerance kDecisionTol: |margin| below it is reported as "boundary",
// never as a violation.
inline constexpr double kDecisionTol = 1e-12;
inline constexpr const char* kVerdictConsistent = "consistent-with-full-separability";
inline constexpr const char* kVerdictRulesOut = "rules-out-full-separability";
inline constexpr const char* kVerdictBoundary = "boundary";
inline constexpr const char* kVerdictPptPhysical = "PPT-physical";
inline constexpr const char* kVerdictPptUnphysical = "PPT-unphysical";

/// Result of one separability test: the tested value, its threshold, the
/// margin value - threshold, the verdict, and a scope note stating what the
/// verdict does and does not imply.
struct CriterionReport {
  std::string criterion;
  double value = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  std::string verdict;
  std::string scope_note;
};

/// Variance-sum condition on the GHZ-analyzer observables: every fully
/// separable N-mode state obeys
///   Var(p'_1) + sum_{i=2..N} Var(x'_i) / (N-1) >= 1/2.
/// A value below 1/2 rules out full separability (only).
CriterionReport crit_variance_sum(const GaussianState& state);

/// Relative-position / total-momentum condition: every fully separable state
/// obeys  sum_{i != j} Var(x_i - x_j) / (2(N-1)) + Var(sum_i p_i) >= N/2,
/// the sum running over ordered pairs.  Coincides with crit_variance_sum's
/// decision for N = 2.
CriterionReport crit_relative_total(const GaussianState& state);

/// Product-form two-party condition on modes (i, j):
///   Var(x_i - x_j) * Var(p_i + p_j) >= 1/4  for separable pairs.
CriterionReport tan_product(const GaussianState& state, int mode_i, int mode_j);

/// Partial transpose as time reversal: p_k -> -p_k on party_a's modes, then a
/// physicality test of the transformed covariance.  PPT-unphysical implies
/// inseparability across the cut; the test is conclusive in both directions
/// only for 1x1-mode Gaussian bipartitions.  Uses the same physicality
/// tolerance as GaussianState so verdicts are reproducible from serialized
/// states.
CriterionReport ppt_test(const GaussianState& state, const std::vector<int>& party_a);

}  // namespace cvent
