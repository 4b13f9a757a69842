#include "cvent/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cvent/circuits.hpp"

namespace cvent {

BellCombination mermin_combination(int n_parties) {
  if (n_parties < 2) {
    throw std::invalid_argument("the recursion needs at least 2 parties");
  }
  if (n_parties > kMaxBellParties) {
    throw std::invalid_argument("at most " + std::to_string(kMaxBellParties) +
                                " parties supported");
  }
  // Dense coefficient table over setting assignments; all arithmetic is on
  // dyadic rationals and therefore exact in double.
  std::vector<double> coeffs(4, 0.0);
  coeffs[0b00] = 1.0;   // s_1  s_2
  coeffs[0b01] = 1.0;   // s_1' s_2
  coeffs[0b10] = 1.0;   // s_1  s_2'
  coeffs[0b11] = -1.0;  // s_1' s_2'

  for (int n = 3; n <= n_parties; ++n) {
    const std::uint32_t size = 1u << (n - 1);
    const std::uint32_t swap_mask = size - 1;
    const std::uint32_t new_bit = size;
    std::vector<double> next(2 * size, 0.0);
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      const double c = coeffs[mask];
      if (c == 0.0) {
        continue;
      }
      // (s_n + s_n')/2 * B_{n-1}
      next[mask] += c / 2.0;
      next[mask | new_bit] += c / 2.0;
      // (s_n - s_n')/2 * B'_{n-1}, where B' swaps primed and unprimed
      const std::uint32_t swapped = mask ^ swap_mask;
      next[swapped] += c / 2.0;
      next[swapped | new_bit] -= c / 2.0;
    }
    coeffs = std::move(next);
  }

  BellCombination combo;
  combo.n_parties = n_parties;
  for (std::uint32_t mask = 0; mask < coeffs.size(); ++mask) {
    if (coeffs[mask] != 0.0) {
      combo.terms.push_back(BellTerm{coeffs[mask], mask});
    }
  }
  return combo;
}

DisplacementSettings DisplacementSettings::equal(int n_parties, double j, double phase) {
  if (n_parties < 1) {
    throw std::invalid_argument("need at least 1 party");
  }
  if (!std::isfinite(j) || j < 0.0 || !std::isfinite(phase)) {
    throw std::invalid_argument("displacement magnitude must be finite and >= 0");
  }
  const std::complex<double> displaced =
      std::sqrt(j) * std::exp(std::complex<double>(0.0, phase));
  DisplacementSettings settings;
  settings.unprimed.assign(n_parties, {0.0, 0.0});
  settings.primed.assign(n_parties, displaced);
  return settings;
}

double displaced_parity(const GaussianState& state,
                        const std::vector<std::complex<double>>& alpha) {
  if (static_cast<int>(alpha.size()) != state.n_modes()) {
    throw std::invalid_argument("need one displacement per mode");
  }
  const double scale = std::pow(std::numbers::pi / 2.0, state.n_modes());
  return scale * state.wigner(point_from_amplitudes(alpha));
}

double bell_value(const GaussianState& state, const BellCombination& combo,
                  const DisplacementSettings& settings) {
  const int n = combo.n_parties;
  if (state.n_modes() != n ||
      static_cast<int>(settings.unprimed.size()) != n ||
      static_cast<int>(settings.primed.size()) != n) {
    throw std::invalid_argument("state, combination, and settings sizes disagree");
  }
  std::vector<std::complex<double>> alpha(n);
  double total = 0.0;
  for (const BellTerm& term : combo.terms) {
    for (int party = 0; party < n; ++party) {
      alpha[party] =
          term.primed(party) ? settings.primed[party] : settings.unprimed[party];
    }
    total += term.coefficient * displaced_parity(state, alpha);
  }
  return total;
}

namespace {

// Golden-section maximization of f over [lo, hi] in log space.
double golden_section_log(const std::function<double(double)>& f, double log_lo,
                          double log_hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = log_lo;
  double b = log_hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(std::exp(c));
  double fd = f(std::exp(d));
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(std::exp(d));
    }
  }
  return (a + b) / 2.0;
}

}  // namespace

BellMaximum maximize_bell(int n_parties, double r, double phase, double j_lo,
                          double j_hi, int grid_points) {
  if (n_parties < 2 || n_parties > 8) {
    throw std::invalid_argument("maximization supported for 2 to 8 parties");
  }
  if (!std::isfinite(r) || r < 0.0) {
    throw std::invalid_argument("squeezing parameter must be finite and >= 0");
  }
  if (!(j_lo > 0.0) || !(j_hi > j_lo) || grid_points < 3) {
    throw std::invalid_argument("displacement grid must satisfy 0 < j_lo < j_hi "
                                "with at least 3 points");
  }
  const GaussianState state =
      make_family_state({.n_modes = n_parties, .r1 = r, .r2 = r});
  const BellCombination combo = mermin_combination(n_parties);
  const auto value_at = [&](double j) {
    return bell_value(state, combo, DisplacementSettings::equal(n_parties, j, phase));
  };

  // j = 0 (all parities equal 1) is always a candidate; the combination value
  // there is exactly 2.
  BellMaximum best{0.0, value_at(0.0)};

  const double log_lo = std::log(j_lo);
  const double log_hi = std::log(j_hi);
  std::vector<double> log_grid(grid_points);
  std::vector<double> values(grid_points);
  int best_index = 0;
  for (int i = 0; i < grid_points; ++i) {
    log_grid[i] = log_lo + (log_hi - log_lo) * i / (grid_points - 1);
    values[i] = value_at(std::exp(log_grid[i]));
    if (values[i] > values[best_index]) {
      best_index = i;
    }
  }

  const double bracket_lo = log_grid[std::max(0, best_index - 1)];
  const double bracket_hi = log_grid[std::min(grid_points - 1, best_index + 1)];
  const double log_j = golden_section_log(value_at, bracket_lo, bracket_hi, 1e-8);
  const double j_star = std::exp(log_j);
  const double b_star = value_at(j_star);
  if (b_star > best.b_star) {
    best = BellMaximum{j_star, b_star};
  }
  return best;
}

}  // namespace cvent
