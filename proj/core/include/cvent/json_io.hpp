#pragma once

#include <string>

#include "cvent/criteria.hpp"
#include "cvent/gaussian_state.hpp"

namespace cvent {

/// Serializes a state as
///   {"convention":"hbar=1/2","n_modes":N,"mean":[2N reals],"cov":[[...],...]}
/// with a row-major covariance.  Throws if any entry is non-finite (the JSON
/// output never contains NaN or Inf).
std::string state_to_json_string(const GaussianState& state, int indent = 2);

/// Parses and re-validates (convention tag, shapes, symmetry, physicality).
GaussianState state_from_json_string(const std::string& text);

void save_state(const GaussianState& state, const std::string& path);
GaussianState load_state(const std::string& path);

/// {"criterion":..., "value":..., "threshold":..., "margin":..., "verdict":...,
///  "scope_note":...}
std::string report_to_json_string(const CriterionReport& report, int indent = 2);

}  // namespace cvent
