#include "cvent/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cvent {

namespace {

constexpr const char* kConvention = "hbar=1/2";

void require_finite(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("refusing to serialize non-finite value");
  }
}

}  // namespace

std::string state_to_json_string(const GaussianState& state, int indent) {
  nlohmann::json doc;
  doc["convention"] = kConvention;
  doc["n_modes"] = state.n_modes();
  nlohmann::json mean = nlohmann::json::array();
  for (Eigen::Index i = 0; i < state.mean().size(); ++i) {
    require_finite(state.mean()(i));
    mean.push_back(state.mean()(i));
  }
  doc["mean"] = std::move(mean);
  nlohmann::json cov = nlohmann::json::array();
  for (Eigen::Index r = 0; r < state.cov().rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < state.cov().cols(); ++c) {
      require_finite(state.cov()(r, c));
      row.push_back(state.cov()(r, c));
    }
    cov.push_back(std::move(row));
  }
  doc["cov"] = std::move(cov);
  return doc.dump(indent);
}

GaussianState state_from_json_string(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.contains("convention") || doc["convention"] != kConvention) {
    throw std::invalid_argument(std::string("state file must declare convention \"") +
                                kConvention + "\"");
  }
  const int n = doc.at("n_modes").get<int>();
  if (n < 1) {
    throw std::invalid_argument("n_modes must be positive");
  }
  const auto& mean_json = doc.at("mean");
  const auto& cov_json = doc.at("cov");
  if (static_cast<int>(mean_json.size()) != 2 * n) {
    throw std::invalid_argument("mean must have length 2 * n_modes");
  }
  Eigen::VectorXd mean(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    mean(i) = mean_json.at(i).get<double>();
  }
  if (static_cast<int>(cov_json.size()) != 2 * n) {
    throw std::invalid_argument("cov must be a 2N x 2N matrix");
  }
  Eigen::MatrixXd cov(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    const auto& row = cov_json.at(r);
    if (static_cast<int>(row.size()) != 2 * n) {
      throw std::invalid_argument("cov must be a 2N x 2N matrix");
    }
    for (int c = 0; c < 2 * n; ++c) {
      cov(r, c) = row.at(c).get<double>();
    }
  }
  // The constructor re-validates symmetry and physicality.
  return GaussianState(std::move(mean), std::move(cov));
}

void save_state(const GaussianState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << state_to_json_string(state) << "\n";
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

GaussianState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return state_from_json_string(text);
}

std::string report_to_json_string(const CriterionReport& report, int indent) {
  require_finite(report.value);
  require_finite(report.threshold);
  require_finite(report.margin);
  nlohmann::json doc;
  doc["criterion"] = report.criterion;
  doc["value"] = report.value;
  doc["threshold"] = report.threshold;
  doc["margin"] = report.margin;
  doc["verdict"] = report.verdict;
  doc["scope_note"] = report.scope_note;
  return doc.dump(indent);
}

}  // namespace cvent
