// Command-line front end: builds states, runs the separability criteria,
// sweeps the Bell maximization, and emits the reproduction CSV for the
// partial three-mode example.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvent/bell.hpp"
#include "cvent/circuits.hpp"
#include "cvent/criteria.hpp"
#include "cvent/json_io.hpp"
#include "cvent/qubit.hpp"
#include "cvent/sampling.hpp"

namespace {

// Locale-independent shortest-width formatting with 17 significant digits;
// CSV and JSON values round-trip exactly.
std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) {
      continue;
    }
    grid.push_back(std::stod(item));
  }
  if (grid.empty()) {
    throw CLI::ValidationError("--grid", "grid must contain at least one value");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  return out;
}

void print_state_summary(const cvent::GaussianState& state) {
  std::cout << "modes: " << state.n_modes() << "\n";
  std::cout << "physicality min eigenvalue: "
            << format_double(state.min_physicality_eigenvalue()) << "\n";
  std::cout << "symplectic eigenvalues:";
  double purity_defect = 0.0;
  for (double nu : state.symplectic_eigenvalues()) {
    std::cout << " " << format_double(nu);
    purity_defect = std::max(purity_defect, std::abs(nu - 0.25));
  }
  std::cout << (state.is_pure() ? " (pure)" : " (mixed)") << "\n";
  std::cout << "purity defect: " << format_double(purity_defect) << "\n";
}

void run_sample_check(const cvent::GaussianState& state, int count,
                      std::uint64_t seed) {
  const cvent::GhzAnalyzerResult analyzer = cvent::ghz_analyzer(state);
  const Eigen::MatrixXd samples =
      cvent::sample_quadratures(state, analyzer.observables, seed, count);
  std::cout << "homodyne sample check (" << count << " draws, seed " << seed << "):\n";
  const char* names[] = {"p'_1", "x'_i"};
  for (int k = 0; k < static_cast<int>(analyzer.observables.size()); ++k) {
    const Eigen::VectorXd column = samples.col(k);
    const double mean = column.mean();
    const double var = (column.array() - mean).square().sum() / (count - 1);
    const double analytic = state.quadrature_variance(analyzer.observables[k]);
    std::cout << "  " << (k == 0 ? names[0] : ("x'_" + std::to_string(k + 1)))
              << ": empirical var " << format_double(var) << ", analytic "
              << format_double(analytic) << "\n";
  }
}

int cmd_generate(const std::string& kind, int modes, double r1, double r2, double r,
                 int receivers, double theta0, const std::string& out,
                 std::uint64_t seed, int sample_check) {
  cvent::GaussianState state = [&] {
    if (kind == "family") {
      return cvent::make_family_state({modes, r1, r2});
    }
    if (kind == "partial3") {
      return cvent::make_partial_three_mode(r);
    }
    return cvent::make_mqc_state({receivers, theta0});
  }();
  cvent::save_state(state, out);
  std::cout << "wrote " << kind << " state to " << out << "\n";
  print_state_summary(state);
  if (sample_check > 0) {
    run_sample_check(state, sample_check, seed);
  }
  return 0;
}

int cmd_criteria(const std::string& state_path, const std::string& out) {
  const cvent::GaussianState state = cvent::load_state(state_path);
  const int n = state.n_modes();

  std::vector<cvent::CriterionReport> reports;
  reports.push_back(cvent::crit_variance_sum(state));
  reports.push_back(cvent::crit_relative_total(state));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      reports.push_back(cvent::tan_product(state, i, j));
    }
  }
  if (n >= 2) {
    for (int i = 0; i < n; ++i) {
      reports.push_back(cvent::ppt_test(state, {i}));
    }
  }

  nlohmann::json bundle;
  bundle["source"] = state_path;
  bundle["n_modes"] = n;
  bundle["pure"] = state.is_pure();
  nlohmann::json list = nlohmann::json::array();
  for (const cvent::CriterionReport& report : reports) {
    list.push_back(nlohmann::json::parse(cvent::report_to_json_string(report)));
  }
  bundle["reports"] = std::move(list);

  const std::string text = bundle.dump(2);
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream file = open_output(out);
    file << text << "\n";
    std::cout << "wrote criteria bundle to " << out << "\n";
  }
  return 0;
}

int cmd_bell(const std::vector<int>& parties, const std::string& grid_text,
             double phase, double j_lo, double j_hi, int j_points,
             const std::string& out) {
  std::vector<int> sorted_parties(parties);
  std::sort(sorted_parties.begin(), sorted_parties.end());
  sorted_parties.erase(std::unique(sorted_parties.begin(), sorted_parties.end()),
                       sorted_parties.end());
  const std::vector<double> grid = parse_grid(grid_text);

  std::ofstream file = open_output(out);
  file << "N,r,J_star,B_star,phase\n";
  for (int n : sorted_parties) {
    for (double r : grid) {
      const cvent::BellMaximum best =
          cvent::maximize_bell(n, r, phase, j_lo, j_hi, j_points);
      file << n << "," << format_double(r) << "," << format_double(best.j_star)
           << "," << format_double(best.b_star) << "," << format_double(phase)
           << "\n";
    }
  }
  std::cout << "wrote Bell sweep (" << sorted_parties.size() * grid.size()
            << " rows) to " << out << "\n";
  return 0;
}

int cmd_fig_example(const std::string& out) {
  std::ofstream file = open_output(out);
  file << "r,crit1_value,crit1_paper_formula,crit2_value,crit1_threshold,"
          "crit2_threshold\n";
  for (int i = 0; i <= 200; ++i) {
    const double r = i / 200.0;
    const cvent::GaussianState state = cvent::make_partial_three_mode(r);
    const double crit1 = cvent::crit_variance_sum(state).value;
    const double crit2 = cvent::crit_relative_total(state).value;
    // The printed closed form differs from the covariance value for r > 0;
    // both columns are emitted so the gap is reproducible.
    const double printed =
        0.25 * (std::exp(2.0 * r) / 3.0 + std::exp(-2.0 * r)) + 1.0 / 6.0;
    file << format_double(r) << "," << format_double(crit1) << ","
         << format_double(printed) << "," << format_double(crit2) << ",0.5,1.5\n";
  }
  std::cout << "wrote 201 rows to " << out << "\n";
  return 0;
}

int cmd_qubit_selftest() {
  using namespace cvent::qubit;
  int failures = 0;
  const auto check = [&failures](bool ok, const std::string& name) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) {
      ++failures;
    }
  };

  const auto w_eigs = partial_transpose_eigs(trace_out(w3(), {0}));
  const double root5 = std::sqrt(5.0);
  check(std::abs(w_eigs[0] - (1.0 - root5) / 6.0) < 1e-12 &&
            std::abs(w_eigs[1] - 1.0 / 3.0) < 1e-12 &&
            std::abs(w_eigs[2] - 1.0 / 3.0) < 1e-12 &&
            std::abs(w_eigs[3] - (1.0 + root5) / 6.0) < 1e-12,
        "traced W pair has partial-transpose spectrum {1/3, 1/3, (1 +- sqrt 5)/6}");

  const auto ghz_eigs = partial_transpose_eigs(trace_out(ghz(3), {0}));
  check(ghz_eigs[0] >= -1e-12, "traced GHZ pair stays PPT (separable)");

  const auto schmidt_pair = schmidt(ghz(2), {0});
  check(std::abs(schmidt_pair[0] - 1.0 / std::numbers::sqrt2) < 1e-12,
        "Bell pair has two equal Schmidt coefficients");
  check(std::abs(entanglement_entropy(ghz(2), {0}) - 1.0) < 1e-12,
        "Bell pair carries exactly 1 ebit");

  const GhzMeasurement plus = measure_ghz_conjugate(+1);
  const GhzMeasurement minus = measure_ghz_conjugate(-1);
  check(std::abs(plus.probability - 0.5) < 1e-12 &&
            std::abs(minus.probability - 0.5) < 1e-12,
        "conjugate-basis outcomes are equiprobable");
  check(std::abs(entanglement_entropy(plus.post_state, {1}) - 1.0) < 1e-10,
        "post-measurement pair is maximally entangled");

  if (failures != 0) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "qubit self-test passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite continuous-variable entanglement toolkit"};
  app.require_subcommand(1);

  // generate
  std::string gen_kind;
  int gen_modes = 3;
  double gen_r1 = 0.0;
  double gen_r2 = 0.0;
  double gen_r = 0.0;
  int gen_receivers = 2;
  double gen_theta0 = 0.7853981633974483;
  std::string gen_out;
  std::uint64_t seed = 20240101;
  int sample_check = 0;
  CLI::App* generate = app.add_subcommand(
      "generate", "Build a state and write it as a JSON file");
  generate->add_option("kind", gen_kind, "family | partial3 | mqc")
      ->required()
      ->check(CLI::IsMember({"family", "partial3", "mqc"}));
  generate->add_option("--modes", gen_modes, "family: number of modes N");
  generate->add_option("--r1", gen_r1, "family: momentum squeezing of mode 1");
  generate->add_option("--r2", gen_r2, "family: position squeezing of modes 2..N");
  generate->add_option("--r", gen_r, "partial3: squeezing of the entangled pair");
  generate->add_option("--receivers", gen_receivers, "mqc: receiver count M");
  generate->add_option("--theta0", gen_theta0, "mqc: beam-splitter angle (radians)");
  generate->add_option("--out", gen_out, "output state file")->required();
  generate->add_option("--seed", seed, "seed for the homodyne sample check");
  generate->add_option("--sample-check", sample_check,
                       "draw this many analyzer samples and compare variances");

  // criteria
  std::string crit_state;
  std::string crit_out;
  CLI::App* criteria = app.add_subcommand(
      "criteria", "Evaluate all separability tests on a state file");
  criteria->add_option("state", crit_state, "state JSON file")->required();
  criteria->add_option("--out", crit_out, "bundle output path (default: stdout)");

  // bell
  std::vector<int> bell_parties{2};
  std::string bell_grid = "0,0.5,1,2,3";
  double bell_phase = std::numbers::pi / 2.0;
  double bell_jlo = 1e-8;
  double bell_jhi = 10.0;
  int bell_jpoints = 200;
  std::string bell_out;
  CLI::App* bell = app.add_subcommand(
      "bell", "Maximize the Mermin-Klyshko value over displacements");
  bell->add_option("--parties", bell_parties, "party counts (2..8)")
      ->delimiter(',');
  bell->add_option("--grid", bell_grid, "comma list of squeezing values r");
  bell->add_option("--phase", bell_phase, "displacement phase (radians)");
  bell->add_option("--jmin", bell_jlo, "coarse-grid lower bound for J");
  bell->add_option("--jmax", bell_jhi, "coarse-grid upper bound for J");
  bell->add_option("--jpoints", bell_jpoints, "coarse-grid point count");
  bell->add_option("--out", bell_out, "output CSV path")->required();

  // fig-example
  std::string fig_out;
  CLI::App* fig = app.add_subcommand(
      "fig-example", "Emit the partial three-mode criterion curves as CSV");
  fig->add_option("--out", fig_out, "output CSV path")->required();

  app.add_subcommand("qubit-selftest", "Run the finite-dimensional reference checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(gen_kind, gen_modes, gen_r1, gen_r2, gen_r, gen_receivers,
                          gen_theta0, gen_out, seed, sample_check);
    }
    if (criteria->parsed()) {
      return cmd_criteria(crit_state, crit_out);
    }
    if (bell->parsed()) {
      return cmd_bell(bell_parties, bell_grid, bell_phase, bell_jlo, bell_jhi,
                      bell_jpoints, bell_out);
    }
    if (fig->parsed()) {
      return cmd_fig_example(fig_out);
    }
    return cmd_qubit_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
