#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cvent/circuits.hpp"
#include "cvent/criteria.hpp"
#include "test_helpers.hpp"

using cvent::FamilySpec;
using cvent::GaussianState;
using cvent::make_family_state;
using cvent::make_mqc_state;
using cvent::MqcSpec;
using cvent::SymplecticOp;

namespace {

Eigen::VectorXd x_difference(int n, int i, int j) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n);
  c(2 * i) = 1.0;
  c(2 * j) = -1.0;
  return c;
}

Eigen::VectorXd total_momentum(int n) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n);
  for (int i = 0; i < n; ++i) {
    c(2 * i + 1) = 1.0;
  }
  return c;
}

Eigen::MatrixXd permute_modes(const Eigen::MatrixXd& cov, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Eigen::VectorXi rows(2 * n);
  for (int i = 0; i < n; ++i) {
    rows(2 * i) = 2 * perm[i];
    rows(2 * i + 1) = 2 * perm[i] + 1;
  }
  return cov(rows, rows);
}

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("family state correlations") {
  for (int n = 2; n <= 8; ++n) {
    for (double r1 : {0.0, 0.3, 0.7, 1.0, 2.0}) {
      for (double r2 : {0.0, 0.3, 0.7, 1.0, 2.0}) {
        const GaussianState state = make_family_state({n, r1, r2});
        for (int k = 0; k < n; ++k) {
          for (int l = k + 1; l < n; ++l) {
            CHECK(state.quadrature_variance(x_difference(n, k, l)) ==
                  doctest::Approx(std::exp(-2.0 * r2) / 2.0).epsilon(1e-13));
          }
        }
        CHECK(state.quadrature_variance(total_momentum(n)) ==
              doctest::Approx(n * std::exp(-2.0 * r1) / 4.0).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("family state edge cases and properties") {
  SUBCASE("zero squeezing is the vacuum") {
    const GaussianState state = make_family_state({4, 0.0, 0.0});
    CHECK(state.cov().isApprox(GaussianState::vacuum(4).cov(), 1e-14));
  }
  SUBCASE("purity for random specs") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> squeeze(0.0, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const GaussianState state = make_family_state({n, squeeze(rng), squeeze(rng)});
      CHECK(state.is_pure());
    }
  }
  SUBCASE("permutation symmetry for r1 = r2") {
    for (int n : {2, 3, 4}) {
      const GaussianState state = make_family_state({n, 0.8, 0.8});
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        CHECK((permute_modes(state.cov(), perm) - state.cov()).cwiseAbs().maxCoeff() <
              1e-12);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // Sampled permutations beyond n = 4.
    std::mt19937_64 rng(17);
    const GaussianState state = make_family_state({6, 0.5, 0.5});
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK((permute_modes(state.cov(), perm) - state.cov()).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
  SUBCASE("two-mode member is the canonical two-mode squeezed vacuum") {
    const double r = 0.6;
    const GaussianState state = make_family_state({2, r, r});
    CHECK(state.quadrature_variance(x_difference(2, 0, 1)) ==
          doctest::Approx(std::exp(-2.0 * r) / 2.0).epsilon(1e-13));
    CHECK(state.quadrature_variance(total_momentum(2)) ==
          doctest::Approx(std::exp(-2.0 * r) / 2.0).epsilon(1e-13));
  }
  SUBCASE("invalid specs") {
    CHECK_THROWS_AS(make_family_state({1, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_family_state({3, -0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(make_family_state({3, 0.5, std::nan("")}), std::invalid_argument);
  }
}

TEST_CASE("family Wigner matches the closed form") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coord(-1.2, 1.2);
  for (int n : {2, 3, 4, 5}) {
    for (double r : {0.3, 0.8}) {
      const GaussianState state = make_family_state({n, r, r});
      for (int trial = 0; trial < 250; ++trial) {
        Eigen::VectorXd point(2 * n);
        for (int i = 0; i < 2 * n; ++i) {
          point(i) = coord(rng);
        }
        const double expected = oracle::family_wigner(n, r, point);
        const double actual = state.wigner(point);
        CHECK(std::abs(actual - expected) <= 1e-9 * std::abs(expected));
      }
    }
  }
}

TEST_CASE("partial three-mode state") {
  SUBCASE("r = 0 is the vacuum") {
    CHECK(cvent::make_partial_three_mode(0.0).cov().isApprox(
        GaussianState::vacuum(3).cov(), 1e-14));
  }
  SUBCASE("modes 0-1 carry the pair, mode 2 stays vacuum") {
    const GaussianState state = cvent::make_partial_three_mode(0.9);
    CHECK(state.is_pure());
    CHECK(state.cov().block(4, 4, 2, 2).isApprox(Eigen::Matrix2d::Identity() * 0.25,
                                                 1e-14));
    CHECK(state.cov().block(0, 4, 4, 2).isZero(1e-14));
    CHECK(state.cov().block(0, 0, 4, 4).isApprox(
        make_family_state({2, 0.9, 0.9}).cov(), 1e-14));
  }
  SUBCASE("negative squeezing rejected") {
    CHECK_THROWS_AS(cvent::make_partial_three_mode(-0.2), std::invalid_argument);
  }
}

TEST_CASE("multiuser channel admissibility") {
  SUBCASE("bounds named in errors") {
    CHECK_THROWS_WITH_AS(make_mqc_state({2, 0.1}),
                         doctest::Contains("lower admissibility bound"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_mqc_state({2, 1.5}),
                         doctest::Contains("upper admissibility bound"),
                         std::invalid_argument);
  }
  SUBCASE("interval endpoints make a squeezer diverge") {
    const double lower = std::asin(1.0 / std::sqrt(3.0));
    CHECK(MqcSpec{2, lower}.derived_exp_minus_2r1() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(make_mqc_state({2, lower}),
                         doctest::Contains("r1 diverges"), std::invalid_argument);
    const double upper = std::asin(std::sqrt(2.0 / 3.0));
    CHECK_THROWS_WITH_AS(make_mqc_state({2, upper}),
                         doctest::Contains("r2 diverges"), std::invalid_argument);
  }
  SUBCASE("one receiver has a degenerate interval and no finite realization") {
    const MqcSpec spec{1, std::numbers::pi / 4.0};
    CHECK(spec.sin_lower_bound() == doctest::Approx(spec.sin_upper_bound()));
    CHECK_THROWS_AS(make_mqc_state(spec), std::invalid_argument);
  }
}

TEST_CASE("multiuser channel state") {
  // Midpoint of the admissible angle interval for M = 2 receivers.
  const MqcSpec spec{2, 0.5 * (std::asin(1.0 / std::sqrt(3.0)) +
                               std::asin(std::sqrt(2.0 / 3.0)))};
  const GaussianState state = make_mqc_state(spec);
  REQUIRE(state.n_modes() == 3);
  CHECK(state.is_pure());

  SUBCASE("Wigner agreement with the closed form at random points") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      Eigen::VectorXd point(6);
      for (int i = 0; i < 6; ++i) {
        point(i) = coord(rng);
      }
      const double expected = oracle::mqc_wigner(2, spec.theta0, spec.derived_r1(),
                                                 spec.derived_r2(), point);
      CHECK(std::abs(state.wigner(point) - expected) <= 1e-9 * std::abs(expected));
    }
  }
  SUBCASE("receiver modes are permutation symmetric") {
    CHECK((permute_modes(state.cov(), {0, 2, 1}) - state.cov()).cwiseAbs().maxCoeff() <
          1e-12);
    const MqcSpec wide{3, 0.8};
    const GaussianState four = make_mqc_state(wide);
    for (const std::vector<int>& perm :
         {std::vector<int>{0, 2, 1, 3}, {0, 3, 2, 1}, {0, 1, 3, 2}, {0, 2, 3, 1}}) {
      CHECK((permute_modes(four.cov(), perm) - four.cov()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("sender mode cannot be factored out") {
    const cvent::CriterionReport report = cvent::ppt_test(state, {0});
    CHECK(report.verdict == cvent::kVerdictPptUnphysical);
  }
  SUBCASE("larger receiver counts stay pure and match the closed form") {
    const MqcSpec wide{4, 0.7};
    const GaussianState five = make_mqc_state(wide);
    CHECK(five.is_pure());
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> coord(-0.8, 0.8);
    for (int trial = 0; trial < 200; ++trial) {
      Eigen::VectorXd point(10);
      for (int i = 0; i < 10; ++i) {
        point(i) = coord(rng);
      }
      const double expected = oracle::mqc_wigner(4, wide.theta0, wide.derived_r1(),
                                                 wide.derived_r2(), point);
      CHECK(std::abs(five.wigner(point) - expected) <= 1e-9 * std::abs(expected));
    }
  }
}

TEST_CASE("GHZ analyzer observables") {
  const double r = 0.7;
  const GaussianState family = make_family_state({3, r, r});
  const cvent::GhzAnalyzerResult result = cvent::ghz_analyzer(family);
  REQUIRE(result.observables.size() == 3);

  SUBCASE("three-mode coefficients") {
    const Eigen::VectorXd& p1 = result.observables[0];
    for (int i = 0; i < 3; ++i) {
      CHECK(p1(2 * i + 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
      CHECK(p1(2 * i) == doctest::Approx(0.0));
    }
    const Eigen::VectorXd& x2 = result.observables[1];
    CHECK(x2(0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(x2(2) == doctest::Approx(-1.0 / std::sqrt(6.0)));
    CHECK(x2(4) == doctest::Approx(-1.0 / std::sqrt(6.0)));
    const Eigen::VectorXd& x3 = result.observables[2];
    CHECK(x3(2) == doctest::Approx(1.0 / std::numbers::sqrt2));
    CHECK(x3(4) == doctest::Approx(-1.0 / std::numbers::sqrt2));
  }
  SUBCASE("observables pairwise commute") {
    const Eigen::MatrixXd omega = cvent::symplectic_form(3);
    for (std::size_t i = 0; i < result.observables.size(); ++i) {
      for (std::size_t j = i + 1; j < result.observables.size(); ++j) {
        CHECK(std::abs(result.observables[i].dot(omega * result.observables[j])) <
              1e-12);
      }
    }
  }
  SUBCASE("analyzer returns the squeezed input variances") {
    for (const Eigen::VectorXd& obs : result.observables) {
      CHECK(family.quadrature_variance(obs) ==
            doctest::Approx(std::exp(-2.0 * r) / 4.0).epsilon(1e-12));
    }
  }
  SUBCASE("single mode rejected") {
    CHECK_THROWS_AS(cvent::ghz_analyzer(GaussianState::vacuum(1)), std::invalid_argument);
  }
}

TEST_CASE("parameter reconstruction") {
  SUBCASE("two-mode case is a plain rescaling") {
    Eigen::Vector2d outcomes(0.4, -0.3);
    const auto params = cvent::reconstruct_parameters(outcomes, 2);
    REQUIRE(params.size() == 2);
    CHECK(params[0] == doctest::Approx(std::numbers::sqrt2 * 0.4).epsilon(1e-14));
    CHECK(params[1] == doctest::Approx(std::numbers::sqrt2 * -0.3).epsilon(1e-14));
  }
  SUBCASE("round trip through the analyzer matrix") {
    // Synthetic mode values with known v and u_i: the analyzer rows applied to
    // them must decode back exactly.
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int n = 2; n <= 6; ++n) {
      Eigen::VectorXd quadratures(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        quadratures(i) = coord(rng);
      }
      double v = 0.0;
      for (int i = 0; i < n; ++i) {
        v += quadratures(2 * i + 1);
      }
      const cvent::GhzAnalyzerResult analyzer =
          cvent::ghz_analyzer(GaussianState::vacuum(n));
      Eigen::VectorXd outcomes(n);
      for (int i = 0; i < n; ++i) {
        outcomes(i) = analyzer.observables[i].dot(quadratures);
      }
      const auto params = cvent::reconstruct_parameters(outcomes, n);
      CHECK(params[0] == doctest::Approx(v).epsilon(1e-12));
      for (int k = 1; k < n; ++k) {
        const double u_k = quadratures(2 * (k - 1)) - quadratures(2 * k);
        CHECK(params[k] == doctest::Approx(u_k).epsilon(1e-12));
      }
    }
  }
  SUBCASE("outcome count must match") {
    CHECK_THROWS_AS(cvent::reconstruct_parameters(Eigen::Vector3d::Zero(), 4),
                    std::invalid_argument);
  }
}

TEST_CASE("sampled analyzer fills the reconstruction") {
  const GaussianState family = make_family_state({3, 0.5, 0.5});
  const cvent::GhzAnalyzerResult result = cvent::ghz_analyzer_sampled(family, 123);
  REQUIRE(result.reconstructed.has_value());
  CHECK(result.reconstructed->size() == 3);
  const cvent::GhzAnalyzerResult again = cvent::ghz_analyzer_sampled(family, 123);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK((*result.reconstructed)[i] == (*again.reconstructed)[i]);
  }
}

TEST_CASE("minimum-energy relation") {
  SUBCASE("two modes give equal squeezers") {
    for (double r2 : {0.2, 0.7, 1.9}) {
      CHECK(cvent::min_energy_r1(2, r2) == doctest::Approx(r2).epsilon(1e-12));
    }
  }
  SUBCASE("both branches multiply to one") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> squeeze(0.05, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const double r2 = squeeze(rng);
      const double a = (n - 1) * std::sinh(2.0 * r2);
      const double plus = a * (std::sqrt(1.0 + 1.0 / (a * a)) + 1.0);
      const double minus = a * (std::sqrt(1.0 + 1.0 / (a * a)) - 1.0);
      // The naive minus branch cancels for large arguments, so allow for its
      // conditioning here; the acceptance residual uses the stable sinh form.
      CHECK(plus * minus == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(cvent::min_energy_r1(n, r2) == doctest::Approx(0.5 * std::log(plus)));
    }
  }
  SUBCASE("large-squeezing limit") {
    const double r1 = cvent::min_energy_r1(4, 5.0);
    CHECK(std::exp(2.0 * r1) / (3.0 * std::exp(10.0)) == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("unbiased per-mode variances") {
    // The defining property: each output mode has equal x and p variance.
    const int n = 5;
    const double r2 = 0.6;
    const GaussianState state = make_family_state({n, cvent::min_energy_r1(n, r2), r2});
    for (int m = 0; m < n; ++m) {
      CHECK(state.cov()(2 * m, 2 * m) ==
            doctest::Approx(state.cov()(2 * m + 1, 2 * m + 1)).epsilon(1e-12));
    }
  }
  SUBCASE("degenerate input rejected") {
    CHECK_THROWS_AS(cvent::min_energy_r1(4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(cvent::min_energy_r1(1, 0.5), std::invalid_argument);
  }
}

TEST_CASE("local squeezing maps the one-squeezer state to the canonical pair") {
  SUBCASE("zero squeezing gives two vacua") {
    const auto [converted, canonical] = cvent::convert_one_squeezer_to_canonical(0.0);
    CHECK(converted.cov().isApprox(GaussianState::vacuum(2).cov(), 1e-14));
    CHECK(canonical.cov().isApprox(GaussianState::vacuum(2).cov(), 1e-14));
  }
  SUBCASE("covariances agree entrywise") {
    for (double r1 : {0.5, 1.0, 2.0, 3.0}) {
      const auto [converted, canonical] = cvent::convert_one_squeezer_to_canonical(r1);
      CHECK((converted.cov() - canonical.cov()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("entropies across the cut agree") {
    for (double r1 : {0.5, 1.0, 3.0}) {
      const auto [converted, canonical] = cvent::convert_one_squeezer_to_canonical(r1);
      const double lhs = converted.entropy_of_subsystem({0});
      const double rhs = canonical.entropy_of_subsystem({0});
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      CHECK(rhs == doctest::Approx(oracle::tmsv_entropy(r1 / 2.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("traced family state reproduces the bipartite correlation matrix") {
  for (double r : {0.0, 0.4, 1.0}) {
    const GaussianState traced =
        make_family_state({3, r, r}).partial_trace({1, 2});
    CHECK((traced.cov() - oracle::traced_family_cov(r)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // At r = 0 that matrix is the two-mode vacuum.
  CHECK((oracle::traced_family_cov(0.0) - Eigen::Matrix4d::Identity() * 0.25)
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

}  // TEST_SUITE
