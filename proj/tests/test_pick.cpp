#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hinf/characteristics.hpp"
#include "hinf/pick.hpp"

using namespace hinf;
using Cx = std::complex<double>;

namespace {

constexpr double kE = std::numbers::e;

PointSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> xs(-4.0, 4.0), ys(0.2, 5.0);
  std::vector<HalfPlanePoint> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back({xs(rng), ys(rng)});
  return PointSequence(std::move(pts));
}

}  // namespace

TEST_CASE("pick matrix entries for one node") {
  const PointSequence z({{0.0, 1.0}});
  TargetValues w;
  w.values = {Cx(0.5, 0.0)};
  const HermitianMatrix q = pick_matrix(z, w, 1.0);
  CHECK(q.matrix()(0, 0).real() == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("two-point determinant oracle") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  TargetValues w;
  w.values = {Cx(1.0, 0.0), Cx(-1.0, 0.0)};
  const double rho = 2.0 + std::sqrt(3.0);
  const Eigen::MatrixXcd q = pick_matrix(z, w, rho).matrix();
  // Closed form: diag (rho^2-1)/2, (rho^2-1)/6 and off-diagonal (rho^2+1)/4.
  CHECK(q(0, 0).real() == doctest::Approx((rho * rho - 1) / 2).epsilon(1e-14));
  CHECK(q(1, 1).real() == doctest::Approx((rho * rho - 1) / 6).epsilon(1e-14));
  CHECK(q(0, 1).real() == doctest::Approx((rho * rho + 1) / 4).epsilon(1e-14));
  const double det = (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0)).real();
  CHECK(std::abs(det) < 1e-8 * q.cwiseAbs().maxCoeff() * q.cwiseAbs().maxCoeff());
}

TEST_CASE("minimal norm of constant data is its modulus") {
  std::mt19937_64 rng(7);
  const PointSequence z = random_sequence(rng, 4);
  TargetValues w;
  w.values.assign(4, Cx(1.0, 0.0));
  const PickResult r = minimal_norm({z, w});
  CHECK(r.rho_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.at_lower_endpoint);
}

TEST_CASE("two-point minimal norm hits 2 + sqrt 3") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  TargetValues w;
  w.values = {Cx(1.0, 0.0), Cx(-1.0, 0.0)};
  const PickResult r = minimal_norm({z, w}, 1e-10);
  CHECK(r.rho_star == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-8));
  CHECK(r.lambda_min_above >= -1e-8);
  CHECK(r.lambda_min_below < 0.0);
}

TEST_CASE("monotone feasibility in rho") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    const PointSequence z = random_sequence(rng, 3);
    TargetValues w;
    for (int j = 0; j < 3; ++j) w.values.push_back({c(rng), c(rng)});
    const double rho0 = minimal_norm({z, w}).rho_star;
    for (double factor : {1.01, 1.5, 4.0}) {
      CHECK(is_psd(pick_matrix_scaled(z, w, rho0 * factor), 1e-10));
    }
    CHECK_FALSE(is_psd(pick_matrix_scaled(z, w, rho0 * 0.97), 1e-10));
  }
}

TEST_CASE("scale equivariance and common-phase invariance") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  const PointSequence z = random_sequence(rng, 3);
  TargetValues w;
  for (int j = 0; j < 3; ++j) w.values.push_back({c(rng), c(rng)});
  const double base = minimal_norm({z, w}).rho_star;
  for (const Cx lambda : {Cx(2.0, 0.0), Cx(0.0, 1.0), Cx(-3.0, 0.0)}) {
    TargetValues scaled;
    for (const Cx& v : w.values) scaled.values.push_back(lambda * v);
    CHECK(minimal_norm({z, scaled}).rho_star ==
          doctest::Approx(std::abs(lambda) * base).epsilon(1e-7));
  }
}

TEST_CASE("zero data has zero norm") {
  const PointSequence z({{0.0, 1.0}, {1.0, 2.0}});
  TargetValues w;
  w.values.assign(2, Cx(0.0, 0.0));
  CHECK(minimal_norm({z, w}).rho_star == 0.0);
}

TEST_CASE("estimate_M on a single point is 1") {
  const PointSequence z({{0.0, 1.0}});
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    CHECK(estimate_M(z, 5, seed, 1).m_hat == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("estimate_M recovers the two-point extremal data") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  const EstimateM est = estimate_M(z, 200, 7, 2);
  CHECK(est.m_hat == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-4));
  // Extremal data is antipodal up to a common phase.
  const Cx ratio = est.argmax_w.values[1] / est.argmax_w.values[0];
  CHECK(std::abs(ratio + 1.0) < 1e-2);
}

TEST_CASE("estimate_M is deterministic given the seed") {
  std::mt19937_64 rng(17);
  const PointSequence z = random_sequence(rng, 3);
  const EstimateM a = estimate_M(z, 20, 12345, 1);
  const EstimateM b = estimate_M(z, 20, 12345, 1);
  CHECK(a.m_hat == b.m_hat);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(a.argmax_w.values[j] == b.argmax_w.values[j]);
  }
}

TEST_CASE("sampled estimate dominates the duality bound after ascent") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 3; ++trial) {
    const PointSequence z = random_sequence(rng, 3);
    const EstimateM est = estimate_M(z, 60, 100 + trial, 2);
    CHECK(est.m_hat >= duality_lower_bound(z) - 1e-6);
    CHECK(est.m_hat <=
          kE * c_J_estimate(z, {WeightFamily::standard_jones()}).value * (1.0 + 1e-9));
  }
}

TEST_CASE("duality bound equals c_H") {
  const PointSequence one({{0.0, 1.0}});
  CHECK(duality_lower_bound(one) == doctest::Approx(1.0));
  const PointSequence two({{0.0, 1.0}, {0.0, 3.0}});
  CHECK(duality_lower_bound(two) == doctest::Approx(3.5).epsilon(1e-12));
}
