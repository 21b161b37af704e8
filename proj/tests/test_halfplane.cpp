#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hinf/gamma_example.hpp"
#include "hinf/halfplane.hpp"

using namespace hinf;
using Cx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Direct factor-by-factor product, the small-n oracle for the log-space path.
Cx direct_product(const PointSequence& z, Cx at, std::optional<std::size_t> exclude = {},
                  const SignConvention& sign = SignConvention::plain()) {
  Cx prod = 1.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (exclude && k == *exclude) continue;
    prod *= double(sign.sign(k)) * (at - z.node(k)) / (at - std::conj(z.node(k)));
  }
  return prod;
}

PointSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> xs(-5.0, 5.0), ys(0.1, 6.0);
  std::vector<HalfPlanePoint> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back({xs(rng), ys(rng)});
  return PointSequence(std::move(pts));
}

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(PointSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(PointSequence({{0.0, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSequence({{0.0, 1.0}, {0.0, 1.0}}), std::invalid_argument);
  CHECK_NOTHROW(PointSequence({{0.0, 1.0}, {0.0, 1.0 + 1e-12}}));
}

TEST_CASE("empty product and the single-factor value") {
  const PointSequence one({{0.0, 1.0}});
  CHECK(blaschke_eval(one, {0.0, 1.0}, 0) == Cx(1.0, 0.0));

  const PointSequence two({{0.0, 1.0}, {0.0, 3.0}});
  const Cx v = blaschke_eval(two, {0.0, 1.0}, 0);
  CHECK(std::abs(v) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v.real() == doctest::Approx(-0.5).epsilon(1e-12));  // (i-3i)/(i+3i) = -1/2
  CHECK(blaschke_eval(two, {0.0, 1.0}) == Cx(0.0, 0.0));    // exact zero at a node
}

TEST_CASE("log-space evaluation matches the direct product") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSequence z = random_sequence(rng, 6);
    std::uniform_real_distribution<double> xs(-6.0, 6.0), ys(0.05, 8.0);
    const Cx at{xs(rng), ys(rng)};
    const Cx direct = direct_product(z, at);
    const Cx fast = blaschke_eval(z, at);
    CHECK(std::abs(fast - direct) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("unit modulus on the real axis and contraction inside") {
  std::mt19937_64 rng(5);
  const PointSequence z = random_sequence(rng, 5);
  std::uniform_real_distribution<double> xs(-20.0, 20.0), ys(0.0, 10.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Cx at{xs(rng), ys(rng)};
    const double m = std::abs(blaschke_eval(z, at));
    CHECK(m <= 1.0 + 1e-12);
    if (at.imag() == 0.0) {
      CHECK(m == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("pole hit raises") {
  const PointSequence z({{0.0, 1.0}});
  CHECK_THROWS_AS(blaschke_eval(z, {0.0, -1.0}), PoleHit);
  CHECK_THROWS_AS(blaschke_eval(z, {5.0, 1.0}, 3), BadIndex);
}

TEST_CASE("long product magnitude accuracy against long double accumulation") {
  // 10^4 factors; the log-space path must hold 1e-10 relative accuracy.
  std::vector<HalfPlanePoint> pts;
  pts.reserve(10000);
  for (int k = 0; k < 10000; ++k) {
    pts.push_back({-50.0 + 0.01 * k, 1.0 + 1e-4 * (k % 97)});
  }
  const PointSequence z(std::move(pts));
  const Cx at{0.255, 0.35};
  long double log_mag = 0.0L;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const Cx num = at - z.node(k);
    const Cx den = at - std::conj(z.node(k));
    log_mag += std::log(std::hypot((long double)num.real(), (long double)num.imag())) -
               std::log(std::hypot((long double)den.real(), (long double)den.imag()));
  }
  const double expected = std::exp((double)log_mag);
  const double got = std::abs(blaschke_eval(z, at));
  CHECK(got == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("b_j values and delta for the standard pairs") {
  const PointSequence one({{0.0, 1.0}});
  CHECK(b_j_at_zj(one, 0) == doctest::Approx(1.0));
  CHECK(delta(one) == doctest::Approx(1.0));

  const PointSequence two({{0.0, 1.0}, {0.0, 3.0}});
  CHECK(b_j_at_zj(two, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b_j_at_zj(two, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(delta(two) == doctest::Approx(0.5).epsilon(1e-12));

  // Near-degenerate pair: single pseudohyperbolic factor.
  const PointSequence close({{0.0, 1.0}, {1e-6, 1.0}});
  const double expected = 1e-6 / std::abs(Cx(0.0, 1.0) - Cx(1e-6, -1.0));
  CHECK(delta(close) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(delta(close) < 1e-6);
}

TEST_CASE("delta lower-bounds every b_j and permutation leaves the multiset") {
  std::mt19937_64 rng(17);
  const PointSequence z = random_sequence(rng, 6);
  std::vector<double> values;
  for (std::size_t j = 0; j < z.size(); ++j) {
    values.push_back(b_j_at_zj(z, j));
    CHECK(delta(z) <= values.back() + 1e-15);
  }
  std::vector<HalfPlanePoint> shuffled(z.points());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const PointSequence zp(std::move(shuffled));
  std::vector<double> permuted;
  for (std::size_t j = 0; j < zp.size(); ++j) permuted.push_back(b_j_at_zj(zp, j));
  std::sort(values.begin(), values.end());
  std::sort(permuted.begin(), permuted.end());
  for (std::size_t j = 0; j < values.size(); ++j) {
    CHECK(values[j] == doctest::Approx(permuted[j]).epsilon(1e-12));
  }
}

TEST_CASE("derivative of the one-point product") {
  const PointSequence z({{0.0, 1.0}});
  const Cx d = blaschke_derivative_at_zero(z, 0);
  CHECK(std::abs(d) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.imag() == doctest::Approx(-0.5).epsilon(1e-14));  // 1/(2i)
}

TEST_CASE("log-derivative agrees with finite differences") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const PointSequence z = random_sequence(rng, 4);
    std::uniform_real_distribution<double> xs(-3.0, 3.0), ys(0.5, 5.0);
    const Cx at{xs(rng), ys(rng)};
    const double h = 1e-6;
    const Cx fd =
        (blaschke_eval(z, at + Cx(h, 0)) - blaschke_eval(z, at - Cx(h, 0))) / (2.0 * h);
    const Cx an = blaschke_derivative(z, at);
    CHECK(std::abs(fd - an) <= 1e-6 * (1.0 + std::abs(an)));
  }
}

TEST_CASE("two-point derivative against central differences at 2i") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  const Cx at{0.0, 2.0};
  const double h = 1e-6;
  const Cx fd = (blaschke_eval(z, at + Cx(h, 0)) - blaschke_eval(z, at - Cx(h, 0))) / (2.0 * h);
  CHECK(std::abs(blaschke_derivative(z, at) - fd) < 1e-6);
}

TEST_CASE("log-derivative refuses zeros and keeps the companion path") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  CHECK_THROWS_AS(blaschke_log_derivative(z, {0.0, 1.0}), ZeroHit);
  // B'(z_0) from the excluded product: sigma B_0(z_0)/(2i y_0).
  const Cx expected = blaschke_eval(z, {0.0, 1.0}, 0) / Cx(0.0, 2.0);
  CHECK(std::abs(blaschke_derivative_at_zero(z, 0) - expected) < 1e-14);
}

TEST_CASE("truncated geometric sequence peak value") {
  // gamma = 1, K = 15: |B(i e^{1/2})| should sit near 2 e^{-pi^2/2}.
  const GammaSequence seq = generate_Zgamma({1.0, 15});
  const Cx v = blaschke_eval(seq.z_seq, {0.0, std::exp(0.5)}, std::nullopt, seq.sign);
  const double expected = 2.0 * std::exp(-kPi * kPi / 2.0);
  CHECK(std::abs(v) == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("center b_j of the geometric sequence approximates 2|B'(i)|") {
  const GammaSequence seq = generate_Zgamma({1.0, 30});
  const double expected = 4.0 * kPi * std::exp(-kPi * kPi / 2.0);
  CHECK(b_j_at_zj(seq.z_seq, 30) == doctest::Approx(expected).epsilon(0.10));
}
