#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hinf/characteristics.hpp"
#include "hinf/halfplane.hpp"
#include "hinf/weight.hpp"

using namespace hinf;
using Cx = std::complex<double>;

namespace {

constexpr double kE = std::numbers::e;

// Brute-force double sums straight from the defining formulas.
double c_H_oracle(const PointSequence& z) {
  double best = -1.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      sum += 4.0 * z[k].y * z[j].y / std::norm(z.node(k) - std::conj(z.node(j))) /
             b_j_at_zj(z, j);
    }
    best = std::max(best, sum);
  }
  return best;
}

double c_HJ_oracle(const PointSequence& z) {
  double best = -1.0;
  for (std::size_t n = 0; n < z.size(); ++n) {
    double sum = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (z[j].y > z[n].y) continue;
      sum += 4.0 * z[j].y * (z[j].y + z[n].y) / std::norm(z.node(j) - std::conj(z.node(n))) /
             b_j_at_zj(z, j);
    }
    best = std::max(best, sum);
  }
  return best;
}

PointSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> xs(-4.0, 4.0), ys(0.2, 5.0);
  std::vector<HalfPlanePoint> pts;
  for (std::size_t j = 0; j < n; ++j) pts.push_back({xs(rng), ys(rng)});
  return PointSequence(std::move(pts));
}

}  // namespace

TEST_CASE("single point characteristics") {
  const PointSequence z({{0.0, 1.0}});
  CHECK(c_H(z).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c_HJ(z).value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c_HJ(z).value <= 2.0 * c_H(z).value + 1e-14);
}

TEST_CASE("two-point characteristics") {
  const PointSequence z({{0.0, 1.0}, {0.0, 3.0}});
  CHECK(c_H(z).value == doctest::Approx(3.5).epsilon(1e-13));
  CHECK(c_HJ(z).value == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(c_HJ(z).argmax == 1);  // attained at the higher node
}

TEST_CASE("characteristics match the brute-force oracles") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const PointSequence z = random_sequence(rng, 2 + trial % 5);
    CHECK(c_H(z).value == doctest::Approx(c_H_oracle(z)).epsilon(1e-12));
    CHECK(c_HJ(z).value == doctest::Approx(c_HJ_oracle(z)).epsilon(1e-12));
  }
}

TEST_CASE("chain inequality c_HJ <= 2 c_H") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSequence z = random_sequence(rng, 2 + trial % 6);
    CHECK(c_HJ(z).value <= 2.0 * c_H(z).value * (1.0 + 1e-12));
  }
}

TEST_CASE("standard majorant closed form") {
  const WeightFamily std_g = WeightFamily::standard_jones();
  CHECK(std_g.majorant({0.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std_g.majorant({0.0, 2.0}) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("tabulated standard weight reproduces the closed-form majorant") {
  RealLineFunction boundary;
  boundary.evaluator = [](double t) { return 4.0 / (1.0 + t * t); };
  const WeightFamily tab = WeightFamily::tabulated(
      boundary,
      [](Cx z) {
        const Cx d = z + Cx(0.0, 1.0);
        return -4.0 / (d * d);
      },
      "tabulated-standard");
  const WeightFamily closed = WeightFamily::standard_jones();
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> xs(-4.0, 4.0), ys(0.2, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Cx z{xs(rng), ys(rng)};
    CHECK(tab.majorant(z) == doctest::Approx(closed.majorant(z)).epsilon(1e-7));
  }
}

TEST_CASE("majorant dominates the weight") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> xs(-3.0, 3.0), ys(0.3, 4.0);
  for (const WeightFamily& fam :
       {WeightFamily::standard_jones(), WeightFamily::outer_extremal()}) {
    for (int trial = 0; trial < 8; ++trial) {
      const Cx z{xs(rng), ys(rng)};
      CHECK(fam.majorant(z) >= std::abs(fam.g(z)) - 1e-8);
    }
  }
}

TEST_CASE("big_U values and harmonicity") {
  const WeightFamily std_g = WeightFamily::standard_jones();
  const PointSequence one({{0.0, 1.0}});
  CHECK(big_U(one, std_g, 0, {0.0, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));

  const PointSequence two({{0.0, 1.0}, {0.0, 3.0}});
  CHECK(big_U(two, std_g, 1, {0.0, 3.0}) == doctest::Approx(6.0).epsilon(1e-13));

  // Mean value over a small circle.
  const Cx center{0.5, 1.7};
  const double r = 0.01;
  double mean = 0.0;
  const int spokes = 24;
  for (int s = 0; s < spokes; ++s) {
    const double th = 2.0 * std::numbers::pi * s / spokes;
    mean += big_U(two, std_g, 1, center + std::polar(r, th));
  }
  mean /= spokes;
  CHECK(mean == doctest::Approx(big_U(two, std_g, 1, center)).epsilon(1e-6));
}

TEST_CASE("c_J with the standard weight is c_HJ") {
  std::mt19937_64 rng(59);
  const WeightFamily std_g = WeightFamily::standard_jones();
  for (int trial = 0; trial < 10; ++trial) {
    const PointSequence z = random_sequence(rng, 2 + trial % 5);
    const SupResult lhs = c_J_given_g(z, std_g);
    const SupResult rhs = c_HJ(z);
    CHECK(lhs.value == doctest::Approx(rhs.value).epsilon(1e-10));
    CHECK(lhs.argmax == rhs.argmax);
  }
}

TEST_CASE("constant weight on a single point") {
  const PointSequence one({{0.0, 1.0}});
  CHECK(c_J_given_g(one, WeightFamily::constant_one()).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  const CJEstimate est =
      c_J_estimate(one, {WeightFamily::standard_jones(), WeightFamily::constant_one()});
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(est.best_family == 1);
}

TEST_CASE("tabulated weights without a harmonic majorant are rejected") {
  RealLineFunction growing;
  growing.evaluator = [](double t) { return 1.0 + std::abs(t); };  // not Poisson-integrable
  growing.decay_class = DecayClass::log_growth;
  CHECK_THROWS_AS(WeightFamily::tabulated(
                      growing, [](Cx) { return Cx(1.0, 0.0); }, "bad"),
                  std::invalid_argument);
}

TEST_CASE("c_J estimate picks the standard family when alone") {
  std::mt19937_64 rng(61);
  const PointSequence z = random_sequence(rng, 4);
  const CJEstimate est = c_J_estimate(z, {WeightFamily::standard_jones()});
  CHECK(est.value == doctest::Approx(c_HJ(z).value).epsilon(1e-12));
}

TEST_CASE("horizontal translation and dilation invariance") {
  std::mt19937_64 rng(67);
  const WeightFamily std_g = WeightFamily::standard_jones();
  for (int trial = 0; trial < 6; ++trial) {
    const PointSequence z = random_sequence(rng, 4);
    std::vector<HalfPlanePoint> moved, scaled;
    const double shift = 3.7, lam = 2.25;
    for (const auto& p : z.points()) {
      moved.push_back({p.x + shift, p.y});
      scaled.push_back({lam * p.x, lam * p.y});
    }
    const PointSequence zt(std::move(moved));
    const PointSequence zs(std::move(scaled));
    for (const PointSequence* other : {&zt, &zs}) {
      CHECK(delta(*other) == doctest::Approx(delta(z)).epsilon(1e-10));
      CHECK(c_H(*other).value == doctest::Approx(c_H(z).value).epsilon(1e-10));
      CHECK(c_HJ(*other).value == doctest::Approx(c_HJ(z).value).epsilon(1e-10));
      CHECK(c_J_given_g(*other, std_g).value ==
            doctest::Approx(c_J_given_g(z, std_g).value).epsilon(1e-10));
    }
  }
}

TEST_CASE("inserting a near-coincident point blows up the lower bound") {
  const PointSequence base({{0.0, 1.0}, {2.0, 2.0}});
  auto with_close_point = [&](double eps) {
    std::vector<HalfPlanePoint> pts(base.points());
    pts.push_back({eps, 1.0});
    return m_bounds(PointSequence(std::move(pts)), {WeightFamily::standard_jones()}).m_lower;
  };
  const double coarse = with_close_point(1e-2);
  const double fine = with_close_point(1e-4);
  CHECK(fine > 2.0 * coarse);
}

TEST_CASE("m_bounds for the standard examples") {
  const CharacteristicsReport one = m_bounds(
      PointSequence({{0.0, 1.0}}),
      {WeightFamily::standard_jones(), WeightFamily::constant_one()});
  CHECK(one.m_lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.m_upper_candidates.at("e_cJ") == doctest::Approx(kE).epsilon(1e-9));
  CHECK(one.m_upper_candidates.at("delta_bound") == doctest::Approx(2.0 * kE).epsilon(1e-12));
  CHECK(one.violations.empty());

  const CharacteristicsReport two =
      m_bounds(PointSequence({{0.0, 1.0}, {0.0, 3.0}}), {WeightFamily::standard_jones()});
  CHECK(two.m_lower == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(two.m_upper_candidates.at("e_cHJ") == doctest::Approx(6.0 * kE).epsilon(1e-12));
  // The minimal alternating norm 2 + sqrt 3 sits inside the reported window.
  CHECK(two.m_lower <= 2.0 + std::sqrt(3.0));
  CHECK(two.m_upper_candidates.at("e_cHJ") >= 2.0 + std::sqrt(3.0));
  CHECK(two.violations.empty());
}

TEST_CASE("report invariants on random sequences") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 8; ++trial) {
    const PointSequence z = random_sequence(rng, 2 + trial % 4);
    const CharacteristicsReport rep =
        m_bounds(z, {WeightFamily::standard_jones(), WeightFamily::outer_extremal()});
    CHECK(rep.violations.empty());
    for (const auto& [name, value] : rep.m_upper_candidates) {
      CHECK(value >= rep.m_lower * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("c_H bounded by e c_J for both families") {
  std::mt19937_64 rng(73);
  for (const WeightFamily& fam :
       {WeightFamily::standard_jones(), WeightFamily::outer_extremal()}) {
    for (int trial = 0; trial < 5; ++trial) {
      const PointSequence z = random_sequence(rng, 3);
      CHECK(c_H(z).value <= kE * c_J_given_g(z, fam).value * (1.0 + 1e-9));
    }
  }
}
