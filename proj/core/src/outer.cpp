#include "hinf/outer.hpp"

#include <cmath>
#include <numbers>

#include "hinf/weight.hpp"

namespace hinf {

double log_t_over_arctan(double t) {
  t = std::abs(t);
  if (t < 1e-4) {
    const double t2 = t * t;
    return t2 / 3.0 - 13.0 / 90.0 * t2 * t2;
  }
  return std::log(t / std::atan(t));
}

std::complex<double> outer_eval(const BoundaryModulus& m, std::complex<double> z,
                                double abs_tol) {
  if (!(z.imag() > 0.0)) {
    throw std::invalid_argument("outer_eval requires an interior point");
  }
  const double u = poisson_integral(m.log_modulus, z, abs_tol);
  const double v = conjugate_kernel_integral(m.log_modulus, z, abs_tol);
  return std::exp(std::complex<double>(u, v));
}

namespace {

BoundaryModulus psi_modulus() {
  BoundaryModulus m;
  m.log_modulus.evaluator = [](double t) { return log_t_over_arctan(t); };
  m.log_modulus.decay_class = DecayClass::log_growth;
  m.log_modulus.singular_points = {0.0};
  m.even = true;
  return m;
}

}  // namespace

std::complex<double> psi_eval(std::complex<double> z, double abs_tol) {
  return std::complex<double>(0.0, 1.0) * outer_eval(psi_modulus(), z, abs_tol);
}

std::complex<double> psi_at_i(double abs_tol) {
  if (abs_tol == 1e-10) {
    static const std::complex<double> cached = psi_eval({0.0, 1.0}, 1e-10);
    return cached;
  }
  return psi_eval({0.0, 1.0}, abs_tol);
}

double abs_psi_at_i() {
  static const double cached = std::abs(psi_at_i());
  return cached;
}

double g0_boundary_modulus(double t) {
  const double ratio = std::exp(log_t_over_arctan(t));  // t / arctan t, even
  return 4.0 / (1.0 + t * t) * ratio / abs_psi_at_i();
}

std::complex<double> g0_eval(std::complex<double> z, double abs_tol) {
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> front = (2.0 * i / (z + i)) * (2.0 * i / (z + i));
  return front * psi_eval(z, abs_tol) / psi_at_i();
}

double weighted_boundary_integral(const WeightFamily& g, double abs_tol) {
  RealLineFunction f;
  const WeightFamily family = g;
  f.evaluator = [family](double t) {
    const double w = std::abs(t) < 1e-8 ? 1.0 - t * t / 3.0 : std::atan(std::abs(t)) / std::abs(t);
    return family.boundary_modulus(t) * w;
  };
  f.decay_class = g.boundary().decay_class;
  f.singular_points = g.boundary().singular_points;
  f.support_radius = g.boundary().support_radius;
  return integrate_real_line(f, abs_tol);
}

ExtremalCheckReport weighted_hardy_extremal_check(const WeightFamily& candidate,
                                                  const std::vector<WeightFamily>& rivals,
                                                  double abs_tol) {
  ExtremalCheckReport report;
  report.candidate = {candidate.name(), weighted_boundary_integral(candidate, abs_tol)};
  report.candidate_minimal = true;
  for (const auto& rival : rivals) {
    ExtremalCheckEntry entry{rival.name(), weighted_boundary_integral(rival, abs_tol)};
    if (entry.weighted_integral < report.candidate.weighted_integral - 10.0 * abs_tol) {
      report.candidate_minimal = false;
    }
    report.rivals.push_back(std::move(entry));
  }
  return report;
}

}  // namespace hinf
