#include "hinf/weight.hpp"

#include <cmath>

#include "hinf/outer.hpp"
#include "hinf/quadrature.hpp"

namespace hinf {

WeightFamily::WeightFamily(WeightKind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {}

WeightFamily WeightFamily::standard_jones() {
  WeightFamily w(WeightKind::standard_jones, "standard");
  w.g_ = [](std::complex<double> z) {
    const std::complex<double> d = z + std::complex<double>(0.0, 1.0);
    return -4.0 / (d * d);
  };
  w.boundary_.evaluator = [](double t) { return 4.0 / (1.0 + t * t); };
  w.boundary_.decay_class = DecayClass::poisson_weighted;
  return w;
}

WeightFamily WeightFamily::outer_extremal(double quad_tol) {
  WeightFamily w(WeightKind::outer_extremal, "outer");
  w.quad_tol_ = quad_tol;
  w.g_ = [quad_tol](std::complex<double> z) { return g0_eval(z, quad_tol); };
  w.boundary_.evaluator = [](double t) { return g0_boundary_modulus(t); };
  w.boundary_.decay_class = DecayClass::log_growth;  // ~ c/|t| tail
  return w;
}

WeightFamily WeightFamily::tabulated(RealLineFunction boundary_modulus,
                                     std::function<std::complex<double>(std::complex<double>)> g,
                                     std::string name) {
  WeightFamily w(WeightKind::tabulated, std::move(name));
  if (!boundary_modulus.evaluator || !g) {
    throw std::invalid_argument("tabulated weight needs a boundary modulus and an evaluator");
  }
  const std::complex<double> gi = g({0.0, 1.0});
  if (gi == std::complex<double>(0.0, 0.0) || !std::isfinite(std::abs(gi))) {
    throw std::invalid_argument("tabulated weight evaluator must be finite and nonzero at i");
  }
  const double abs_gi = std::abs(gi);
  auto base_modulus = boundary_modulus.evaluator;
  w.boundary_ = std::move(boundary_modulus);
  w.boundary_.evaluator = [base_modulus, abs_gi](double t) { return base_modulus(t) / abs_gi; };
  w.g_ = [g = std::move(g), gi](std::complex<double> z) { return g(z) / gi; };
  // Certify that |g| admits a harmonic majorant: its Poisson integral at i
  // must be finite.
  try {
    poisson_integral(w.boundary_, {0.0, 1.0}, 1e-6);
  } catch (const NonConvergent&) {
    throw std::invalid_argument("tabulated modulus has no finite Poisson integral at i");
  }
  return w;
}

WeightFamily WeightFamily::constant_one() {
  RealLineFunction one;
  one.evaluator = [](double) { return 1.0; };
  one.decay_class = DecayClass::log_growth;
  return tabulated(std::move(one), [](std::complex<double>) { return std::complex<double>(1.0, 0.0); },
                   "constant");
}

std::complex<double> WeightFamily::g(std::complex<double> z) const { return g_(z); }

double WeightFamily::boundary_modulus(double t) const { return boundary_.evaluator(t); }

double WeightFamily::majorant(std::complex<double> z) const {
  if (!(z.imag() > 0.0)) {
    throw std::invalid_argument("majorant requires an interior point");
  }
  if (kind_ == WeightKind::standard_jones) {
    const std::complex<double> d = z + std::complex<double>(0.0, 1.0);
    return 4.0 * (z.imag() + 1.0) / std::norm(d);
  }
  const auto key = std::make_pair(z.real(), z.imag());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  const double u = poisson_integral(boundary_, z, quad_tol_);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(key, u);
  return u;
}

}  // namespace hinf
