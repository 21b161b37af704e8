#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "hinf/quadrature.hpp"

namespace hinf {

enum class WeightKind { standard_jones, outer_extremal, tabulated };

// Analytic weight g with g(i) = 1 whose modulus admits a harmonic majorant;
// parameterizes the generalized interpolation operator. Copies share one
// memoized majorant cache; all evaluation is const and thread-safe.
class WeightFamily {
 public:
  // g(z) = -4/(z+i)^2; the weight of the original interpolation formula.
  // Its least harmonic majorant has the closed form 4(y+1)/|z+i|^2.
  static WeightFamily standard_jones();

  // The extremal outer weight g0; boundary modulus is algebraic, interior
  // values come from the outer-function quadrature.
  static WeightFamily outer_extremal(double quad_tol = 1e-9);

  // User-supplied boundary modulus |g(t)| plus an evaluator for g on the
  // half-plane; both are renormalized so that g(i) = 1 exactly.
  static WeightFamily tabulated(RealLineFunction boundary_modulus,
                                std::function<std::complex<double>(std::complex<double>)> g,
                                std::string name = "tabulated");

  // Constant weight g = 1 (majorant 1); handy degenerate family.
  static WeightFamily constant_one();

  WeightKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  std::complex<double> g(std::complex<double> z) const;
  double boundary_modulus(double t) const;
  const RealLineFunction& boundary() const { return boundary_; }

  // Least harmonic majorant u of |g| at z; closed form for standard_jones,
  // Poisson integral of the boundary modulus otherwise (memoized).
  double majorant(std::complex<double> z) const;

  // Normalization report g(i); 1 within 1e-9 by construction.
  std::complex<double> g_at_i() const { return g({0.0, 1.0}); }

 private:
  WeightFamily(WeightKind kind, std::string name);

  WeightKind kind_;
  std::string name_;
  RealLineFunction boundary_;
  std::function<std::complex<double>(std::complex<double>)> g_;
  double quad_tol_ = 1e-9;

  struct MajorantCache {
    std::mutex mutex;
    std::map<std::pair<double, double>, double> values;
  };
  std::shared_ptr<MajorantCache> cache_ = std::make_shared<MajorantCache>();
};

}  // namespace hinf
