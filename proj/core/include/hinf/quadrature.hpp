#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hinf/errors.hpp"

namespace hinf {

// Tail behaviour of an integrand on the real line. poisson_weighted means
// |f(t)|*(1+t^2) stays bounded; log_growth admits logarithmic growth (or decay
// slower than 1/t^2) that is still Poisson-integrable; compact_support means
// f vanishes outside [-support_radius, support_radius].
enum class DecayClass { poisson_weighted, log_growth, compact_support };

struct RealLineFunction {
  std::function<double(double)> evaluator;
  DecayClass decay_class = DecayClass::poisson_weighted;
  // Declared integrable singularities; the quadrature places panel boundaries
  // there and never samples the points themselves.
  std::vector<double> singular_points{};
  double support_radius = 0.0;  // only meaningful for compact_support
};

// Integral of f over the whole real line to absolute tolerance abs_tol.
// Deterministic adaptive Gauss-Kronrod 15(7) after the compactifying
// substitution t = tan(theta). Throws NonConvergent when the refinement
// budget is exhausted first.
double integrate_real_line(const RealLineFunction& f, double abs_tol);

// Integral of f over [a, b]; extra_breakpoints become initial panel
// boundaries (useful for kernel peaks).
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, const std::vector<double>& extra_breakpoints = {});

// Poisson integral (1/pi) Int y f(t) / ((x-t)^2 + y^2) dt of a boundary
// function at z = x + iy, y > 0. Reproduces bounded harmonic functions from
// their boundary traces.
double poisson_integral(const RealLineFunction& f, std::complex<double> z, double abs_tol);

// Conjugate Poisson integral with the standard normalizing term,
//   (1/pi) Int [ (x-t)/((x-t)^2+y^2) + t/(1+t^2) ] f(t) dt.
// The kernel vanishes identically at z = i, so the result is normalized to 0
// there; together with poisson_integral it forms an analytic completion.
double conjugate_kernel_integral(const RealLineFunction& f, std::complex<double> z,
                                 double abs_tol);

}  // namespace hinf
