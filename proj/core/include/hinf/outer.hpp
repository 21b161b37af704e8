#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hinf/quadrature.hpp"

namespace hinf {

class WeightFamily;  // weight.hpp

// Prescribed boundary modulus for an outer function, given as log |psi(t)|.
// The log-modulus must be Poisson-integrable at i.
struct BoundaryModulus {
  RealLineFunction log_modulus;
  bool even = true;
};

// Zero-free analytic function with the prescribed boundary modulus,
//   O(z) = exp( P[log m](z) + i Q[log m](z) ),
// where P is the Poisson integral and Q the conjugate kernel integral. The
// normalization makes O(i) real and positive.
std::complex<double> outer_eval(const BoundaryModulus& m, std::complex<double> z,
                                double abs_tol = 1e-9);

// The outer function psi with |psi(t)| = t / arctan t on the real line,
// carrying the explicit prefactor i so that psi(i) = 2ie/pi.
std::complex<double> psi_eval(std::complex<double> z, double abs_tol = 1e-9);

// psi(i) by quadrature; the default tolerance result is computed once and
// cached. Expected value 2ie/pi (modulus 2e/pi, argument pi/2).
std::complex<double> psi_at_i(double abs_tol = 1e-10);
double abs_psi_at_i();  // cached |psi(i)|

// Extremal weight g0(z) = (2i/(z+i))^2 psi(z)/psi(i); g0(i) = 1.
std::complex<double> g0_eval(std::complex<double> z, double abs_tol = 1e-9);

// Boundary modulus |g0(t)| = 4/(1+t^2) * (t/arctan t) / |psi(i)|, evaluated
// algebraically rather than via boundary limits of psi.
double g0_boundary_modulus(double t);

// log(t / arctan t), even in t, with the removable singularity at 0 handled
// by series.
double log_t_over_arctan(double t);

struct ExtremalCheckEntry {
  std::string name;
  double weighted_integral = 0.0;  // Int |g(t)| (arctan t)/t dt
};

struct ExtremalCheckReport {
  ExtremalCheckEntry candidate;
  std::vector<ExtremalCheckEntry> rivals;
  bool candidate_minimal = false;
};

// Compares Int |g(t)| (arctan t)/t dt between a candidate weight and rivals,
// all normalized to g(i) = 1; reports whether the candidate attains the
// smallest value.
ExtremalCheckReport weighted_hardy_extremal_check(const WeightFamily& candidate,
                                                  const std::vector<WeightFamily>& rivals,
                                                  double abs_tol = 1e-8);

// Int |g(t)| (arctan t)/t dt for a single weight family.
double weighted_boundary_integral(const WeightFamily& g, double abs_tol = 1e-8);

}  // namespace hinf
