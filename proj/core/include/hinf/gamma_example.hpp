#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hinf/halfplane.hpp"

namespace hinf {

// Truncation of the geometric sequence (i e^{k/gamma}), k = -K..K.
struct GammaConfig {
  double gamma = 1.0;
  int truncation = 8;  // K; points k = -K..K, n = 2K+1
  int n() const { return 2 * truncation + 1; }
};

struct GammaSequence {
  PointSequence z_seq;
  SignConvention sign;
  double tau = 0.0;  // closed-form bound on the omitted tail of log|B| at i
  std::vector<int> k_of_index;
};

// Heights e^{k/gamma} in increasing order with the alternating sign
// convention that makes i B'(i) > 0. Rejects K/gamma > 600.
GammaSequence generate_Zgamma(const GammaConfig& cfg);

// Comparison function F(z) = 2 exp(-pi^2 gamma / 2) sin(pi gamma Log(-iz)),
// principal branch; same zeros as the geometric Blaschke product.
std::complex<double> F_eval(double gamma, std::complex<double> z);

// Sampled sup over the real axis of |log(|F(x)|/|B(x)|)|, the truncated
// product augmented by the closed-form tail factors (each of unit modulus at
// real x). Samples are log-spaced in |x| away from the truncation edges.
double fb_ratio_study(const GammaConfig& cfg, int sample_count);

struct AlternatingResult {
  double rho_star = 0.0;
  double candidate_norm = 0.0;  // 1 / B(i e^{1/(2 gamma)}), the explicit solution
  double rho_ratio = 0.0;       // rho_star * 2 exp(-pi^2 gamma / 2)
  double tau = 0.0;
  bool truncation_warning = false;
};

// Minimal norm of the alternating data w_k = (-1)^k against the explicit
// candidate; throws InvariantViolation if the candidate fails to dominate.
AlternatingResult alternating_problem(const GammaConfig& cfg, double tol = 1e-8);

struct GammaAsymptoticsReport {
  double gamma = 0.0;
  int truncation = 0;
  double tau = 0.0;
  bool truncation_warning = false;
  double peak_ratio = 0.0;    // B(i e^{1/(2 gamma)}) e^{pi^2 gamma/2} / 2
  double bprime_ratio = 0.0;  // i B'(i) e^{pi^2 gamma/2} / (2 pi gamma)
  double fb_log_sup = 0.0;
  double chj_ratio = 0.0;     // c_HJ * pi / (log 2 * e^{pi^2 gamma/2})
  double cj_ratio = 0.0;      // c_J(., g0) * 2e * e^{-pi^2 gamma/2}
  std::optional<double> rho_ratio;      // only for n <= 41 and gamma <= 1.2
  std::optional<double> candidate_norm;
  std::optional<double> ecj_over_rho;   // e c_J(., g0) / rho*
  std::optional<double> echj_over_rho;  // e c_HJ / rho*, reported raw
};

// Assembles every sharpness ratio for one (gamma, K) configuration.
GammaAsymptoticsReport sharpness_report(const GammaConfig& cfg, int fb_samples = 2000);

}  // namespace hinf
