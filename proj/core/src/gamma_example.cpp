#include "hinf/gamma_example.hpp"

#include <cmath>
#include <numbers>

#include "hinf/characteristics.hpp"
#include "hinf/pick.hpp"
#include "hinf/weight.hpp"

namespace hinf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void validate(const GammaConfig& cfg) {
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (cfg.truncation < 1) throw std::invalid_argument("truncation K must be >= 1");
  if (cfg.truncation / cfg.gamma > 600.0) {
    throw OverflowError("e^{K/gamma} exceeds the floating range (K/gamma > 600)");
  }
}

double tail_indicator(const GammaConfig& cfg) {
  // Omitted factors at z = i contribute about 2 e^{-|k|/gamma} each to
  // -log|B|; both tails sum to a geometric series.
  const double q = std::exp(-1.0 / cfg.gamma);
  return 4.0 * std::pow(q, cfg.truncation + 1) / (1.0 - q);
}

bool warn_truncation(const GammaConfig& cfg, double tau) {
  const double log_scale = kPi * kPi * cfg.gamma / 2.0;
  return tau > 0.01 * log_scale;
}

}  // namespace

GammaSequence generate_Zgamma(const GammaConfig& cfg) {
  validate(cfg);
  std::vector<HalfPlanePoint> pts;
  std::vector<int> ks;
  pts.reserve(cfg.n());
  for (int k = -cfg.truncation; k <= cfg.truncation; ++k) {
    pts.push_back({0.0, std::exp(k / cfg.gamma)});
    ks.push_back(k);
  }
  GammaSequence seq{PointSequence(std::move(pts)),
                    SignConvention::gamma_normalized(static_cast<std::size_t>(cfg.truncation)),
                    tail_indicator(cfg), std::move(ks)};
  return seq;
}

std::complex<double> F_eval(double gamma, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    throw BranchPoint("F has a branch point at z = 0");
  }
  const std::complex<double> w = std::log(std::complex<double>(0.0, -1.0) * z);
  return 2.0 * std::exp(-kPi * kPi * gamma / 2.0) * std::sin(kPi * gamma * w);
}

double fb_ratio_study(const GammaConfig& cfg, int sample_count) {
  validate(cfg);
  if (sample_count < 2) throw std::invalid_argument("need at least two samples");
  const GammaSequence seq = generate_Zgamma(cfg);
  const double log_hi = cfg.truncation / (2.0 * cfg.gamma);

  // Tail of the infinite product beyond |k| = K, factor by factor until the
  // factor is within 1e-14 of 1. Every factor has unit modulus at real x, so
  // this measures only rounding.
  auto tail_log_modulus = [&](double x) {
    double acc = 0.0;
    for (int dir : {+1, -1}) {
      for (int step = 1; step <= 400; ++step) {
        const int k = dir * (cfg.truncation + step);
        if (std::abs(k / cfg.gamma) > 600.0) break;
        const double y = std::exp(k / cfg.gamma);
        const std::complex<double> num =
            dir > 0 ? std::complex<double>(-x, y) : std::complex<double>(x, -y);
        const std::complex<double> den{x, y};
        acc += std::log(std::abs(num)) - std::log(std::abs(den));
        if (std::abs(num / den - 1.0) < 1e-14) break;
      }
    }
    return acc;
  };

  double sup = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    const double u = -log_hi + 2.0 * log_hi * s / double(sample_count - 1);
    const double mag = std::exp(u);
    const double x = (s % 2 == 0) ? mag : -mag;
    const double log_b =
        std::log(std::abs(blaschke_eval(seq.z_seq, {x, 0.0}, std::nullopt, seq.sign))) +
        tail_log_modulus(x);
    const double log_f = std::log(std::abs(F_eval(cfg.gamma, {x, 0.0})));
    sup = std::max(sup, std::abs(log_f - log_b));
  }
  return sup;
}

AlternatingResult alternating_problem(const GammaConfig& cfg, double tol) {
  validate(cfg);
  if (cfg.n() > 41) {
    throw std::invalid_argument("alternating problem limited to 2K+1 <= 41 nodes");
  }
  const GammaSequence seq = generate_Zgamma(cfg);
  TargetValues w;
  w.values.reserve(cfg.n());
  for (int k : seq.k_of_index) {
    w.values.push_back(std::abs(k) % 2 == 0 ? 1.0 : -1.0);
  }
  AlternatingResult result;
  result.tau = seq.tau;
  result.truncation_warning = warn_truncation(cfg, seq.tau);
  result.rho_star = minimal_norm({seq.z_seq, w}, tol).rho_star;

  const double peak_height = std::exp(1.0 / (2.0 * cfg.gamma));
  const std::complex<double> b_peak =
      blaschke_eval(seq.z_seq, {0.0, peak_height}, std::nullopt, seq.sign);
  result.candidate_norm = 1.0 / std::abs(b_peak);
  result.rho_ratio = result.rho_star * 2.0 * std::exp(-kPi * kPi * cfg.gamma / 2.0);
  if (result.rho_star > result.candidate_norm * (1.0 + 1e-3)) {
    throw InvariantViolation("explicit candidate fails to dominate the minimal norm");
  }
  return result;
}

GammaAsymptoticsReport sharpness_report(const GammaConfig& cfg, int fb_samples) {
  validate(cfg);
  const GammaSequence seq = generate_Zgamma(cfg);
  const double blowup = std::exp(kPi * kPi * cfg.gamma / 2.0);

  GammaAsymptoticsReport report;
  report.gamma = cfg.gamma;
  report.truncation = cfg.truncation;
  report.tau = seq.tau;
  report.truncation_warning = warn_truncation(cfg, seq.tau);

  const double peak_height = std::exp(1.0 / (2.0 * cfg.gamma));
  report.peak_ratio =
      blaschke_eval(seq.z_seq, {0.0, peak_height}, std::nullopt, seq.sign).real() * blowup / 2.0;

  const std::size_t center = static_cast<std::size_t>(cfg.truncation);
  const std::complex<double> bprime = blaschke_derivative_at_zero(seq.z_seq, center, seq.sign);
  report.bprime_ratio =
      (std::complex<double>(0.0, 1.0) * bprime).real() * blowup / (2.0 * kPi * cfg.gamma);

  report.fb_log_sup = fb_ratio_study(cfg, fb_samples);

  const double chj = c_HJ(seq.z_seq).value;
  report.chj_ratio = chj * kPi / (std::log(2.0) * blowup);

  const double cj = c_J_given_g(seq.z_seq, WeightFamily::outer_extremal()).value;
  report.cj_ratio = cj * 2.0 * kE / blowup;

  if (cfg.n() <= 41 && cfg.gamma <= 1.2) {
    const AlternatingResult alt = alternating_problem(cfg);
    report.rho_ratio = alt.rho_ratio;
    report.candidate_norm = alt.candidate_norm;
    report.ecj_over_rho = kE * cj / alt.rho_star;
    report.echj_over_rho = kE * chj / alt.rho_star;
  }
  return report;
}

}  // namespace hinf
