#include "hinf/pick.hpp"

#include <cmath>
#include <numbers>

#include "hinf/characteristics.hpp"

namespace hinf {
namespace {

Eigen::MatrixXcd pick_entries(const PointSequence& z_seq, const TargetValues& w, double rho,
                              bool rescale) {
  const auto n = static_cast<Eigen::Index>(z_seq.size());
  Eigen::MatrixXcd q(n, n);
  const std::complex<double> minus_i{0.0, -1.0};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      const std::complex<double> num =
          rho * rho - w.values[j] * std::conj(w.values[k]);
      const std::complex<double> den =
          minus_i * (z_seq.node(j) - std::conj(z_seq.node(k)));
      std::complex<double> entry = num / den;
      if (rescale) {
        entry *= 2.0 * std::sqrt(z_seq[j].y * z_seq[k].y);
      }
      if (j == k) entry = {entry.real(), 0.0};
      q(j, k) = entry;
      q(k, j) = std::conj(entry);
    }
  }
  return q;
}

double uniform01(std::uint64_t& state) {
  // splitmix64 step; uniform in [0, 1) with 53 random bits.
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

HermitianMatrix pick_matrix(const PointSequence& z_seq, const TargetValues& w, double rho) {
  if (w.values.size() != z_seq.size()) {
    throw std::invalid_argument("target count does not match node count");
  }
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  return HermitianMatrix(pick_entries(z_seq, w, rho, false));
}

HermitianMatrix pick_matrix_scaled(const PointSequence& z_seq, const TargetValues& w,
                                   double rho) {
  if (w.values.size() != z_seq.size()) {
    throw std::invalid_argument("target count does not match node count");
  }
  return HermitianMatrix(pick_entries(z_seq, w, rho, true));
}

PickResult minimal_norm(const PickProblem& problem, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const PointSequence& seq = problem.z_seq;
  const TargetValues& w = problem.w;
  if (w.values.size() != seq.size()) {
    throw std::invalid_argument("target count does not match node count");
  }
  constexpr double psd_rel_tol = 1e-10;
  const double norm_w = w.sup_norm();
  PickResult result;
  if (norm_w == 0.0) {
    result.rho_star = 0.0;
    result.at_lower_endpoint = true;
    return result;
  }

  auto feasible = [&](double rho) {
    return is_psd(pick_matrix_scaled(seq, w, rho), psd_rel_tol);
  };

  double lo = norm_w;
  if (feasible(lo)) {
    result.rho_star = lo;
    result.at_lower_endpoint = true;
    result.lambda_min_above =
        min_eigen_hermitian(pick_matrix_scaled(seq, w, lo * (1.0 + tol)));
    result.lambda_min_below = 0.0;
    return result;
  }
  double hi = norm_w * std::min(std::numbers::e * c_HJ(seq).value, delta_bound(delta(seq)));
  if (!feasible(hi)) {
    throw BracketFailure("upper bisection endpoint infeasible; proven bound violated numerically");
  }
  int iterations = 0;
  while (hi - lo > tol * lo) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  result.rho_star = 0.5 * (lo + hi);
  result.iterations = iterations;
  result.lambda_min_above =
      min_eigen_hermitian(pick_matrix_scaled(seq, w, result.rho_star * (1.0 + tol)));
  result.lambda_min_below =
      min_eigen_hermitian(pick_matrix_scaled(seq, w, result.rho_star * (1.0 - tol)));
  return result;
}

EstimateM estimate_M(const PointSequence& z_seq, int samples, std::uint64_t seed,
                     int ascent_steps, double tol) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const std::size_t n = z_seq.size();
  constexpr double two_pi = 2.0 * std::numbers::pi;

  auto rho_of = [&](const std::vector<double>& phases) {
    TargetValues w;
    w.values.reserve(n);
    for (double th : phases) w.values.push_back(std::polar(1.0, th));
    return minimal_norm({z_seq, w}, tol).rho_star;
  };

  EstimateM est;
  est.samples_used = samples;
  std::vector<double> best_phases(n, 0.0);
  double best = -1.0;
  for (int s = 0; s < samples; ++s) {
    // Per-sample derived state makes the scan order-independent.
    std::uint64_t state = seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(s + 1));
    std::vector<double> phases(n);
    for (std::size_t j = 0; j < n; ++j) phases[j] = two_pi * uniform01(state);
    const double r = rho_of(phases);
    if (r > best) {
      best = r;
      best_phases = phases;
    }
  }

  // Coordinate-wise golden-section ascent on each phase.
  constexpr double golden = 0.6180339887498949;
  for (int sweep = 0; sweep < ascent_steps; ++sweep) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = best_phases[j] - 0.5 * std::numbers::pi;
      double b = best_phases[j] + 0.5 * std::numbers::pi;
      auto value_at = [&](double th) {
        std::vector<double> p = best_phases;
        p[j] = th;
        return rho_of(p);
      };
      double x1 = b - golden * (b - a);
      double x2 = a + golden * (b - a);
      double f1 = value_at(x1);
      double f2 = value_at(x2);
      for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + golden * (b - a);
          f2 = value_at(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - golden * (b - a);
          f1 = value_at(x1);
        }
      }
      const double th = f1 > f2 ? x1 : x2;
      const double val = std::max(f1, f2);
      if (val > best) {
        best = val;
        best_phases[j] = th;
      }
    }
  }

  est.m_hat = best;
  est.argmax_w.values.reserve(n);
  for (double th : best_phases) est.argmax_w.values.push_back(std::polar(1.0, th));
  return est;
}

double duality_lower_bound(const PointSequence& z_seq) { return c_H(z_seq).value; }

}  // namespace hinf
