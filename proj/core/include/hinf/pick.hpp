#pragma once

#include <cstdint>
#include <optional>

#include "hinf/halfplane.hpp"
#include "hinf/hermitian.hpp"
#include "hinf/jones.hpp"

namespace hinf {

struct PickProblem {
  PointSequence z_seq;
  TargetValues w;
};

struct PickResult {
  double rho_star = 0.0;
  int iterations = 0;
  // Certificate eigenvalues at rho_star*(1 +/- tol) of the rescaled matrix.
  double lambda_min_above = 0.0;
  double lambda_min_below = 0.0;
  bool at_lower_endpoint = false;  // rho_star == ||w||_inf, no infeasible side
};

// Pick matrix with the Hermitian normalization,
//   Q_jk = (rho^2 - w_j conj w_k) / (-i (z_j - conj z_k)),
// whose diagonal (rho^2 - |w_j|^2) / (2 y_j) is real.
HermitianMatrix pick_matrix(const PointSequence& z_seq, const TargetValues& w, double rho);

// As above but congruence-rescaled by D = diag(sqrt(2 y_j)); same PSD verdict
// with entries of comparable size even for geometric height ranges.
HermitianMatrix pick_matrix_scaled(const PointSequence& z_seq, const TargetValues& w, double rho);

// Minimal interpolation norm rho*(Z, w): the smallest rho with Q(rho) PSD,
// found by bisection between ||w||_inf and ||w||_inf times the proven upper
// bounds (min of e c_HJ and the separation bound). PSD feasibility is
// monotone nondecreasing in rho.
PickResult minimal_norm(const PickProblem& problem, double tol = 1e-8);

struct EstimateM {
  double m_hat = 0.0;
  TargetValues argmax_w;
  int samples_used = 0;
};

// Lower estimate of M_n(Z): maximum of rho*(Z, w) over seeded random
// unimodular data, refined by coordinate-wise golden-section phase ascent.
// Deterministic given the seed.
EstimateM estimate_M(const PointSequence& z_seq, int samples, std::uint64_t seed,
                     int ascent_steps = 2, double tol = 1e-9);

// The duality certificate M(Z) >= c_H(Z); delegates to the characteristics.
double duality_lower_bound(const PointSequence& z_seq);

}  // namespace hinf
