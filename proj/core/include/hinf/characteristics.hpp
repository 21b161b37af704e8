#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hinf/halfplane.hpp"
#include "hinf/weight.hpp"

namespace hinf {

struct SupResult {
  double value = 0.0;
  std::size_t argmax = 0;  // ties broken by smallest height-sorted index
};

// Havin characteristic, a lower bound for the interpolation constant:
//   c_H(Z) = sup_k sum_j 4 y_k y_j / |z_k - conj z_j|^2 / |B_j(z_j)|.
SupResult c_H(const PointSequence& z_seq);

// Havin-Jones characteristic,
//   c_HJ(Z) = sup_n sum_{y_j <= y_n} 4 y_j (y_j + y_n) / |z_j - conj z_n|^2 / |B_j(z_j)|;
// height ties (and j = n itself) are included in the sum.
SupResult c_HJ(const PointSequence& z_seq);

// Harmonic majorant of the rescaled weight at z, u((z - x_j)/y_j), summed
// over the nodes at or below height y_k, each divided by |B_j(z_j)|:
//   U_k(z) = sum_{y_j <= y_k} u_j(z) / |B_j(z_j)|.
double big_U(const PointSequence& z_seq, const WeightFamily& g, std::size_t k,
             std::complex<double> z);

// c_J(Z, g) = sup_j U_j(z_j). Equals c_HJ for the standard weight.
SupResult c_J_given_g(const PointSequence& z_seq, const WeightFamily& g);

struct CJEstimate {
  double value = 0.0;
  std::size_t best_family = 0;
  std::size_t argmax = 0;
};

// min over the supplied families of c_J(Z, g); an upper bound for the true
// infimum over all admissible weights.
CJEstimate c_J_estimate(const PointSequence& z_seq, const std::vector<WeightFamily>& families);

// (2e + 4e log(1/delta)) / delta, the separation-only upper bound.
double delta_bound(double delta_value);

struct CharacteristicsReport {
  double delta = 1.0;
  SupResult c_h;
  SupResult c_hj;
  std::map<std::string, SupResult> c_j_by_family;
  double m_lower = 0.0;  // = c_H
  std::map<std::string, double> m_upper_candidates;  // e_cJ, e_cHJ, 2e_cH, delta_bound
  std::vector<std::string> violations;  // empty when the report invariants hold
};

// Assembles delta, all characteristics and the two-sided bounds for M(Z),
// checking the chain invariants (c_HJ <= 2 c_H, uppers >= lower).
CharacteristicsReport m_bounds(const PointSequence& z_seq,
                               const std::vector<WeightFamily>& families);

}  // namespace hinf
