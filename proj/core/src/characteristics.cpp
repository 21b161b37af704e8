#include "hinf/characteristics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hinf {
namespace {

std::vector<double> all_b_j(const PointSequence& z_seq) {
  std::vector<double> b(z_seq.size());
  for (std::size_t j = 0; j < z_seq.size(); ++j) b[j] = b_j_at_zj(z_seq, j);
  return b;
}

}  // namespace

SupResult c_H(const PointSequence& z_seq) {
  const auto b = all_b_j(z_seq);
  const auto& order = z_seq.height_order();
  SupResult best{-1.0, 0};
  for (std::size_t k : order) {
    const std::complex<double> zk = z_seq.node(k);
    const double yk = z_seq[k].y;
    double sum = 0.0;
    for (std::size_t j : order) {
      const std::complex<double> d = zk - std::conj(z_seq.node(j));
      sum += 4.0 * yk * z_seq[j].y / std::norm(d) / b[j];
    }
    if (sum > best.value) best = {sum, k};
  }
  return best;
}

SupResult c_HJ(const PointSequence& z_seq) {
  const auto b = all_b_j(z_seq);
  const auto& order = z_seq.height_order();
  SupResult best{-1.0, 0};
  for (std::size_t n : order) {
    const std::complex<double> zn = z_seq.node(n);
    const double yn = z_seq[n].y;
    double sum = 0.0;
    for (std::size_t j : order) {
      if (!(z_seq[j].y <= yn)) continue;
      const std::complex<double> d = z_seq.node(j) - std::conj(zn);
      sum += 4.0 * z_seq[j].y * (z_seq[j].y + yn) / std::norm(d) / b[j];
    }
    if (sum > best.value) best = {sum, n};
  }
  return best;
}

double big_U(const PointSequence& z_seq, const WeightFamily& g, std::size_t k,
             std::complex<double> z) {
  if (k >= z_seq.size()) throw BadIndex("index out of range");
  if (!(z.imag() > 0.0)) throw std::invalid_argument("big_U requires an interior point");
  const double yk = z_seq[k].y;
  double sum = 0.0;
  for (std::size_t j : z_seq.height_order()) {
    if (!(z_seq[j].y <= yk)) continue;
    const std::complex<double> w = (z - z_seq[j].x) / z_seq[j].y;
    sum += g.majorant(w) / b_j_at_zj(z_seq, j);
  }
  return sum;
}

SupResult c_J_given_g(const PointSequence& z_seq, const WeightFamily& g) {
  const auto b = all_b_j(z_seq);
  const auto& order = z_seq.height_order();
  SupResult best{-1.0, 0};
  for (std::size_t k : order) {
    const double yk = z_seq[k].y;
    const std::complex<double> zk = z_seq.node(k);
    double sum = 0.0;
    for (std::size_t j : order) {
      if (!(z_seq[j].y <= yk)) continue;
      const std::complex<double> w = (zk - z_seq[j].x) / z_seq[j].y;
      sum += g.majorant(w) / b[j];
    }
    if (sum > best.value) best = {sum, k};
  }
  return best;
}

CJEstimate c_J_estimate(const PointSequence& z_seq, const std::vector<WeightFamily>& families) {
  if (families.empty()) throw std::invalid_argument("c_J_estimate needs at least one family");
  CJEstimate best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < families.size(); ++i) {
    const SupResult r = c_J_given_g(z_seq, families[i]);
    if (r.value < best.value) {
      best = {r.value, i, r.argmax};
    }
  }
  return best;
}

double delta_bound(double delta_value) {
  if (!(delta_value > 0.0) || delta_value > 1.0) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  constexpr double e = std::numbers::e;
  return (2.0 * e + 4.0 * e * std::log(1.0 / delta_value)) / delta_value;
}

CharacteristicsReport m_bounds(const PointSequence& z_seq,
                               const std::vector<WeightFamily>& families) {
  constexpr double e = std::numbers::e;
  CharacteristicsReport report;
  report.delta = delta(z_seq);
  report.c_h = c_H(z_seq);
  report.c_hj = c_HJ(z_seq);
  report.m_lower = report.c_h.value;

  double min_cj = std::numeric_limits<double>::infinity();
  for (const auto& fam : families) {
    const SupResult r = c_J_given_g(z_seq, fam);
    report.c_j_by_family[fam.name()] = r;
    min_cj = std::min(min_cj, r.value);
  }
  if (!families.empty()) {
    report.m_upper_candidates["e_cJ"] = e * min_cj;
  }
  report.m_upper_candidates["e_cHJ"] = e * report.c_hj.value;
  report.m_upper_candidates["2e_cH"] = 2.0 * e * report.c_h.value;
  report.m_upper_candidates["delta_bound"] = delta_bound(report.delta);

  if (report.c_hj.value > 2.0 * report.c_h.value * (1.0 + 1e-12)) {
    report.violations.push_back("c_HJ <= 2 c_H");
  }
  for (const auto& [name, value] : report.m_upper_candidates) {
    if (value < report.m_lower * (1.0 - 1e-9)) {
      report.violations.push_back("m_lower <= " + name);
    }
  }
  return report;
}

}  // namespace hinf
