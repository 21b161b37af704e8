#include "hinf/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hinf {

PointSequence::PointSequence(std::vector<HalfPlanePoint> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
  if (points_.empty()) {
    throw std::invalid_argument("point sequence must be nonempty");
  }
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw std::invalid_argument("label count does not match point count");
  }
  for (const auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("point coordinates must be finite");
    }
    if (!(p.y > 0.0)) {
      throw std::invalid_argument("points must lie strictly in the upper half-plane (y > 0)");
    }
  }
  height_order_.resize(points_.size());
  std::iota(height_order_.begin(), height_order_.end(), std::size_t{0});
  std::stable_sort(height_order_.begin(), height_order_.end(),
                   [this](std::size_t a, std::size_t b) {
                     if (points_[a].y != points_[b].y) return points_[a].y < points_[b].y;
                     if (points_[a].x != points_[b].x) return points_[a].x < points_[b].x;
                     return a < b;
                   });
  // Distinctness is exact coordinate inequality; near-coincident points are
  // legal and simply produce a tiny separation.
  for (std::size_t i = 0; i + 1 < height_order_.size(); ++i) {
    const auto& a = points_[height_order_[i]];
    const auto& b = points_[height_order_[i + 1]];
    if (a.x == b.x && a.y == b.y) {
      throw std::invalid_argument("points must be distinct");
    }
  }
}

std::complex<double> blaschke_eval(const PointSequence& z_seq, std::complex<double> z,
                                   std::optional<std::size_t> exclude,
                                   const SignConvention& sign) {
  const std::size_t n = z_seq.size();
  if (exclude && *exclude >= n) {
    throw BadIndex("exclude index out of range");
  }
  double log_mag = 0.0;
  double phase = 0.0;
  int parity = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (exclude && k == *exclude) continue;
    const std::complex<double> zk = z_seq.node(k);
    const std::complex<double> num = z - zk;
    const std::complex<double> den = z - std::conj(zk);
    if (den == std::complex<double>(0.0, 0.0)) {
      throw PoleHit("evaluation at a conjugate pole");
    }
    if (num == std::complex<double>(0.0, 0.0)) {
      return {0.0, 0.0};
    }
    log_mag += std::log(std::abs(num)) - std::log(std::abs(den));
    phase += std::arg(num) - std::arg(den);
    parity *= sign.sign(k);
  }
  const double mag = std::exp(log_mag);
  return static_cast<double>(parity) * std::polar(mag, phase);
}

double b_j_at_zj(const PointSequence& z_seq, std::size_t j) {
  const std::size_t n = z_seq.size();
  if (j >= n) throw BadIndex("index out of range");
  const std::complex<double> zj = z_seq.node(j);
  double log_mag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) continue;
    const std::complex<double> zk = z_seq.node(k);
    log_mag += std::log(std::abs(zj - zk)) - std::log(std::abs(zj - std::conj(zk)));
  }
  return std::exp(log_mag);
}

double delta(const PointSequence& z_seq) {
  double best = 1.0;
  for (std::size_t j = 0; j < z_seq.size(); ++j) {
    best = std::min(best, b_j_at_zj(z_seq, j));
  }
  return best;
}

std::complex<double> blaschke_log_derivative(const PointSequence& z_seq, std::complex<double> z) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < z_seq.size(); ++k) {
    const std::complex<double> zk = z_seq.node(k);
    const std::complex<double> num = z - zk;
    const std::complex<double> den = z - std::conj(zk);
    if (den == std::complex<double>(0.0, 0.0)) throw PoleHit("log-derivative at a conjugate pole");
    if (num == std::complex<double>(0.0, 0.0)) {
      throw ZeroHit("log-derivative at a zero; use blaschke_derivative_at_zero");
    }
    sum += 1.0 / num - 1.0 / den;
  }
  return sum;
}

std::complex<double> blaschke_derivative(const PointSequence& z_seq, std::complex<double> z,
                                         const SignConvention& sign) {
  return blaschke_eval(z_seq, z, std::nullopt, sign) * blaschke_log_derivative(z_seq, z);
}

std::complex<double> blaschke_derivative_at_zero(const PointSequence& z_seq, std::size_t j,
                                                 const SignConvention& sign) {
  if (j >= z_seq.size()) throw BadIndex("index out of range");
  const std::complex<double> zj = z_seq.node(j);
  const std::complex<double> bj = blaschke_eval(z_seq, zj, j, sign);
  return static_cast<double>(sign.sign(j)) * bj / (zj - std::conj(zj));
}

}  // namespace hinf
