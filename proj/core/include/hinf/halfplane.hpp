#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hinf/errors.hpp"

namespace hinf {

struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;  // strictly positive
};

inline std::complex<double> to_complex(const HalfPlanePoint& p) { return {p.x, p.y}; }

// Finite sequence Z = (z_j) of pairwise distinct points in the open upper
// half-plane. Immutable after construction; user order is preserved and a
// stable height order (by y, then x, then input index) is kept alongside.
class PointSequence {
 public:
  explicit PointSequence(std::vector<HalfPlanePoint> points,
                         std::vector<std::string> labels = {});

  std::size_t size() const { return points_.size(); }
  const HalfPlanePoint& operator[](std::size_t j) const { return points_[j]; }
  std::complex<double> node(std::size_t j) const { return to_complex(points_[j]); }
  const std::vector<HalfPlanePoint>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& height_order() const { return height_order_; }

 private:
  std::vector<HalfPlanePoint> points_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> height_order_;
};

// Per-factor signs of the product. plain keeps (z - z_k)/(z - conj z_k) for
// every factor; gamma_normalized flips the factors above a center index so
// that i B'(i) > 0 for the geometric example sequences.
class SignConvention {
 public:
  static SignConvention plain() { return SignConvention{std::nullopt}; }
  static SignConvention gamma_normalized(std::size_t center_index) {
    return SignConvention{center_index};
  }
  int sign(std::size_t j) const {
    return (!center_ || j <= *center_) ? 1 : -1;
  }
  bool is_plain() const { return !center_.has_value(); }

 private:
  explicit SignConvention(std::optional<std::size_t> center) : center_(center) {}
  std::optional<std::size_t> center_;
};

// Product of sigma_k (z - z_k)/(z - conj z_k) over k != exclude, accumulated
// in log-magnitude/phase space. z may lie on the real axis; conjugate poles
// raise PoleHit. Exact hits of a zero return 0.
std::complex<double> blaschke_eval(const PointSequence& z_seq, std::complex<double> z,
                                   std::optional<std::size_t> exclude = std::nullopt,
                                   const SignConvention& sign = SignConvention::plain());

// |B_j(z_j)|, the pseudohyperbolic product prod_{k != j} |z_j - z_k| / |z_j - conj z_k|.
double b_j_at_zj(const PointSequence& z_seq, std::size_t j);

// Carleson separation delta(Z) = min_j |B_j(z_j)|.
double delta(const PointSequence& z_seq);

// B'(z)/B(z) = sum_k [ 1/(z - z_k) - 1/(z - conj z_k) ]; sign-independent.
std::complex<double> blaschke_log_derivative(const PointSequence& z_seq, std::complex<double> z);

// B'(z) away from zeros and poles.
std::complex<double> blaschke_derivative(const PointSequence& z_seq, std::complex<double> z,
                                         const SignConvention& sign = SignConvention::plain());

// B'(z_j) = sigma_j B_j(z_j) / (z_j - conj z_j), the companion path at a zero.
std::complex<double> blaschke_derivative_at_zero(const PointSequence& z_seq, std::size_t j,
                                                 const SignConvention& sign = SignConvention::plain());

}  // namespace hinf
