#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hinf/characteristics.hpp"
#include "hinf/halfplane.hpp"
#include "hinf/weight.hpp"

namespace hinf {

// Bounded target data w paired with a point sequence.
struct TargetValues {
  std::vector<std::complex<double>> values;

  double sup_norm() const {
    double m = 0.0;
    for (const auto& w : values) m = std::max(m, std::abs(w));
    return m;
  }
};

// 1/c, the minimizer of a -> exp(a c)/a over a > 0.
double optimal_a(double c);

// Analytic completion G_k = U_k + i V_k of the majorant sum U_k, with the
// additive imaginary constant normalized to 0 at z = i. The standard weight
// uses the closed form sum 4i y_j / ((z - conj z_j) |B_j(z_j)|); other
// families use Poisson plus conjugate-kernel quadrature.
std::complex<double> analytic_completion_G(const PointSequence& z_seq, const WeightFamily& g,
                                           std::size_t k, std::complex<double> z,
                                           double quad_tol = 1e-9);

// Fully specified interpolant
//   f(z) = sum_j w_j (B_j(z)/B_j(z_j)) g_j(z) exp(-a (G_j(z) - G_j(z_j))).
// With a = auto the optimal 1/c_J(Z,g) is used. G_j(z_j) values are cached
// at construction.
class InterpolantSpec {
 public:
  InterpolantSpec(PointSequence z_seq, TargetValues w, WeightFamily g,
                  std::optional<double> a = std::nullopt, double quad_tol = 1e-9);

  const PointSequence& sequence() const { return z_seq_; }
  const TargetValues& targets() const { return w_; }
  const WeightFamily& family() const { return g_; }
  double a() const { return a_; }
  double c() const { return c_; }  // cached c_J(Z, g)
  double bound() const;            // ||w|| exp(a c)/a

  std::complex<double> g_at_node(std::size_t j) const { return g_at_nodes_[j]; }
  double quad_tol() const { return quad_tol_; }

 private:
  PointSequence z_seq_;
  TargetValues w_;
  WeightFamily g_;
  double a_ = 1.0;
  double c_ = 0.0;
  double quad_tol_ = 1e-9;
  std::vector<std::complex<double>> g_at_nodes_;  // G_j(z_j)
  std::vector<std::complex<double>> b_at_nodes_;  // B_j(z_j), full complex value
  friend std::complex<double> evaluate_interpolant(const InterpolantSpec&, std::complex<double>);
};

// Evaluate the interpolant at an interior point.
std::complex<double> evaluate_interpolant(const InterpolantSpec& spec, std::complex<double> z);

// Sample grid for sup-norm estimation: log-spaced rows from delta-scale below
// the lowest node up to above the highest, x spanning the node range widened
// by pad_halfwidths times the largest node height, node rows/columns included.
struct GridSpec {
  int nx = 161;
  int ny = 48;
  double pad_halfwidths = 10.0;
  double y_top_factor = 3.0;
};

struct NormCertificate {
  double empirical_sup = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - empirical_sup; negative beyond slack is a defect
  std::complex<double> arg_sup;
};

// Grid sup of |f| against the theoretical bound ||w|| exp(a c)/a. The grid
// sup is a heuristic lower estimate of the true sup norm.
NormCertificate norm_certificate(const InterpolantSpec& spec, const GridSpec& grid = {});

}  // namespace hinf
