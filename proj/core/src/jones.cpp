#include "hinf/jones.hpp"

#include <cmath>
#include <numbers>

namespace hinf {
namespace {

// Unnormalized completion: real part is U_k(z) exactly; imaginary part is a
// conjugate, fixed only up to an additive constant.
std::complex<double> completion_raw(const PointSequence& z_seq, const WeightFamily& g,
                                    std::size_t k, std::complex<double> z, double quad_tol) {
  const double yk = z_seq[k].y;
  if (g.kind() == WeightKind::standard_jones) {
    std::complex<double> sum = 0.0;
    for (std::size_t j : z_seq.height_order()) {
      if (!(z_seq[j].y <= yk)) continue;
      const std::complex<double> term =
          std::complex<double>(0.0, 4.0) * z_seq[j].y / (z - std::conj(z_seq.node(j)));
      sum += term / b_j_at_zj(z_seq, j);
    }
    return sum;
  }
  double u_sum = 0.0;
  double v_sum = 0.0;
  for (std::size_t j : z_seq.height_order()) {
    if (!(z_seq[j].y <= yk)) continue;
    const double bj = b_j_at_zj(z_seq, j);
    const double xj = z_seq[j].x;
    const double yj = z_seq[j].y;
    const std::complex<double> w = (z - xj) / yj;
    u_sum += g.majorant(w) / bj;
    // Boundary trace of u_j is |g((t - x_j)/y_j)|.
    RealLineFunction boundary;
    const WeightFamily fam = g;
    boundary.evaluator = [fam, xj, yj](double t) { return fam.boundary_modulus((t - xj) / yj); };
    boundary.decay_class = g.boundary().decay_class;
    for (double s : g.boundary().singular_points) boundary.singular_points.push_back(xj + yj * s);
    v_sum += conjugate_kernel_integral(boundary, z, quad_tol * std::max(bj, 1e-6)) / bj;
  }
  return {u_sum, v_sum};
}

}  // namespace

double optimal_a(double c) {
  if (!(c > 0.0)) throw NonPositive("optimal_a requires c > 0");
  return 1.0 / c;
}

std::complex<double> analytic_completion_G(const PointSequence& z_seq, const WeightFamily& g,
                                           std::size_t k, std::complex<double> z,
                                           double quad_tol) {
  if (k >= z_seq.size()) throw BadIndex("index out of range");
  if (!(z.imag() > 0.0)) throw std::invalid_argument("completion requires an interior point");
  const std::complex<double> raw = completion_raw(z_seq, g, k, z, quad_tol);
  const std::complex<double> at_i = completion_raw(z_seq, g, k, {0.0, 1.0}, quad_tol);
  return raw - std::complex<double>(0.0, at_i.imag());
}

InterpolantSpec::InterpolantSpec(PointSequence z_seq, TargetValues w, WeightFamily g,
                                 std::optional<double> a, double quad_tol)
    : z_seq_(std::move(z_seq)), w_(std::move(w)), g_(std::move(g)), quad_tol_(quad_tol) {
  if (w_.values.size() != z_seq_.size()) {
    throw std::invalid_argument("target count does not match node count");
  }
  for (const auto& v : w_.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("target values must be finite");
    }
  }
  c_ = c_J_given_g(z_seq_, g_).value;
  if (a.has_value()) {
    if (!(*a > 0.0)) throw NonPositive("parameter a must be positive");
    a_ = *a;
  } else {
    a_ = optimal_a(c_);
  }
  g_at_nodes_.reserve(z_seq_.size());
  b_at_nodes_.reserve(z_seq_.size());
  for (std::size_t j = 0; j < z_seq_.size(); ++j) {
    g_at_nodes_.push_back(completion_raw(z_seq_, g_, j, z_seq_.node(j), quad_tol_));
    b_at_nodes_.push_back(blaschke_eval(z_seq_, z_seq_.node(j), j));
  }
}

double InterpolantSpec::bound() const {
  return w_.sup_norm() * std::exp(a_ * c_) / a_;
}

std::complex<double> evaluate_interpolant(const InterpolantSpec& spec, std::complex<double> z) {
  if (!(z.imag() > 0.0)) {
    throw std::invalid_argument("interpolant evaluation requires an interior point");
  }
  const PointSequence& seq = spec.z_seq_;
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const std::complex<double> w = spec.w_.values[j];
    if (w == std::complex<double>(0.0, 0.0)) continue;
    const std::complex<double> bj = blaschke_eval(seq, z, j);
    if (bj == std::complex<double>(0.0, 0.0)) continue;
    const std::complex<double> gj = spec.g_.g((z - seq[j].x) / seq[j].y);
    std::complex<double> exponent;
    if (z == seq.node(j)) {
      exponent = 0.0;
    } else {
      exponent = -spec.a_ * (completion_raw(seq, spec.g_, j, z, spec.quad_tol_) -
                             spec.g_at_nodes_[j]);
    }
    sum += w * (bj / spec.b_at_nodes_[j]) * gj * std::exp(exponent);
  }
  return sum;
}

NormCertificate norm_certificate(const InterpolantSpec& spec, const GridSpec& grid) {
  const PointSequence& seq = spec.sequence();
  double min_x = seq[0].x, max_x = seq[0].x;
  double min_y = seq[0].y, max_y = seq[0].y;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    min_x = std::min(min_x, seq[j].x);
    max_x = std::max(max_x, seq[j].x);
    min_y = std::min(min_y, seq[j].y);
    max_y = std::max(max_y, seq[j].y);
  }
  const double pad = grid.pad_halfwidths * max_y;
  const double x_lo = min_x - pad, x_hi = max_x + pad;
  // The sup of a bounded analytic function lives on the boundary, so the rows
  // must reach well below the lowest node whatever the separation is.
  const double y_lo = std::max(std::min(delta(seq), 1e-2) * min_y, 1e-12);
  const double y_hi = grid.y_top_factor * max_y;

  std::vector<double> xs, ys;
  xs.reserve(grid.nx + seq.size());
  ys.reserve(grid.ny + seq.size());
  for (int i = 0; i < grid.nx; ++i) {
    xs.push_back(x_lo + (x_hi - x_lo) * i / double(grid.nx - 1));
  }
  const double log_lo = std::log(y_lo), log_hi = std::log(y_hi);
  for (int i = 0; i < grid.ny; ++i) {
    ys.push_back(std::exp(log_lo + (log_hi - log_lo) * i / double(grid.ny - 1)));
  }
  for (std::size_t j = 0; j < seq.size(); ++j) {
    xs.push_back(seq[j].x);
    ys.push_back(seq[j].y);
  }

  NormCertificate cert;
  cert.bound = spec.bound();
  auto scan = [&](const std::vector<double>& col, const std::vector<double>& row) {
    for (double y : row) {
      for (double x : col) {
        const std::complex<double> z{x, y};
        const double v = std::abs(evaluate_interpolant(spec, z));
        if (v > cert.empirical_sup) {
          cert.empirical_sup = v;
          cert.arg_sup = z;
        }
      }
    }
  };
  scan(xs, ys);

  // Local zoom around the coarse argmax sharpens the peak estimate.
  double dx = (x_hi - x_lo) / double(grid.nx - 1);
  double dlog = (log_hi - log_lo) / double(grid.ny - 1);
  for (int pass = 0; pass < 3; ++pass) {
    const std::complex<double> c = cert.arg_sup;
    std::vector<double> zx, zy;
    for (int i = -10; i <= 10; ++i) {
      zx.push_back(c.real() + dx * i / 5.0);
      const double ly = std::log(c.imag()) + dlog * i / 5.0;
      zy.push_back(std::exp(ly));
    }
    scan(zx, zy);
    dx /= 5.0;
    dlog /= 5.0;
  }
  cert.margin = cert.bound - cert.empirical_sup;
  return cert;
}

}  // namespace hinf
