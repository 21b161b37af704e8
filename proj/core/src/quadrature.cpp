#include "hinf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace hinf {
namespace {

// Gauss-Kronrod 15(7) abscissae and weights on [-1,1] (nonnegative half).
// Even-index abscissae carry the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kAbscissa = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double integral;
  double error;
  double abs_integral;  // integral of |f|, the attainable-precision scale
};

// Worst-panel-first refinement with a global error budget; per-panel
// tolerance schedules degrade exponentially on integrable singularities,
// the global strategy keeps the panel count proportional to the depth.
class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, long max_evals)
      : f_(f), budget_(max_evals) {}

  double run(const std::vector<double>& bounds, double tol) {
    struct Entry {
      double a, b;
      Panel panel;
      long seq;
    };
    auto worse = [](const Entry& lhs, const Entry& rhs) {
      if (lhs.panel.error != rhs.panel.error) return lhs.panel.error < rhs.panel.error;
      return lhs.seq > rhs.seq;  // stable, deterministic tie-break
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    long seq = 0;
    double total_error = 0.0;
    double floor_scale = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      Entry e{bounds[i], bounds[i + 1], gk15(bounds[i], bounds[i + 1]), seq++};
      total_error += e.panel.error;
      floor_scale += e.panel.abs_integral;
      queue.push(e);
    }
    // Rounding of the absolute integral limits the attainable accuracy.
    auto floor = [&floor_scale] {
      return 64.0 * std::numeric_limits<double>::epsilon() * (floor_scale + 1e-300);
    };
    double stuck_error = 0.0;
    while (total_error > std::max(tol, floor()) && !queue.empty()) {
      const Entry top = queue.top();
      if (top.panel.error <= 0.0) break;
      queue.pop();
      total_error -= top.panel.error;
      const double width_eps =
          1e-15 * (std::abs(top.a) + std::abs(top.b) + 1.0);
      if (top.b - top.a < width_eps) {
        stuck_error += top.panel.error;  // cannot be subdivided further
        if (stuck_error > std::max(tol, floor())) {
          throw NonConvergent("quadrature stalled below resolvable panel width");
        }
        continue;
      }
      const double mid = 0.5 * (top.a + top.b);
      Entry left{top.a, mid, gk15(top.a, mid), seq++};
      Entry right{mid, top.b, gk15(mid, top.b), seq++};
      floor_scale += left.panel.abs_integral + right.panel.abs_integral - top.panel.abs_integral;
      total_error += left.panel.error + right.panel.error;
      queue.push(left);
      queue.push(right);
      total_error += stuck_error;  // re-check stalled mass against the budget
      stuck_error = 0.0;
    }
    // Deterministic summation: drain ordered by interval position.
    std::vector<Entry> leaves;
    leaves.reserve(queue.size());
    while (!queue.empty()) {
      leaves.push_back(queue.top());
      queue.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Entry& lhs, const Entry& rhs) { return lhs.a < rhs.a; });
    double total = 0.0;
    for (const Entry& e : leaves) total += e.panel.integral;
    return total;
  }

 private:
  double eval(double t) {
    if (--budget_ < 0) {
      throw NonConvergent("quadrature refinement budget exhausted");
    }
    const double v = f_(t);
    if (!std::isfinite(v)) {
      throw std::invalid_argument("integrand not finite at t=" + std::to_string(t));
    }
    return v;
  }

  Panel gk15(double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0, kron_abs = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double x = h * kAbscissa[i];
      double fsum, fabs_sum;
      if (i == 7) {
        fsum = eval(c);
        fabs_sum = std::abs(fsum);
      } else {
        const double lo = eval(c - x);
        const double hi = eval(c + x);
        fsum = lo + hi;
        fabs_sum = std::abs(lo) + std::abs(hi);
      }
      kron += kKronrodW[i] * fsum;
      kron_abs += kKronrodW[i] * fabs_sum;
      if (i % 2 == 1 || i == 7) {
        gauss += kGaussW[i / 2] * fsum;
      }
    }
    return Panel{kron * h, std::abs(kron - gauss) * h, kron_abs * h};
  }

  const std::function<double(double)>& f_;
  long budget_;
};

double integrate_panels(const std::function<double(double)>& f, std::vector<double> bounds,
                        double abs_tol) {
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  if (bounds.size() < 2) return 0.0;
  Integrator integ(f, 2'000'000);
  return integ.run(bounds, abs_tol);
}

}  // namespace

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, const std::vector<double>& extra_breakpoints) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  if (a == b) return 0.0;
  std::vector<double> bounds{a, b};
  for (double t : extra_breakpoints) {
    if (t > a && t < b) bounds.push_back(t);
  }
  return integrate_panels(f, std::move(bounds), abs_tol);
}

double integrate_real_line(const RealLineFunction& f, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be positive");
  if (!f.evaluator) throw std::invalid_argument("RealLineFunction has no evaluator");

  if (f.decay_class == DecayClass::compact_support && f.support_radius > 0.0) {
    std::vector<double> brk(f.singular_points);
    brk.push_back(0.0);
    return integrate_interval(f.evaluator, -f.support_radius, f.support_radius, abs_tol, brk);
  }

  // t = tan(theta) maps the line onto (-pi/2, pi/2); Poisson-weighted tails
  // become bounded integrands and log tails become integrable endpoint
  // singularities handled by panel refinement.
  const auto& g = f.evaluator;
  auto transformed = [&g](double theta) {
    const double c = std::cos(theta);
    const double t = std::tan(theta);
    return g(t) / (c * c);
  };
  constexpr double kHalfPi = 1.57079632679489661923;
  std::vector<double> bounds{-kHalfPi, kHalfPi, 0.0};
  for (double s : f.singular_points) bounds.push_back(std::atan(s));
  return integrate_panels(transformed, std::move(bounds), abs_tol);
}

double poisson_integral(const RealLineFunction& f, std::complex<double> z, double abs_tol) {
  const double x = z.real(), y = z.imag();
  if (!(y > 0.0)) throw std::invalid_argument("poisson_integral requires Im z > 0");
  constexpr double kInvPi = 0.31830988618379067154;
  const auto& g = f.evaluator;
  RealLineFunction integrand;
  integrand.evaluator = [&g, x, y, kInvPi](double t) {
    const double dx = x - t;
    return kInvPi * y * g(t) / (dx * dx + y * y);
  };
  integrand.decay_class =
      f.decay_class == DecayClass::log_growth ? DecayClass::log_growth : DecayClass::poisson_weighted;
  integrand.singular_points = f.singular_points;
  for (double s : {x - 10 * y, x - y, x, x + y, x + 10 * y}) {
    integrand.singular_points.push_back(s);
  }
  if (f.decay_class == DecayClass::compact_support && f.support_radius > 0.0) {
    // Kernel tails outside the support vanish with g.
    integrand.decay_class = DecayClass::compact_support;
    integrand.support_radius = f.support_radius;
  }
  return integrate_real_line(integrand, abs_tol);
}

double conjugate_kernel_integral(const RealLineFunction& f, std::complex<double> z,
                                 double abs_tol) {
  const double x = z.real(), y = z.imag();
  if (!(y > 0.0)) throw std::invalid_argument("conjugate_kernel_integral requires Im z > 0");
  constexpr double kInvPi = 0.31830988618379067154;
  const auto& g = f.evaluator;
  RealLineFunction integrand;
  // Fused form of (x-t)/((x-t)^2+y^2) + t/(1+t^2); the naive sum cancels to
  // O(1/t^2) and its rounding noise, amplified by the compactifying
  // substitution, would swamp slowly decaying integrands.
  integrand.evaluator = [&g, x, y, kInvPi](double t) {
    const double dx = x - t;
    const double num = dx * (1.0 + t * x) + t * y * y;
    const double den = (dx * dx + y * y) * (1.0 + t * t);
    return kInvPi * (num / den) * g(t);
  };
  integrand.decay_class =
      f.decay_class == DecayClass::log_growth ? DecayClass::log_growth : DecayClass::poisson_weighted;
  integrand.singular_points = f.singular_points;
  for (double s : {x - 10 * y, x - y, x, x + y, x + 10 * y, -1.0, 1.0}) {
    integrand.singular_points.push_back(s);
  }
  return integrate_real_line(integrand, abs_tol);
}

}  // namespace hinf
