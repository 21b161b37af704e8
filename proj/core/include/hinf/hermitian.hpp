#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hinf/errors.hpp"

namespace hinf {

// A complex square matrix validated to be Hermitian: entry(j,k) must equal
// conj(entry(k,j)) to within 1e-12 relative to the largest entry, with a real
// diagonal. Houses Pick matrices and similar quadratic forms.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd m, double rel_tol = 1e-12);

  Eigen::Index order() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double max_diagonal() const;
  double trace_real() const { return m_.trace().real(); }

 private:
  Eigen::MatrixXcd m_;
};

// Smallest eigenvalue, accurate to 1e-10 * (1 + |trace|).
double min_eigen_hermitian(const HermitianMatrix& m);

// Positive semidefiniteness up to a relative slack: true iff
// lambda_min >= -rel_tol * (max diagonal entry). Monotone under adding any
// PSD perturbation.
bool is_psd(const HermitianMatrix& m, double rel_tol);

}  // namespace hinf
