#include "hinf/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace hinf {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m, double rel_tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw NotHermitian("matrix is not square");
  }
  const double scale = std::max(m_.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index j = 0; j < m_.rows(); ++j) {
    if (std::abs(m_(j, j).imag()) > rel_tol * scale) {
      throw NotHermitian("diagonal entry has nonzero imaginary part");
    }
    for (Eigen::Index k = j + 1; k < m_.cols(); ++k) {
      if (std::abs(m_(j, k) - std::conj(m_(k, j))) > rel_tol * scale) {
        throw NotHermitian("entry (" + std::to_string(j) + "," + std::to_string(k) +
                           ") is not the conjugate of its transpose");
      }
    }
  }
}

double HermitianMatrix::max_diagonal() const {
  double best = m_(0, 0).real();
  for (Eigen::Index j = 1; j < m_.rows(); ++j) {
    best = std::max(best, m_(j, j).real());
  }
  return best;
}

double min_eigen_hermitian(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue solver failed to converge");
  }
  return solver.eigenvalues()(0);
}

bool is_psd(const HermitianMatrix& m, double rel_tol) {
  return min_eigen_hermitian(m) >= -rel_tol * m.max_diagonal();
}

}  // namespace hinf
