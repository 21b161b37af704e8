#pragma once

#include <stdexcept>
#include <string>

namespace hinf {

// Adaptive quadrature ran out of refinement budget before reaching the
// requested tolerance.
struct NonConvergent : std::runtime_error {
  explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : std::invalid_argument {
  explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation at a conjugate pole z = conj(z_k) of a Blaschke product.
struct PoleHit : std::domain_error {
  explicit PoleHit(const std::string& what) : std::domain_error(what) {}
};

// Log-derivative requested at a zero of the product; use derivative_at_zero.
struct ZeroHit : std::domain_error {
  explicit ZeroHit(const std::string& what) : std::domain_error(what) {}
};

struct BadIndex : std::out_of_range {
  explicit BadIndex(const std::string& what) : std::out_of_range(what) {}
};

// Bisection upper endpoint turned out infeasible; signals a numerical defect,
// the proven upper bounds make this impossible in exact arithmetic.
struct BracketFailure : std::runtime_error {
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::domain_error {
  explicit OverflowError(const std::string& what) : std::domain_error(what) {}
};

struct BranchPoint : std::domain_error {
  explicit BranchPoint(const std::string& what) : std::domain_error(what) {}
};

struct NonPositive : std::domain_error {
  explicit NonPositive(const std::string& what) : std::domain_error(what) {}
};

// A mathematical inequality that is a theorem failed beyond tolerance.
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hinf
