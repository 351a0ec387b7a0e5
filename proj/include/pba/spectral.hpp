#pragma once

// Perron-Frobenius data of positive matrices, limit projectors, and the
// idempotent of a two-sided cell obtained as the limit of a^m / lambda^m.

#include <cstddef>
#include <vector>

#include "pba/based_modules.hpp"
#include "pba/config.hpp"

namespace pba {

struct PFData {
  double lambda = 0.0;
  Vector<double> v;      // right eigenvector, positive, |v|_1 = 1
  Vector<double> v_hat;  // left eigenvector, positive, v_hat^T v = 1
  Matrix<double> projector;  // v v_hat^T
  double residual_right = 0.0;  // max |M v - lambda v|
  double residual_left = 0.0;   // max |v_hat^T M - lambda v_hat^T|
  std::size_t iterations = 0;
};

/// a(c) = sum_i c_i a_i. Throws NonPositiveCoefficient unless every c_i > 0.
RationalVector pf_element(const PBAlgebra& alg, const RationalVector& c);

/// Action of a(c) on m, certified entrywise positive (NotPerronFrobenius
/// otherwise, which means m is not transitive).
RationalMatrix pf_action(const PBAlgebra& alg, const BasedModule& m, const RationalVector& c);

/// Power iteration on M and M^T from the all-ones vector. Requires M > 0
/// entrywise (NotPositiveMatrix).
PFData pf_eigendata(const Matrix<double>& m, const Tolerances& tol = {});
PFData pf_eigendata(const RationalMatrix& m, const Tolerances& tol = {});

/// Dominant eigenpair of a nonnegative matrix whose dominant eigenvalue is
/// simple and strictly dominant (e.g. primitive); no positivity check.
PFData dominant_eigendata(const Matrix<double>& m, const Tolerances& tol = {});

enum class ProjectorMode { Limit, Outer };

/// Outer: v v_hat^T. Limit: (M/lambda)^(2^k) by repeated squaring, each
/// iterate rescaled to unit trace, until successive iterates agree.
Matrix<double> pf_projector(const Matrix<double>& m, const PFData& pf, ProjectorMode mode,
                            const Tolerances& tol = {});

struct IdempotentData {
  std::size_t two_sided_cell = 0;
  std::size_t left_cell = 0;
  std::vector<std::size_t> indices;  // members of J, in the parent algebra
  Vector<double> coefficients;       // e = sum c_i a_i over `indices`
  double lambda = 0.0;               // PF eigenvalue of a on C_L
  double residual = 0.0;             // max |e^2 - e|
  double positivity_margin = 0.0;    // min c_i / sum c_i
  std::size_t squarings = 0;
};

/// In A_J, a = sum_{j in J} a_j; e = lim a^m / lambda^m computed by repeated
/// squaring. Certifies e^2 = e against the exact structure constants and
/// strict positivity of every coefficient.
IdempotentData cell_idempotent(const PBAlgebra& alg, const CellDecomposition& cd,
                               std::size_t two_sided_cell, std::size_t left_cell,
                               const Tolerances& tol = {});

}  // namespace pba
