#pragma once

// Radical of the algebra (exact, via the trace form), cyclic submodules,
// tops of submodules and their characters, and the kernel cone check.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pba/config.hpp"
#include "pba/module.hpp"

namespace pba {

/// Trace of every algebra basis element on a simple module.
struct SimpleCharacter {
  Vector<double> traces;
  std::size_t dim = 0;
  std::string source;
};

/// Max-norm distance, or infinity when the dimensions differ.
double character_distance(const SimpleCharacter& a, const SimpleCharacter& b);
bool same_character(const SimpleCharacter& a, const SimpleCharacter& b, double tol);

/// Gram matrix of the trace form: entry (i, j) = tr(left multiplication by a_i a_j).
RationalMatrix trace_form(const PBAlgebra& alg);

struct Radical {
  RationalMatrix basis;  // n x r, columns span rad(A)
  std::size_t nilpotency_index = 0;  // least k with rad^k = 0 (0 when rad = 0)
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis.cols()); }
};

/// Nullspace of the trace form, verified exactly to be a two-sided ideal
/// that is nilpotent (InvariantViolated otherwise).
Radical radical(const PBAlgebra& alg);

/// Orthonormal basis of A v = span of all iterated images of v under the
/// action matrices. Throws ZeroVector.
Matrix<double> generated_submodule(const BasedModule& m, const Vector<double>& v,
                                   double tol = 1e-9);

struct ModuleTop {
  Matrix<double> space;     // V, orthonormal columns
  Matrix<double> radical;   // rad(A) V, orthonormal columns
  Matrix<double> quotient;  // orthonormal complement of rad(A) V inside V
  std::vector<Matrix<double>> actions;  // induced action of each a_i on V / rad(A) V
  SimpleCharacter character;
  std::size_t dim() const noexcept { return static_cast<std::size_t>(quotient.cols()); }
};

/// Top of the invariant subspace V (orthonormal columns). Throws ZeroQuotient
/// when rad(A) V = V.
ModuleTop module_top(const BasedModule& m, const Radical& rad, const Matrix<double>& space,
                     double tol = 1e-9, std::string source = {});

/// The only nonnegative vector in span(kernel) is zero. Floating version: no
/// x in the span with x >= -eps entrywise and sum(x) = 1.
bool kernel_cone_check(const Matrix<double>& kernel, double eps = 1e-7);
/// Exact version for a rational kernel.
bool kernel_cone_check(const RationalMatrix& kernel);

/// If the floating basis is, up to tol, the orthonormalisation of a small
/// rational basis, return that basis (used to pick the exact cone check).
std::optional<RationalMatrix> rationalize_subspace(const Matrix<double>& q, double tol = 1e-9);

/// For split semisimple algebras, <chi, psi> = chi^T G^{-1} psi with G the
/// trace form; equals the multiplicity pairing of simple characters.
double character_pairing(const RationalMatrix& trace_form_gram, const Vector<double>& chi,
                         const Vector<double>& psi);

}  // namespace pba
