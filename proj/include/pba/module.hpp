#pragma once

#include <string>
#include <vector>

#include "pba/algebra.hpp"

namespace pba {

/// A module over a PBAlgebra given by its basis and the matrix of every
/// algebra basis element. actions[i] acts on column vectors of length dim().
struct BasedModule {
  std::vector<std::string> labels;
  std::vector<RationalMatrix> actions;

  std::size_t dim() const noexcept { return labels.size(); }
};

struct ModuleViolation {
  enum class Kind { Shape, Unit, Negative, Compatibility } kind;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Exact check of the module axioms: one square matrix per basis element,
/// identity for the unit, entries >= 0, and
/// action(a_i) action(a_j) = sum_k gamma(i,j,k) action(a_k).
std::vector<ModuleViolation> check_module(const PBAlgebra& alg, const BasedModule& m);

/// Matrix of x = sum_i x_i a_i on the module.
template <typename Scalar>
Matrix<Scalar> module_action(const BasedModule& m, const Vector<Scalar>& x) {
  if (static_cast<std::size_t>(x.size()) != m.actions.size())
    throw Error(ErrorKind::DimensionMismatch, "element length does not match module");
  const auto d = static_cast<Eigen::Index>(m.dim());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(d, d);
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    const auto& xi = x(static_cast<Eigen::Index>(i));
    if (xi == Scalar(0)) continue;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      out += xi * m.actions[i];
    } else {
      out += xi * to_double(m.actions[i]);
    }
  }
  return out;
}

/// The regular module: basis = algebra basis, actions = left multiplication.
BasedModule regular_module(const PBAlgebra& alg);

/// Block-diagonal sum; labels are prefixed to stay distinct.
BasedModule direct_sum(const BasedModule& a, const BasedModule& b);

}  // namespace pba
