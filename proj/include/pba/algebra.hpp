#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pba/error.hpp"
#include "pba/rational.hpp"

namespace pba {

/// One nonzero term a_k with coefficient `coeff` in a product a_i * a_j.
struct Term {
  std::size_t index;
  Rational coeff;
};

struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational value;
};

/// A finite-dimensional algebra over Q with a distinguished basis a_0..a_{n-1}
/// and structure constants a_i a_j = sum_k gamma(i,j,k) a_k.
///
/// Immutable after construction. The constructor only checks the shape of the
/// data (indices in range, distinct labels); the algebraic axioms are checked
/// by validate(), so that a malformed table can still be inspected.
class PBAlgebra {
 public:
  PBAlgebra(std::vector<std::string> labels, std::size_t unit_index,
            std::vector<StructureConstant> gamma);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t unit_index() const noexcept { return unit_; }

  /// Nonzero constants in (i,j,k)-lexicographic order.
  const std::vector<StructureConstant>& constants() const noexcept { return constants_; }

  /// Terms of a_i * a_j, sorted by basis index.
  std::span<const Term> product(std::size_t i, std::size_t j) const;

  Rational gamma(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  std::vector<std::string> labels_;
  std::size_t unit_;
  std::vector<StructureConstant> constants_;
  std::vector<Term> terms_;
  std::vector<std::size_t> offsets_;  // n*n + 1 entries into terms_
};

struct Violation {
  ErrorKind kind;
  std::array<std::size_t, 3> where;  // unused slots are 0
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

struct ValidateOptions {
  std::size_t max_dim = 400;
};

/// Checks nonnegativity, the two unit axioms and associativity on every
/// triple of basis elements, exactly.
ValidationReport validate(const PBAlgebra& alg, const ValidateOptions& options = {});

/// Support of a_i * a_j.
std::vector<std::size_t> star(const PBAlgebra& alg, std::size_t i, std::size_t j);

/// Exact matrix of left multiplication by a_i on the regular module: entry
/// (k, j) is gamma(i, j, k).
RationalMatrix basis_action(const PBAlgebra& alg, std::size_t i);

/// Matrix of right multiplication by a_j: entry (k, i) is gamma(i, j, k).
RationalMatrix basis_right_action(const PBAlgebra& alg, std::size_t j);

template <typename Scalar>
Vector<Scalar> basis_vector(const PBAlgebra& alg, std::size_t i) {
  if (i >= alg.dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i));
  Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(alg.dim()));
  v(static_cast<Eigen::Index>(i)) = Scalar(1);
  return v;
}

namespace detail {
inline void check_length(const PBAlgebra& alg, Eigen::Index len, const char* what) {
  if (static_cast<std::size_t>(len) != alg.dim())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(len) +
                    ", algebra has dimension " + std::to_string(alg.dim()));
}
}  // namespace detail

/// Bilinear extension of the structure constants.
template <typename Scalar>
Vector<Scalar> multiply(const PBAlgebra& alg, const Vector<Scalar>& x, const Vector<Scalar>& y) {
  detail::check_length(alg, x.size(), "left factor");
  detail::check_length(alg, y.size(), "right factor");
  Vector<Scalar> z = Vector<Scalar>::Zero(x.size());
  for (const auto& c : alg.constants()) {
    const auto i = static_cast<Eigen::Index>(c.i);
    const auto j = static_cast<Eigen::Index>(c.j);
    if (x(i) == Scalar(0) || y(j) == Scalar(0)) continue;
    z(static_cast<Eigen::Index>(c.k)) += x(i) * y(j) * scalar_cast<Scalar>(c.value);
  }
  return z;
}

/// Matrix of left multiplication by x on the regular module; column j is x * a_j.
template <typename Scalar>
Matrix<Scalar> action_matrix(const PBAlgebra& alg, const Vector<Scalar>& x) {
  detail::check_length(alg, x.size(), "element");
  const auto n = static_cast<Eigen::Index>(alg.dim());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (const auto& c : alg.constants()) {
    const auto i = static_cast<Eigen::Index>(c.i);
    if (x(i) == Scalar(0)) continue;
    m(static_cast<Eigen::Index>(c.k), static_cast<Eigen::Index>(c.j)) +=
        x(i) * scalar_cast<Scalar>(c.value);
  }
  return m;
}

}  // namespace pba
