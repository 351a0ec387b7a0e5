#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace pba {

/// Exact arbitrary-precision rational. Expression templates are off so the
/// type behaves as a plain value inside Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Throws Error(ParseError) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd 1.
std::string format_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

template <typename Derived>
Matrix<double> to_double(const Eigen::MatrixBase<Derived>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = to_double(m(r, c));
  return out;
}

// Lets templated code convert a Rational coefficient into the working scalar.
template <typename Scalar>
Scalar scalar_cast(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return q;
  } else {
    return static_cast<Scalar>(to_double(q));
  }
}

}  // namespace pba
