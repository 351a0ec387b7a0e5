#include "pba/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace pba {

namespace {

struct Eigenpair {
  double lambda;
  Vector<double> vec;
  std::size_t iterations;
};

Eigenpair power_iteration(const Matrix<double>& m, const Tolerances& tol) {
  const auto n = m.rows();
  Vector<double> v = Vector<double>::Constant(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 1; it <= tol.max_iterations; ++it) {
    const Vector<double> w = m * v;
    const double lambda = v.dot(w) / v.squaredNorm();
    const double residual = (w - lambda * v).cwiseAbs().maxCoeff();
    const double mass = w.cwiseAbs().sum();
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw Error(ErrorKind::NoConvergence, "power iteration collapsed to zero");
    if (residual <= tol.pf_residual * std::abs(lambda)) return {lambda, v, it};
    v = w / mass;
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration did not converge in " + std::to_string(tol.max_iterations) + " steps");
}

PFData finish(const Matrix<double>& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "PF data needs a nonempty square matrix");
  const auto right = power_iteration(m, tol);
  const Matrix<double> mt = m.transpose();
  const auto left = power_iteration(mt, tol);
  PFData pf;
  pf.lambda = right.lambda;
  pf.v = right.vec / right.vec.sum();
  pf.v_hat = left.vec / left.vec.dot(pf.v);
  pf.projector = pf.v * pf.v_hat.transpose();
  pf.residual_right = (m * pf.v - pf.lambda * pf.v).cwiseAbs().maxCoeff();
  pf.residual_left = (mt * pf.v_hat - pf.lambda * pf.v_hat).cwiseAbs().maxCoeff();
  pf.iterations = right.iterations + left.iterations;
  return pf;
}

}  // namespace

RationalVector pf_element(const PBAlgebra& alg, const RationalVector& c) {
  detail::check_length(alg, c.size(), "coefficient vector");
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c(i) <= 0)
      throw Error(ErrorKind::NonPositiveCoefficient,
                  "c_" + std::to_string(i) + " = " + format_rational(c(i)) + " is not positive");
  return c;
}

RationalMatrix pf_action(const PBAlgebra& alg, const BasedModule& m, const RationalVector& c) {
  const RationalMatrix a = module_action<Rational>(m, pf_element(alg, c));
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index col = 0; col < a.cols(); ++col)
      if (a(r, col) <= 0)
        throw Error(ErrorKind::NotPerronFrobenius,
                    "a(c) has a zero entry at (" + std::to_string(r) + ", " + std::to_string(col) +
                        "); the module is not transitive");
  return a;
}

PFData pf_eigendata(const Matrix<double>& m, const Tolerances& tol) {
  if ((m.array() <= 0.0).any() || !m.allFinite())
    throw Error(ErrorKind::NotPositiveMatrix, "matrix has an entry that is not strictly positive");
  return finish(m, tol);
}

PFData pf_eigendata(const RationalMatrix& m, const Tolerances& tol) {
  if ((m.array() <= Rational(0)).any())
    throw Error(ErrorKind::NotPositiveMatrix, "matrix has an entry that is not strictly positive");
  return finish(to_double(m), tol);
}

PFData dominant_eigendata(const Matrix<double>& m, const Tolerances& tol) {
  if ((m.array() < 0.0).any())
    throw Error(ErrorKind::NotPositiveMatrix, "matrix has a negative entry");
  return finish(m, tol);
}

Matrix<double> pf_projector(const Matrix<double>& m, const PFData& pf, ProjectorMode mode,
                            const Tolerances& tol) {
  if (mode == ProjectorMode::Outer) return pf.v * pf.v_hat.transpose();
  Matrix<double> p = m / pf.lambda;
  for (int step = 0; step < 200; ++step) {
    Matrix<double> next = p * p;
    const double trace = next.trace();
    if (!(trace > 0.0) || !std::isfinite(trace))
      throw Error(ErrorKind::NoConvergence, "limit projector lost its trace");
    next /= trace;
    const double diff = (next - p).cwiseAbs().maxCoeff();
    p = std::move(next);
    if (diff <= tol.projector * std::max(1.0, p.cwiseAbs().maxCoeff())) return p;
  }
  throw Error(ErrorKind::NoConvergence, "limit projector did not settle");
}

IdempotentData cell_idempotent(const PBAlgebra& alg, const CellDecomposition& cd,
                               std::size_t two_sided_cell, std::size_t left_cell,
                               const Tolerances& tol) {
  if (two_sided_cell >= cd.two_sided.size())
    throw Error(ErrorKind::UnknownCellId, "two-sided cell " + std::to_string(two_sided_cell));
  if (left_cell >= cd.left.size())
    throw Error(ErrorKind::UnknownCellId, "left cell " + std::to_string(left_cell));
  if (!is_idempotent_cell(alg, cd, two_sided_cell))
    throw Error(ErrorKind::NotIdempotentCell,
                "two-sided cell " + std::to_string(two_sided_cell) + " is not idempotent");
  if (cd.two_sided_of_left(left_cell) != two_sided_cell)
    throw Error(ErrorKind::PreconditionViolated, "left cell " + std::to_string(left_cell) +
                                                     " is not inside two-sided cell " +
                                                     std::to_string(two_sided_cell));

  IdempotentData out;
  out.two_sided_cell = two_sided_cell;
  out.left_cell = left_cell;
  out.indices = cd.two_sided.cells[two_sided_cell];
  const auto q = quotient_algebra(alg, cd, two_sided_cell);
  const auto nq = static_cast<Eigen::Index>(q.algebra.dim());

  // a = sum of J; its action on C_L gives lambda.
  RationalVector a_full = RationalVector::Zero(static_cast<Eigen::Index>(alg.dim()));
  for (auto j : out.indices) a_full(static_cast<Eigen::Index>(j)) = 1;
  const auto cl = cell_module(alg, cd, left_cell);
  out.lambda = dominant_eigendata(to_double(module_action<Rational>(cl, a_full)), tol).lambda;
  if (!(out.lambda > 0.0))
    throw Error(ErrorKind::InvariantViolated, "a acts nilpotently on C_L");

  std::vector<Eigen::Index> in_j;  // positions of J inside A_J
  Vector<double> x = Vector<double>::Zero(nq);
  for (Eigen::Index p = 0; p < nq; ++p)
    if (cd.two_sided.cell_of[q.indices[static_cast<std::size_t>(p)]] == two_sided_cell) {
      in_j.push_back(p);
      x(p) = 1.0 / out.lambda;
    }

  // x -> x^2 / s^2 with s = sum(x^2) / sum(x): exact fixed point at e, and a
  // rescaling of a^(2^k) / lambda^(2^k) otherwise.
  bool converged = false;
  for (std::size_t step = 0; step < 200 && !converged; ++step) {
    const Vector<double> y = multiply<double>(q.algebra, x, x);
    const double s = y.sum() / x.sum();
    if (!(s > 0.0) || !std::isfinite(s))
      throw Error(ErrorKind::NoConvergence, "idempotent iteration degenerated");
    const Vector<double> next = y / (s * s);
    const double diff = (next - x).cwiseAbs().maxCoeff();
    x = next;
    out.squarings = step + 1;
    converged = diff <= tol.pf_residual * std::max(1.0, x.cwiseAbs().maxCoeff());
  }
  if (!converged) throw Error(ErrorKind::NoConvergence, "cell idempotent did not settle");

  out.residual = (multiply<double>(q.algebra, x, x) - x).cwiseAbs().maxCoeff();
  out.coefficients.resize(static_cast<Eigen::Index>(in_j.size()));
  double outside = 0.0;
  for (Eigen::Index p = 0; p < nq; ++p)
    if (std::find(in_j.begin(), in_j.end(), p) == in_j.end()) outside = std::max(outside, std::abs(x(p)));
  for (std::size_t t = 0; t < in_j.size(); ++t) out.coefficients(static_cast<Eigen::Index>(t)) = x(in_j[t]);
  out.positivity_margin = out.coefficients.minCoeff() / out.coefficients.cwiseAbs().sum();

  if (outside > tol.idempotent)
    throw Error(ErrorKind::InvariantViolated, "the limit leaves the span of the cell");
  if (out.residual >= tol.idempotent)
    throw Error(ErrorKind::InvariantViolated,
                "e^2 - e has max-norm " + std::to_string(out.residual));
  if (out.positivity_margin <= tol.positivity)
    throw Error(ErrorKind::PositivityFailure,
                "idempotent coefficient margin " + std::to_string(out.positivity_margin));
  return out;
}

}  // namespace pba
