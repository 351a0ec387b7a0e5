#include "pba/structure.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "pba/linalg.hpp"

namespace pba {

namespace {

/// Exact span membership by reduction against a reduced row echelon basis.
class ExactSpan {
 public:
  explicit ExactSpan(const RationalMatrix& columns) {
    if (columns.cols() == 0) return;
    auto ech = linalg::row_echelon<Rational>(columns.transpose());
    pivots_ = ech.pivot_cols;
    rows_ = ech.reduced.topRows(static_cast<Eigen::Index>(pivots_.size()));
  }

  bool contains(const RationalVector& v) const {
    RationalVector rest = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational f = rest(pivots_[r]);
      if (f != 0) rest -= f * rows_.row(static_cast<Eigen::Index>(r)).transpose();
    }
    return rest.isZero();
  }

 private:
  std::vector<Eigen::Index> pivots_;
  RationalMatrix rows_;
};

RationalMatrix exact_span_of_products(const PBAlgebra& alg, const RationalMatrix& left,
                                      const RationalMatrix& right) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  RationalMatrix all(n, left.cols() * right.cols());
  Eigen::Index c = 0;
  for (Eigen::Index a = 0; a < left.cols(); ++a)
    for (Eigen::Index b = 0; b < right.cols(); ++b)
      all.col(c++) = multiply<Rational>(alg, RationalVector(left.col(a)), RationalVector(right.col(b)));
  return linalg::independent_columns<Rational>(all);
}

/// Closest rational with denominator at most max_den, by continued fractions.
Rational nearest_rational(double x, long max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return Rational(static_cast<long>(std::llround(x)));
  return Rational(p1) / Rational(q1);
}

}  // namespace

double character_distance(const SimpleCharacter& a, const SimpleCharacter& b) {
  if (a.dim != b.dim || a.traces.size() != b.traces.size())
    return std::numeric_limits<double>::infinity();
  if (a.traces.size() == 0) return 0.0;
  return (a.traces - b.traces).cwiseAbs().maxCoeff();
}

bool same_character(const SimpleCharacter& a, const SimpleCharacter& b, double tol) {
  return character_distance(a, b) < tol;
}

RationalMatrix trace_form(const PBAlgebra& alg) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  RationalVector t = RationalVector::Zero(n);
  for (const auto& c : alg.constants())
    if (c.j == c.k) t(static_cast<Eigen::Index>(c.i)) += c.value;
  RationalMatrix g = RationalMatrix::Zero(n, n);
  for (const auto& c : alg.constants())
    g(static_cast<Eigen::Index>(c.i), static_cast<Eigen::Index>(c.j)) +=
        c.value * t(static_cast<Eigen::Index>(c.k));
  return g;
}

Radical radical(const PBAlgebra& alg) {
  Radical rad;
  rad.basis = linalg::nullspace<Rational>(trace_form(alg));
  if (rad.basis.cols() == 0) return rad;

  const ExactSpan span(rad.basis);
  for (Eigen::Index c = 0; c < rad.basis.cols(); ++c) {
    const RationalVector r = rad.basis.col(c);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      const auto ai = basis_vector<Rational>(alg, i);
      if (!span.contains(multiply<Rational>(alg, ai, r)) ||
          !span.contains(multiply<Rational>(alg, r, ai)))
        throw Error(ErrorKind::InvariantViolated,
                    "trace-form kernel is not a two-sided ideal (basis element " + alg.label(i) + ")");
    }
  }

  RationalMatrix power = rad.basis;  // rad^k
  for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
    if (power.cols() == 0) {
      rad.nilpotency_index = k;
      return rad;
    }
    power = exact_span_of_products(alg, rad.basis, power);
  }
  throw Error(ErrorKind::InvariantViolated, "trace-form kernel is not nilpotent");
}

Matrix<double> generated_submodule(const BasedModule& m, const Vector<double>& v, double tol) {
  if (static_cast<std::size_t>(v.size()) != m.dim())
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match module");
  if (v.size() == 0 || v.cwiseAbs().maxCoeff() == 0.0)
    throw Error(ErrorKind::ZeroVector, "cannot generate a submodule from zero");
  std::vector<Matrix<double>> acts;
  std::vector<double> scale;
  for (const auto& a : m.actions) {
    acts.push_back(to_double(a));
    scale.push_back(acts.back().cwiseAbs().maxCoeff());
  }
  Matrix<double> q(v.size(), 0);
  linalg::extend_orthonormal(q, v, tol);
  std::deque<Eigen::Index> pending{0};
  while (!pending.empty()) {
    const Vector<double> x = q.col(pending.front());
    pending.pop_front();
    for (std::size_t i = 0; i < acts.size(); ++i) {
      if (scale[i] == 0.0) continue;
      const Vector<double> w = acts[i] * x;
      if (w.norm() <= tol * scale[i]) continue;
      if (linalg::extend_orthonormal(q, w, tol)) pending.push_back(q.cols() - 1);
    }
  }
  return q;
}

ModuleTop module_top(const BasedModule& m, const Radical& rad, const Matrix<double>& space,
                     double tol, std::string source) {
  if (static_cast<std::size_t>(space.rows()) != m.dim())
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the module");
  ModuleTop top;
  top.space = space;
  top.radical = Matrix<double>(space.rows(), 0);
  for (Eigen::Index c = 0; c < rad.basis.cols(); ++c) {
    const Matrix<double> r = module_action<double>(m, to_double(RationalVector(rad.basis.col(c))));
    const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
    for (Eigen::Index s = 0; s < space.cols(); ++s) {
      const Vector<double> w = r * space.col(s);
      if (w.norm() > tol * scale) linalg::extend_orthonormal(top.radical, w, tol);
    }
  }
  top.quotient = linalg::complement_within(space, top.radical, tol);
  if (top.quotient.cols() == 0)
    throw Error(ErrorKind::ZeroQuotient, "rad(A) V = V" + (source.empty() ? "" : " for " + source));
  const auto n = static_cast<Eigen::Index>(m.actions.size());
  top.character.traces.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    top.actions.push_back(top.quotient.transpose() * to_double(m.actions[static_cast<std::size_t>(i)]) *
                          top.quotient);
    top.character.traces(i) = top.actions.back().trace();
  }
  top.character.dim = top.dim();
  top.character.source = std::move(source);
  return top;
}

bool kernel_cone_check(const Matrix<double>& kernel, double eps) {
  const Eigen::Index m = kernel.rows();
  if (kernel.cols() == 0) return true;
  const Matrix<double> q = linalg::orthonormal_basis(kernel, 1e-12);
  const Matrix<double> perp =
      linalg::complement_within(Matrix<double>::Identity(m, m), q, 1e-12);
  // z = x + eps >= 0, x in span(kernel), sum x = 1.
  Matrix<double> a(perp.cols() + 1, m);
  Vector<double> b(perp.cols() + 1);
  a.topRows(perp.cols()) = perp.transpose();
  b.head(perp.cols()) = eps * perp.transpose() * Vector<double>::Ones(m);
  a.row(perp.cols()).setOnes();
  b(perp.cols()) = 1.0 + static_cast<double>(m) * eps;
  return !linalg::nonnegative_solution_exists<double>(a, b, 1e-12);
}

bool kernel_cone_check(const RationalMatrix& kernel) {
  const Eigen::Index m = kernel.rows();
  if (kernel.cols() == 0) return true;
  const RationalMatrix perp = linalg::nullspace<Rational>(RationalMatrix(kernel.transpose()));
  RationalMatrix a(perp.cols() + 1, m);
  RationalVector b = RationalVector::Zero(perp.cols() + 1);
  a.topRows(perp.cols()) = perp.transpose();
  a.row(perp.cols()).setConstant(Rational(1));
  b(perp.cols()) = 1;
  return !linalg::nonnegative_solution_exists<Rational>(a, b);
}

std::optional<RationalMatrix> rationalize_subspace(const Matrix<double>& q, double tol) {
  if (q.cols() == 0) return RationalMatrix(q.rows(), 0);
  const auto ech = linalg::row_echelon<double>(q.transpose(), tol);
  if (ech.pivot_cols.size() != static_cast<std::size_t>(q.cols())) return std::nullopt;
  RationalMatrix out(q.rows(), q.cols());
  for (Eigen::Index r = 0; r < q.cols(); ++r)
    for (Eigen::Index c = 0; c < q.rows(); ++c) {
      const double x = ech.reduced(r, c);
      const Rational p = nearest_rational(x, 1000);
      if (std::abs(to_double(p) - x) > tol) return std::nullopt;
      out(c, r) = p;
    }
  return out;
}

double character_pairing(const RationalMatrix& gram, const Vector<double>& chi,
                         const Vector<double>& psi) {
  if (linalg::rank<Rational>(gram) != gram.rows())
    throw Error(ErrorKind::PreconditionViolated, "character pairing needs a semisimple algebra");
  const auto n = gram.rows();
  RationalMatrix aug(n, 2 * n);
  aug << gram, RationalMatrix::Identity(n, n);
  const auto ech = linalg::row_echelon<Rational>(aug);
  const Matrix<double> inv = to_double(RationalMatrix(ech.reduced.rightCols(n)));
  return chi.dot(inv * psi);
}

}  // namespace pba
