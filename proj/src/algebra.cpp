#include "pba/algebra.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace pba {

PBAlgebra::PBAlgebra(std::vector<std::string> labels, std::size_t unit_index,
                     std::vector<StructureConstant> gamma)
    : labels_(std::move(labels)), unit_(unit_index) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra must have dimension >= 1");
  if (unit_ >= n)
    throw Error(ErrorKind::IndexOutOfRange, "unit_index " + std::to_string(unit_) +
                                                " out of range for dimension " + std::to_string(n));
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
    throw Error(ErrorKind::ParseError, "basis labels must be distinct");

  for (const auto& c : gamma) {
    if (c.i >= n || c.j >= n || c.k >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "structure constant (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                      std::to_string(c.k) + ") out of range");
  }
  std::sort(gamma.begin(), gamma.end(), [](const auto& a, const auto& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  for (std::size_t t = 1; t < gamma.size(); ++t)
    if (std::tie(gamma[t].i, gamma[t].j, gamma[t].k) ==
        std::tie(gamma[t - 1].i, gamma[t - 1].j, gamma[t - 1].k))
      throw Error(ErrorKind::ParseError, "duplicate structure constant (" +
                                             std::to_string(gamma[t].i) + "," +
                                             std::to_string(gamma[t].j) + "," +
                                             std::to_string(gamma[t].k) + ")");
  for (auto& c : gamma)
    if (c.value != 0) constants_.push_back(std::move(c));

  offsets_.assign(n * n + 1, 0);
  for (const auto& c : constants_) ++offsets_[c.i * n + c.j + 1];
  for (std::size_t p = 1; p < offsets_.size(); ++p) offsets_[p] += offsets_[p - 1];
  terms_.reserve(constants_.size());
  for (const auto& c : constants_) terms_.push_back({c.k, c.value});
}

std::span<const Term> PBAlgebra::product(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  const std::size_t p = i * n + j;
  return {terms_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]};
}

Rational PBAlgebra::gamma(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return Rational(0);
}

namespace {

// Dense accumulator that remembers which slots it touched.
class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t n) : values_(n), touched_(n, false) {}

  void add(std::size_t k, const Rational& v) {
    if (!touched_[k]) {
      touched_[k] = true;
      order_.push_back(k);
    }
    values_[k] += v;
  }

  /// Nonzero entries, sorted, then resets.
  std::vector<Term> take() {
    std::sort(order_.begin(), order_.end());
    std::vector<Term> out;
    for (auto k : order_) {
      if (values_[k] != 0) out.push_back({k, values_[k]});
      values_[k] = 0;
      touched_[k] = false;
    }
    order_.clear();
    return out;
  }

 private:
  std::vector<Rational> values_;
  std::vector<bool> touched_;
  std::vector<std::size_t> order_;
};

bool same_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t].index != b[t].index || a[t].coeff != b[t].coeff) return false;
  return true;
}

}  // namespace

ValidationReport validate(const PBAlgebra& alg, const ValidateOptions& options) {
  const std::size_t n = alg.dim();
  if (n > options.max_dim)
    throw Error(ErrorKind::SizeCapExceeded, "dimension " + std::to_string(n) +
                                                " exceeds validation cap " +
                                                std::to_string(options.max_dim));
  ValidationReport report;
  for (const auto& c : alg.constants())
    if (c.value < 0)
      report.violations.push_back({ErrorKind::NegativeConstant, {c.i, c.j, c.k},
                                   "gamma = " + format_rational(c.value)});

  const std::size_t u = alg.unit_index();
  const auto is_basis_element = [](std::span<const Term> terms, std::size_t i) {
    return terms.size() == 1 && terms[0].index == i && terms[0].coeff == 1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_basis_element(alg.product(u, i), i))
      report.violations.push_back({ErrorKind::UnitAxiomFailed, {i, 0, 0}, "left"});
    if (!is_basis_element(alg.product(i, u), i))
      report.violations.push_back({ErrorKind::UnitAxiomFailed, {i, 0, 0}, "right"});
  }

  SparseAccumulator acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& p : ij)
          for (const auto& q : alg.product(p.index, k)) acc.add(q.index, p.coeff * q.coeff);
        const auto lhs = acc.take();
        for (const auto& p : alg.product(j, k))
          for (const auto& q : alg.product(i, p.index)) acc.add(q.index, p.coeff * q.coeff);
        const auto rhs = acc.take();
        if (!same_terms(lhs, rhs))
          report.violations.push_back({ErrorKind::AssociativityFailed, {i, j, k}, ""});
      }
    }
  }
  return report;
}

std::vector<std::size_t> star(const PBAlgebra& alg, std::size_t i, std::size_t j) {
  std::vector<std::size_t> out;
  for (const auto& t : alg.product(i, j))
    if (t.coeff > 0) out.push_back(t.index);
  return out;
}

RationalMatrix basis_action(const PBAlgebra& alg, std::size_t i) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (std::size_t j = 0; j < alg.dim(); ++j)
    for (const auto& t : alg.product(i, j))
      m(static_cast<Eigen::Index>(t.index), static_cast<Eigen::Index>(j)) = t.coeff;
  return m;
}

RationalMatrix basis_right_action(const PBAlgebra& alg, std::size_t j) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (const auto& t : alg.product(i, j))
      m(static_cast<Eigen::Index>(t.index), static_cast<Eigen::Index>(i)) = t.coeff;
  return m;
}

}  // namespace pba
