#include "pba/module.hpp"

namespace pba {

std::vector<ModuleViolation> check_module(const PBAlgebra& alg, const BasedModule& m) {
  using Kind = ModuleViolation::Kind;
  std::vector<ModuleViolation> out;
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (m.actions.size() != alg.dim()) {
    out.push_back({Kind::Shape, m.actions.size(), alg.dim()});
    return out;
  }
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (m.actions[i].rows() != d || m.actions[i].cols() != d) out.push_back({Kind::Shape, i, 0});
  if (!out.empty()) return out;

  if (m.actions[alg.unit_index()] != RationalMatrix::Identity(d, d))
    out.push_back({Kind::Unit, alg.unit_index(), 0});
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if ((m.actions[i].array() < Rational(0)).any()) out.push_back({Kind::Negative, i, 0});

  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      RationalMatrix rhs = RationalMatrix::Zero(d, d);
      for (const auto& t : alg.product(i, j)) rhs += t.coeff * m.actions[t.index];
      if (m.actions[i] * m.actions[j] != rhs) out.push_back({Kind::Compatibility, i, j});
    }
  return out;
}

BasedModule regular_module(const PBAlgebra& alg) {
  BasedModule m;
  m.labels = alg.labels();
  for (std::size_t i = 0; i < alg.dim(); ++i) m.actions.push_back(basis_action(alg, i));
  return m;
}

BasedModule direct_sum(const BasedModule& a, const BasedModule& b) {
  if (a.actions.size() != b.actions.size())
    throw Error(ErrorKind::DimensionMismatch, "modules over different algebras");
  BasedModule out;
  for (const auto& l : a.labels) out.labels.push_back("1:" + l);
  for (const auto& l : b.labels) out.labels.push_back("2:" + l);
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  for (std::size_t i = 0; i < a.actions.size(); ++i) {
    RationalMatrix m = RationalMatrix::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.actions[i];
    m.bottomRightCorner(db, db) = b.actions[i];
    out.actions.push_back(std::move(m));
  }
  return out;
}

}  // namespace pba
