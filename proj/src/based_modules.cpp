#include "pba/based_modules.hpp"

#include <algorithm>
#include <map>

#include "pba/constructors.hpp"

namespace pba {

namespace {

void require_left_cell(const CellDecomposition& cd, std::size_t l) {
  if (l >= cd.left.size())
    throw Error(ErrorKind::UnknownCellId,
                "left cell " + std::to_string(l) + " of " + std::to_string(cd.left.size()));
}

void require_two_sided_cell(const CellDecomposition& cd, std::size_t j) {
  if (j >= cd.two_sided.size())
    throw Error(ErrorKind::UnknownCellId, "two-sided cell " + std::to_string(j) + " of " +
                                              std::to_string(cd.two_sided.size()));
}

std::vector<std::vector<bool>> support_graph(const BasedModule& m) {
  const auto d = m.dim();
  std::vector<std::vector<bool>> adj(d, std::vector<bool>(d, false));
  for (const auto& a : m.actions)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (a(r, c) != 0) adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = true;
  return adj;
}

std::vector<bool> reachable_from(const std::vector<std::vector<bool>>& adj, std::size_t src) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{src};
  seen[src] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < adj.size(); ++w)
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

std::vector<std::size_t> upper_left_set(const CellDecomposition& cd, std::size_t left_cell) {
  require_left_cell(cd, left_cell);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cd.left.cell_of.size(); ++i)
    if (cd.left.reach[left_cell][cd.left.cell_of[i]]) out.push_back(i);
  return out;
}

std::vector<std::size_t> strict_upper_left_set(const CellDecomposition& cd, std::size_t left_cell) {
  auto out = upper_left_set(cd, left_cell);
  std::erase_if(out, [&](std::size_t i) { return cd.left.cell_of[i] == left_cell; });
  return out;
}

bool is_left_ideal_span(const PBAlgebra& alg, const std::vector<std::size_t>& indices) {
  std::vector<bool> inside(alg.dim(), false);
  for (auto k : indices) inside.at(k) = true;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (auto j : indices)
      for (const auto& t : alg.product(i, j))
        if (!inside[t.index]) return false;
  return true;
}

BasedModule subquotient_module(const PBAlgebra& alg, const std::vector<std::size_t>& basis) {
  std::vector<std::ptrdiff_t> position(alg.dim(), -1);
  for (std::size_t p = 0; p < basis.size(); ++p) position.at(basis[p]) = static_cast<std::ptrdiff_t>(p);
  const auto d = static_cast<Eigen::Index>(basis.size());
  BasedModule m;
  for (auto b : basis) m.labels.push_back(alg.label(b));
  m.actions.assign(alg.dim(), RationalMatrix::Zero(d, d));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t col = 0; col < basis.size(); ++col)
      for (const auto& t : alg.product(i, basis[col]))
        if (position[t.index] >= 0)
          m.actions[i](position[t.index], static_cast<Eigen::Index>(col)) = t.coeff;
  return m;
}

BasedModule cell_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t left_cell) {
  require_left_cell(cd, left_cell);
  return subquotient_module(alg, cd.left.cells[left_cell]);
}

bool is_transitive(const BasedModule& m) {
  if (m.dim() == 0) return false;
  const auto adj = support_graph(m);
  for (std::size_t v = 0; v < m.dim(); ++v) {
    const auto seen = reachable_from(adj, v);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

QuotientAlgebra quotient_algebra(const PBAlgebra& alg, const CellDecomposition& cd,
                                 std::size_t two_sided_cell) {
  require_two_sided_cell(cd, two_sided_cell);
  std::vector<std::size_t> indices;
  std::vector<std::ptrdiff_t> position(alg.dim(), -1);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (index_leq_cell(cd, i, two_sided_cell)) {
      position[i] = static_cast<std::ptrdiff_t>(indices.size());
      indices.push_back(i);
    }
  std::vector<std::string> labels;
  for (auto i : indices) labels.push_back(alg.label(i));
  std::vector<StructureConstant> gamma;
  for (const auto& c : alg.constants())
    if (position[c.i] >= 0 && position[c.j] >= 0 && position[c.k] >= 0)
      gamma.push_back({static_cast<std::size_t>(position[c.i]), static_cast<std::size_t>(position[c.j]),
                       static_cast<std::size_t>(position[c.k]), c.value});
  // The unit's cell is the minimum, so it always survives.
  PBAlgebra q(std::move(labels), static_cast<std::size_t>(position[alg.unit_index()]),
              std::move(gamma));
  return {std::move(q), std::move(indices)};
}

CellMorphism cell_morphism(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t source,
                           std::size_t target) {
  require_left_cell(cd, source);
  require_left_cell(cd, target);
  if (cd.two_sided_of_left(source) != cd.two_sided_of_left(target))
    throw Error(ErrorKind::PreconditionViolated, "left cells lie in different two-sided cells");
  const auto minimal = minimal_left_cells_in(cd, cd.two_sided_of_left(target));
  if (std::find(minimal.begin(), minimal.end(), target) == minimal.end())
    throw Error(ErrorKind::PreconditionViolated,
                "target left cell " + std::to_string(target) + " is not minimal in its two-sided cell");

  const auto& from = cd.left.cells[source];
  const auto& to = cd.left.cells[target];
  std::vector<std::ptrdiff_t> position(alg.dim(), -1);
  for (std::size_t p = 0; p < to.size(); ++p) position[to[p]] = static_cast<std::ptrdiff_t>(p);

  for (std::size_t j = 0; j < alg.dim(); ++j) {
    bool hit = false;
    for (auto i : from) {
      for (const auto& t : alg.product(i, j))
        if (position[t.index] >= 0) hit = true;
      if (hit) break;
    }
    if (!hit) continue;

    CellMorphism phi{source, target, j,
                     RationalMatrix::Zero(static_cast<Eigen::Index>(to.size()),
                                          static_cast<Eigen::Index>(from.size()))};
    for (std::size_t col = 0; col < from.size(); ++col)
      for (const auto& t : alg.product(from[col], j))
        if (position[t.index] >= 0) phi.matrix(position[t.index], static_cast<Eigen::Index>(col)) = t.coeff;

    const auto m_from = cell_module(alg, cd, source);
    const auto m_to = cell_module(alg, cd, target);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (phi.matrix * m_from.actions[i] != m_to.actions[i] * phi.matrix)
        throw Error(ErrorKind::InvariantViolated,
                    "right multiplication by " + alg.label(j) + " does not intertwine the action of " +
                        alg.label(i));
    return phi;
  }
  throw Error(ErrorKind::NoWitness, "no j with (L * j) meeting left cell " + std::to_string(target));
}

BasedModule mj_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t two_sided_cell) {
  require_two_sided_cell(cd, two_sided_cell);
  return subquotient_module(alg, cd.two_sided.cells[two_sided_cell]);
}

DeltaModule delta_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t e) {
  const auto table = monoid_table_of(alg);
  if (!table) throw Error(ErrorKind::NotMonoidBacked, "structure constants are not a monoid table");
  if (e >= alg.dim()) throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(e));
  const auto& mul = table->table;
  if (mul[e][e] != e) throw Error(ErrorKind::NotIdempotent, alg.label(e) + " is not idempotent");

  DeltaModule out;
  out.idempotent = e;
  out.left_cell = cd.left.cell_of[e];
  const auto& cell = cd.left.cells[out.left_cell];
  for (std::size_t g = 0; g < alg.dim(); ++g)
    if (cd.left.cell_of[g] == out.left_cell && cd.right.cell_of[g] == cd.right.cell_of[e])
      out.group.push_back(g);

  std::map<std::size_t, std::size_t> orbit_of;
  for (auto x : cell) {
    if (orbit_of.count(x)) continue;
    std::vector<std::size_t> orbit;
    for (auto g : out.group) orbit.push_back(mul[x][g]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto y : orbit) {
      if (cd.left.cell_of[y] != out.left_cell)
        throw Error(ErrorKind::InvariantViolated, "right action of the H-class leaves L_e");
      orbit_of[y] = out.orbits.size();
    }
    out.orbits.push_back(std::move(orbit));
  }

  const auto d = static_cast<Eigen::Index>(out.orbits.size());
  for (const auto& o : out.orbits) {
    std::string label = "{";
    for (std::size_t p = 0; p < o.size(); ++p) label += (p ? "," : "") + alg.label(o[p]);
    out.module.labels.push_back(label + "}");
  }
  out.module.actions.assign(alg.dim(), RationalMatrix::Zero(d, d));
  for (std::size_t s = 0; s < alg.dim(); ++s)
    for (std::size_t o = 0; o < out.orbits.size(); ++o) {
      const auto image = mul[s][out.orbits[o].front()];
      if (cd.left.cell_of[image] == out.left_cell)
        out.module.actions[s](static_cast<Eigen::Index>(orbit_of.at(image)), static_cast<Eigen::Index>(o)) = 1;
    }
  return out;
}

}  // namespace pba
