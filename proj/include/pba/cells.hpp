#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pba/algebra.hpp"

namespace pba {

enum class CellKind { Left, Right, TwoSided };

/// Cells of one kind. Order convention: c1 <= c2 when c2 can be reached
/// from c1 by multiplication, so the cell of the unit is the minimum.
struct CellFamily {
  std::vector<std::size_t> cell_of;                       // basis index -> cell id
  std::vector<std::vector<std::size_t>> cells;            // sorted members
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering pairs (lower, upper)
  std::vector<std::vector<bool>> reach;                   // reach[a][b] iff a <= b

  std::size_t size() const noexcept { return cells.size(); }
};

/// Ids are assigned in a topological order of the two-sided order, ties broken
/// by smallest member; left and right ids are ordered by (two-sided id,
/// smallest member) subject to their own order.
struct CellDecomposition {
  CellFamily left;
  CellFamily right;
  CellFamily two_sided;

  const CellFamily& family(CellKind kind) const;
  /// Left cells contained in two-sided cell j, ascending ids.
  std::vector<std::size_t> left_cells_in(std::size_t j) const;
  std::size_t two_sided_of_left(std::size_t l) const { return two_sided.cell_of[left.cells[l].front()]; }
};

/// Cells are the strongly connected components of the one-step graphs
/// i -> k for k in s*i (left), k in i*s (right), or either (two-sided).
CellDecomposition compute_cells(const PBAlgebra& alg);

/// Some k in i*j with i, j, k all in the cell.
bool is_idempotent_cell(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t j);

/// Reflexive reachability in the order on cells of the given kind.
bool cell_leq(const CellDecomposition& cd, CellKind kind, std::size_t c1, std::size_t c2);

/// j <=_J the two-sided cell `cell`, for a basis index j.
inline bool index_leq_cell(const CellDecomposition& cd, std::size_t j, std::size_t cell) {
  return cd.two_sided.reach[cd.two_sided.cell_of[j]][cell];
}

/// Left cells in two-sided cell j that are maximal for <=_L among those in j.
std::vector<std::size_t> maximal_left_cells_in(const CellDecomposition& cd, std::size_t j);
std::vector<std::size_t> minimal_left_cells_in(const CellDecomposition& cd, std::size_t j);

}  // namespace pba
