#pragma once

// Modules built out of the cell structure: cell modules C_L, the quotient
// algebras A_J, intertwiners between cell modules of one two-sided cell,
// the subquotient on a two-sided cell, and the coinvariant module Delta for
// monoid algebras.

#include <cstddef>
#include <vector>

#include "pba/cells.hpp"
#include "pba/module.hpp"

namespace pba {

/// Indices reachable from the left cell by left multiplication (M_L), and
/// the same set without the cell itself (N_L).
std::vector<std::size_t> upper_left_set(const CellDecomposition& cd, std::size_t left_cell);
std::vector<std::size_t> strict_upper_left_set(const CellDecomposition& cd, std::size_t left_cell);

/// True iff span{a_k : k in indices} is stable under left multiplication by
/// every a_i (exact support check).
bool is_left_ideal_span(const PBAlgebra& alg, const std::vector<std::size_t>& indices);

/// Subquotient of the regular module on the given basis indices: a_i acts by
/// entry (k, j) = gamma(i, j, k) for j, k in `basis`. Labels are the algebra's.
BasedModule subquotient_module(const PBAlgebra& alg, const std::vector<std::size_t>& basis);

/// C_L = M_L / N_L with basis indexed by L.
BasedModule cell_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t left_cell);

/// The support graph (union over all a_i) is strongly connected.
bool is_transitive(const BasedModule& m);

struct QuotientAlgebra {
  PBAlgebra algebra;
  std::vector<std::size_t> indices;  // position in the quotient -> index in the parent
};

/// A_J: the span of {a_j : j <=_J J} with the structure constants truncated.
QuotientAlgebra quotient_algebra(const PBAlgebra& alg, const CellDecomposition& cd,
                                 std::size_t two_sided_cell);

struct CellMorphism {
  std::size_t source;   // left cell L
  std::size_t target;   // left cell L'
  std::size_t witness;  // basis index j used for right multiplication
  RationalMatrix matrix;  // |L'| x |L|, entry (k', i) = gamma(i, j, k')
};

/// Right multiplication by the first index j with (i * j) meeting L' for
/// some i in L, followed by projection onto C_{L'}. The result is checked
/// to intertwine the two actions exactly.
CellMorphism cell_morphism(const PBAlgebra& alg, const CellDecomposition& cd,
                           std::size_t source, std::size_t target);

/// M(I): the subquotient on the basis elements of the two-sided cell I.
BasedModule mj_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t two_sided_cell);

struct DeltaModule {
  BasedModule module;
  std::size_t idempotent;                 // e
  std::size_t left_cell;                  // L_e
  std::vector<std::size_t> group;         // H-class of e
  std::vector<std::vector<std::size_t>> orbits;  // basis of the quotient, as subsets of L_e
};

/// For an algebra whose structure constants form a monoid table and an
/// idempotent e: C_{L_e} modulo the right action of the H-class of e.
DeltaModule delta_module(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t e);

}  // namespace pba
