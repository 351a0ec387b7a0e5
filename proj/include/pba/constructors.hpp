#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pba/algebra.hpp"
#include "pba/module.hpp"

namespace pba {

/// A self-map of {0, ..., m-1}. Composition is (f * g)(x) = f(g(x)).
struct Transformation {
  std::vector<std::size_t> images;

  std::size_t degree() const noexcept { return images.size(); }
  static Transformation identity(std::size_t degree);
  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;
};

/// f * g, i.e. apply g first.
Transformation compose(const Transformation& f, const Transformation& g);

std::string to_label(const Transformation& t);

/// Multiplication table of a finite monoid: table[x][y] = x * y.
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const noexcept { return table.size(); }
};

/// Identity of the table. Throws NoIdentity, NotAssociative, or
/// DimensionMismatch / IndexOutOfRange for malformed tables.
std::size_t check_monoid_table(const CayleyTable& t);

/// True when every row and column is a permutation (t must be a monoid table).
bool is_group_table(const CayleyTable& t);

/// The monoid algebra in its standard basis: gamma(i,j,k) = 1 iff t[i][j] = k.
PBAlgebra from_cayley_table(const CayleyTable& t);

/// Recovers the multiplication table when every product of two basis
/// elements is a single basis element with coefficient 1.
std::optional<CayleyTable> monoid_table_of(const PBAlgebra& alg);

struct MonoidClosureOptions {
  std::size_t max_size = 1000;
};

/// Elements of the monoid generated by gens, identity first, then in
/// breadth-first discovery order over the lexicographically sorted generators.
std::vector<Transformation> enumerate_monoid(std::vector<Transformation> gens,
                                             const MonoidClosureOptions& options = {});

CayleyTable monoid_closure(const std::vector<Transformation>& gens,
                           const MonoidClosureOptions& options = {});

/// Permutation module of a group on the left cosets of a subgroup. Cosets are
/// ordered by their smallest member index.
BasedModule coset_module(const CayleyTable& group, const std::vector<std::size_t>& subgroup);

}  // namespace pba
