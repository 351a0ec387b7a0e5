#pragma once

// Finite Weyl groups from Cartan matrices, their Kazhdan-Lusztig bases in
// Soergel's normalisation (H_s^2 = (v^-1 - v) H_s + 1, KL element of s is
// H_s + v), and the group algebra Q[W] written in the KL basis at v = 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pba/algebra.hpp"
#include "pba/laurent.hpp"

namespace pba {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Cartan matrix of a named finite type: A1-A4, B2-B4, C2-C4, D4, F4, G2.
/// Convention: entry (i,j) is <alpha_i^vee, alpha_j>.
IntMatrix cartan_matrix(std::string_view type);

struct WeylGroup {
  IntMatrix cartan;
  /// Elements as matrices on the root lattice (columns = images of simple
  /// roots), in breadth-first order from the identity, hence by length.
  std::vector<IntMatrix> elements;
  std::vector<std::string> words;  // reduced words, "e" for the identity
  std::vector<std::size_t> lengths;
  std::vector<std::uint32_t> left_descents;   // bit s set iff l(s w) < l(w)
  std::vector<std::uint32_t> right_descents;  // bit s set iff l(w s) < l(w)
  std::vector<std::vector<std::size_t>> left_mult;   // [s][w] -> s w
  std::vector<std::vector<std::size_t>> right_mult;  // [s][w] -> w s
  std::vector<std::size_t> inverse;

  std::size_t rank() const noexcept { return static_cast<std::size_t>(cartan.rows()); }
  std::size_t order() const noexcept { return elements.size(); }
  std::size_t longest() const noexcept { return elements.size() - 1; }
  /// Product of two arbitrary elements, by walking the reduced word of y.
  std::size_t multiply(std::size_t x, std::size_t y) const;
};

struct WeylOptions {
  std::size_t max_order = 400;
  std::size_t max_rank = 4;
};

/// Enumerates W by closure under simple reflections. Throws NotFiniteType when
/// the closure passes 1200 elements, SizeCapExceeded past options.max_order,
/// RankCapExceeded past options.max_rank.
WeylGroup enumerate_weyl(const IntMatrix& cartan, const WeylOptions& options = {});

struct KLBasisData {
  /// h[w][x] = h_{x,w}; the KL element of w is sum_x h_{x,w} H_x.
  std::vector<std::vector<LaurentPoly>> h;

  const LaurentPoly& coefficient(std::size_t x, std::size_t w) const { return h[w][x]; }
  /// Coefficient of v in h_{x,w}.
  Rational mu(std::size_t x, std::size_t w) const { return h[w][x].coefficient(1); }
};

/// Inductive construction: for a left descent s of w,
/// KL(s) KL(sw) = KL(w) + sum_{y : sy < y} mu(y, sw) KL(y).
/// Throws PositivityViolation if a coefficient leaves N[v] or the
/// normalisation h_{x,w} in vZ[v] (x != w) fails.
KLBasisData kl_basis(const WeylGroup& w);

/// Structure constants of the KL basis specialised at v = 1. Labels are
/// reduced words; the unit is the identity. Throws NegativeSpecialization.
PBAlgebra kl_algebra(const WeylGroup& w, const KLBasisData& kl);

}  // namespace pba
