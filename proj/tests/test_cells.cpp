#include <map>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "pba/cells.hpp"

namespace pba {

namespace {

std::set<std::set<std::size_t>> classes_of(std::size_t n, auto equiv) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    std::set<std::size_t> c;
    for (std::size_t y = 0; y < n; ++y)
      if (equiv(x, y)) c.insert(y);
    out.insert(c);
  }
  return out;
}

void check_structural_invariants(const PBAlgebra& alg, const CellDecomposition& cd) {
  const std::size_t n = alg.dim();
  for (auto kind : {CellKind::Left, CellKind::Right, CellKind::TwoSided}) {
    const auto& f = cd.family(kind);
    REQUIRE(f.cell_of[alg.unit_index()] == 0);
    std::size_t total = 0;
    for (std::size_t c = 0; c < f.size(); ++c) {
      total += f.cells[c].size();
      for (auto i : f.cells[c]) REQUIRE(f.cell_of[i] == c);
      REQUIRE(std::is_sorted(f.cells[c].begin(), f.cells[c].end()));
    }
    REQUIRE(total == n);
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b)
        if (f.reach[a][b] && f.reach[b][a]) REQUIRE(a == b);
        else if (f.reach[a][b]) REQUIRE(a < b);
    for (const auto& [lo, hi] : f.edges) REQUIRE(f.reach[lo][hi]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (cd.left.cell_of[i] == cd.left.cell_of[j] || cd.right.cell_of[i] == cd.right.cell_of[j])
        REQUIRE(cd.two_sided.cell_of[i] == cd.two_sided.cell_of[j]);
    }
}

void check_against_green(const CayleyTable& t) {
  const auto alg = from_cayley_table(t);
  const auto cd = compute_cells(alg);
  const testing::GreenOracle green(t);
  const std::size_t m = t.order();
  check_structural_invariants(alg, cd);
  REQUIRE(testing::as_blocks(cd.left.cells) ==
          classes_of(m, [&](auto x, auto y) { return green.l_equiv(x, y); }));
  REQUIRE(testing::as_blocks(cd.right.cells) ==
          classes_of(m, [&](auto x, auto y) { return green.r_equiv(x, y); }));
  REQUIRE(testing::as_blocks(cd.two_sided.cells) ==
          classes_of(m, [&](auto x, auto y) { return green.j_equiv(x, y); }));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      REQUIRE(cell_leq(cd, CellKind::Left, cd.left.cell_of[x], cd.left.cell_of[y]) ==
              green.left_leq(x, y));
      REQUIRE(cell_leq(cd, CellKind::Right, cd.right.cell_of[x], cd.right.cell_of[y]) ==
              green.right_leq(x, y));
      REQUIRE(cell_leq(cd, CellKind::TwoSided, cd.two_sided.cell_of[x],
                       cd.two_sided.cell_of[y]) == green.two_sided_leq(x, y));
    }
  // Finite monoids of transformations are regular: every J-class is idempotent.
  for (std::size_t j = 0; j < cd.two_sided.size(); ++j) REQUIRE(is_idempotent_cell(alg, cd, j));
}

}  // namespace

TEST_CASE("group algebras have one cell", "[cells]") {
  for (const auto& t : {testing::symmetric3_table(), testing::dihedral4_table()}) {
    const auto alg = from_cayley_table(t);
    const auto cd = compute_cells(alg);
    REQUIRE(cd.left.size() == 1);
    REQUIRE(cd.right.size() == 1);
    REQUIRE(cd.two_sided.size() == 1);
    REQUIRE(cd.two_sided.edges.empty());
    REQUIRE(is_idempotent_cell(alg, cd, 0));
  }
}

TEST_CASE("transformation monoids match Green's relations", "[cells]") {
  SECTION("T2") {
    const auto t = testing::t2_table();
    check_against_green(t);
    const auto cd = compute_cells(from_cayley_table(t));
    REQUIRE(cd.two_sided.size() == 2);
    // The two constants share one left cell.
    REQUIRE(cd.left.cells[1] == std::vector<std::size_t>{testing::index_of(t, "[0,0]"),
                                                         testing::index_of(t, "[1,1]")});
  }
  SECTION("T3") {
    check_against_green(testing::t3_table());
    const auto cd = compute_cells(from_cayley_table(testing::t3_table()));
    REQUIRE(cd.two_sided.size() == 3);
    REQUIRE(cd.two_sided.cells[0].size() == 6);
    REQUIRE(cd.two_sided.cells[1].size() == 18);
    REQUIRE(cd.two_sided.cells[2].size() == 3);
    REQUIRE(cd.left_cells_in(1).size() == 3);
    REQUIRE(cd.left_cells_in(2).size() == 1);
    // Within a J-class of a finite monoid, left cells are pairwise incomparable.
    REQUIRE(maximal_left_cells_in(cd, 1) == cd.left_cells_in(1));
    REQUIRE(minimal_left_cells_in(cd, 1) == cd.left_cells_in(1));
  }
}

TEST_CASE("KL cells in type A follow Robinson-Schensted", "[cells]") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> counts = {{"A2", {3, 4}},
                                                                             {"A3", {5, 10}}};
  for (const auto& [type, expected] : counts) {
    INFO(type);
    const std::size_t rank = static_cast<std::size_t>(type[1] - '0');
    const auto w = enumerate_weyl(cartan_matrix(type));
    const auto alg = kl_algebra(w, kl_basis(w));
    const auto cd = compute_cells(alg);
    check_structural_invariants(alg, cd);
    REQUIRE(cd.two_sided.size() == expected.first);
    REQUIRE(cd.left.size() == expected.second);
    REQUIRE(cd.right.size() == expected.second);

    const auto rs = [&](std::size_t i) { return testing::rsk(testing::permutation_of_word(w.words[i], rank)); };
    const auto by_p = testing::blocks_by(w.order(), [&](std::size_t i) { return rs(i).p; });
    const auto by_q = testing::blocks_by(w.order(), [&](std::size_t i) { return rs(i).q; });
    const auto by_shape = testing::blocks_by(w.order(), [&](std::size_t i) { return rs(i).shape(); });
    const auto left = testing::as_blocks(cd.left.cells);
    const auto right = testing::as_blocks(cd.right.cells);
    REQUIRE(((left == by_p && right == by_q) || (left == by_q && right == by_p)));
    REQUIRE(testing::as_blocks(cd.two_sided.cells) == by_shape);

    // The identity is alone at the bottom and w0 alone at the top.
    REQUIRE(cd.two_sided.cells.front() == std::vector<std::size_t>{0});
    REQUIRE(cd.two_sided.cells.back() == std::vector<std::size_t>{w.longest()});
    for (std::size_t j = 0; j < cd.two_sided.size(); ++j) REQUIRE(is_idempotent_cell(alg, cd, j));
  }
}

TEST_CASE("non-idempotent cells and id errors", "[cells]") {
  const auto alg = testing::dual_numbers();
  const auto cd = compute_cells(alg);
  REQUIRE(cd.two_sided.size() == 2);
  REQUIRE(is_idempotent_cell(alg, cd, 0));
  REQUIRE_FALSE(is_idempotent_cell(alg, cd, 1));
  REQUIRE(cell_leq(cd, CellKind::TwoSided, 0, 1));
  REQUIRE_FALSE(cell_leq(cd, CellKind::TwoSided, 1, 0));
  REQUIRE(cd.two_sided.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  REQUIRE_THROWS_AS(cell_leq(cd, CellKind::Left, 0, 7), Error);
  REQUIRE_THROWS_AS(is_idempotent_cell(alg, cd, 2), Error);
  REQUIRE_THROWS_AS(cd.left_cells_in(5), Error);
}

}  // namespace pba
