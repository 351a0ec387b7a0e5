#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "pba/based_modules.hpp"

namespace pba {

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no pba::Error thrown");
  return ErrorKind::InvariantViolated;
}

std::vector<PBAlgebra> corpus() {
  return {from_cayley_table(testing::cyclic2_table()),
          from_cayley_table(testing::symmetric3_table()),
          from_cayley_table(testing::dihedral4_table()),
          from_cayley_table(testing::t2_table()),
          from_cayley_table(testing::t3_table()),
          testing::kl_algebra_of("A2"),
          testing::kl_algebra_of("A3"),
          testing::dual_numbers()};
}

std::size_t middle_cell_of_a2(const CellDecomposition& cd) {
  for (std::size_t j = 0; j < cd.two_sided.size(); ++j)
    if (cd.two_sided.cells[j].size() == 4) return j;
  FAIL("no 4-element two-sided cell");
  return 0;
}

}  // namespace

TEST_CASE("cell modules of a group algebra are regular", "[based_modules]") {
  const auto alg = from_cayley_table(testing::symmetric3_table());
  const auto cd = compute_cells(alg);
  const auto m = cell_module(alg, cd, 0);
  const auto reg = regular_module(alg);
  REQUIRE(m.labels == reg.labels);
  for (std::size_t i = 0; i < alg.dim(); ++i) REQUIRE(m.actions[i] == reg.actions[i]);
}

TEST_CASE("cell module of the constants in T2", "[based_modules]") {
  const auto t = testing::t2_table();
  const auto alg = from_cayley_table(t);
  const auto cd = compute_cells(alg);
  const auto l = cd.left.cell_of[testing::index_of(t, "[0,0]")];
  const auto m = cell_module(alg, cd, l);
  REQUIRE(m.dim() == 2);
  REQUIRE(check_module(alg, m).empty());
  // Oracle: a_s sends the constant x to s o x, which is again a constant.
  const auto& members = cd.left.cells[l];
  for (std::size_t s = 0; s < t.order(); ++s)
    for (std::size_t col = 0; col < members.size(); ++col)
      for (std::size_t row = 0; row < members.size(); ++row)
        REQUIRE(m.actions[s](static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) ==
                (t.table[s][members[col]] == members[row] ? 1 : 0));
}

TEST_CASE("cell modules of A2 in the middle cell", "[based_modules]") {
  const auto alg = testing::kl_algebra_of("A2");
  const auto cd = compute_cells(alg);
  const auto mid = middle_cell_of_a2(cd);
  for (auto l : cd.left_cells_in(mid)) {
    const auto m = cell_module(alg, cd, l);
    REQUIRE(m.dim() == 2);
    for (const auto& a : m.actions)
      for (Eigen::Index r = 0; r < 2; ++r)
        for (Eigen::Index c = 0; c < 2; ++c) {
          REQUIRE(a(r, c) >= 0);
          REQUIRE(boost::multiprecision::denominator(a(r, c)) == 1);
        }
  }
}

TEST_CASE("cell modules satisfy the module axioms exactly", "[based_modules][property]") {
  for (const auto& alg : corpus()) {
    const auto cd = compute_cells(alg);
    std::size_t total = 0;
    for (std::size_t l = 0; l < cd.left.size(); ++l) {
      const auto m = cell_module(alg, cd, l);
      total += m.dim();
      REQUIRE(check_module(alg, m).empty());
      REQUIRE(is_transitive(m));
      // M_L and N_L are left ideals.
      REQUIRE(is_left_ideal_span(alg, upper_left_set(cd, l)));
      REQUIRE(is_left_ideal_span(alg, strict_upper_left_set(cd, l)));
    }
    REQUIRE(total == alg.dim());
  }
  REQUIRE_THROWS_AS(cell_module(testing::dual_numbers(), compute_cells(testing::dual_numbers()), 9),
                    Error);
}

TEST_CASE("is_transitive", "[based_modules]") {
  const auto alg = from_cayley_table(testing::symmetric3_table());
  REQUIRE(is_transitive(regular_module(alg)));
  const auto t2 = from_cayley_table(testing::t2_table());
  const auto cd = compute_cells(t2);
  REQUIRE_FALSE(is_transitive(direct_sum(cell_module(t2, cd, 0), cell_module(t2, cd, 1))));
  // The regular module of a non-group monoid is not transitive.
  REQUIRE_FALSE(is_transitive(regular_module(t2)));
}

TEST_CASE("quotient algebras", "[based_modules]") {
  SECTION("the maximum cell gives the algebra back") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    const auto q = quotient_algebra(alg, cd, cd.two_sided.size() - 1);
    REQUIRE(q.algebra.dim() == alg.dim());
    REQUIRE(q.algebra.constants().size() == alg.constants().size());
  }
  SECTION("T2 modulo the constants is Q[C2]") {
    const auto t = testing::t2_table();
    const auto alg = from_cayley_table(t);
    const auto cd = compute_cells(alg);
    const auto q = quotient_algebra(alg, cd, 0);
    REQUIRE(q.algebra.dim() == 2);
    REQUIRE(validate(q.algebra).ok());
    const auto swap = testing::index_of(t, "[1,0]");
    REQUIRE(q.indices == std::vector<std::size_t>{0, swap});
    REQUIRE(q.algebra.gamma(1, 1, 0) == 1);
  }
  SECTION("A3 at the identity cell is one-dimensional") {
    const auto alg = testing::kl_algebra_of("A3");
    const auto cd = compute_cells(alg);
    const auto q = quotient_algebra(alg, cd, cd.two_sided.cell_of[0]);
    REQUIRE(q.algebra.dim() == 1);
    REQUIRE(q.algebra.gamma(0, 0, 0) == 1);
  }
}

TEST_CASE("cell morphisms", "[based_modules]") {
  SECTION("a cell to itself through the unit") {
    const auto alg = from_cayley_table(testing::symmetric3_table());
    const auto cd = compute_cells(alg);
    const auto phi = cell_morphism(alg, cd, 0, 0);
    REQUIRE(phi.witness == alg.unit_index());
    REQUIRE(phi.matrix == RationalMatrix::Identity(6, 6));
  }
  SECTION("between the two left cells of the A2 middle cell") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    const auto cells = cd.left_cells_in(middle_cell_of_a2(cd));
    REQUIRE(cells.size() == 2);
    for (auto src : cells)
      for (auto dst : cells) {
        const auto phi = cell_morphism(alg, cd, src, dst);
        REQUIRE_FALSE(phi.matrix.isZero());
        REQUIRE((phi.matrix.array() >= Rational(0)).all());
        // Oracle: the smallest j such that some product i*j meets dst.
        std::size_t expected = alg.dim();
        for (std::size_t j = 0; j < alg.dim() && expected == alg.dim(); ++j)
          for (auto i : cd.left.cells[src])
            for (auto k : star(alg, i, j))
              if (cd.left.cell_of[k] == dst) expected = j;
        REQUIRE(phi.witness == expected);
        const auto a = cell_module(alg, cd, src);
        const auto b = cell_module(alg, cd, dst);
        for (std::size_t i = 0; i < alg.dim(); ++i)
          REQUIRE(phi.matrix * a.actions[i] == b.actions[i] * phi.matrix);
      }
  }
  SECTION("cells of different two-sided cells are rejected") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    REQUIRE(kind_of([&] { cell_morphism(alg, cd, 0, cd.left.size() - 1); }) ==
            ErrorKind::PreconditionViolated);
  }
}

TEST_CASE("mj_module", "[based_modules]") {
  SECTION("maximum cell is its span in the regular module") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    const auto top = cd.two_sided.size() - 1;
    const auto m = mj_module(alg, cd, top);
    REQUIRE(m.dim() == 1);
    REQUIRE(check_module(alg, m).empty());
    REQUIRE(m.actions[0](0, 0) == 1);
  }
  SECTION("T2 constants") {
    const auto alg = from_cayley_table(testing::t2_table());
    const auto cd = compute_cells(alg);
    const auto m = mj_module(alg, cd, 1);
    REQUIRE(m.dim() == 2);
    REQUIRE(check_module(alg, m).empty());
  }
  SECTION("A2 middle cell is block diagonal by left cells") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    const auto mid = middle_cell_of_a2(cd);
    const auto m = mj_module(alg, cd, mid);
    REQUIRE(m.dim() == 4);
    REQUIRE(check_module(alg, m).empty());
    const auto& members = cd.two_sided.cells[mid];
    for (const auto& a : m.actions)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (cd.left.cell_of[members[r]] != cd.left.cell_of[members[c]])
            REQUIRE(a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == 0);
  }
}

TEST_CASE("delta modules", "[based_modules]") {
  SECTION("T2 at a constant: trivial group, Delta = C_L") {
    const auto t = testing::t2_table();
    const auto alg = from_cayley_table(t);
    const auto cd = compute_cells(alg);
    const auto e = testing::index_of(t, "[0,0]");
    const auto d = delta_module(alg, cd, e);
    REQUIRE(d.group == std::vector<std::size_t>{e});
    const auto cl = cell_module(alg, cd, cd.left.cell_of[e]);
    REQUIRE(d.module.dim() == cl.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) REQUIRE(d.module.actions[i] == cl.actions[i]);
  }
  SECTION("T2 at the identity: coinvariants of the unit group") {
    const auto alg = from_cayley_table(testing::t2_table());
    const auto cd = compute_cells(alg);
    const auto d = delta_module(alg, cd, alg.unit_index());
    REQUIRE(d.group.size() == 2);
    REQUIRE(d.module.dim() == 1);
    REQUIRE(check_module(alg, d.module).empty());
  }
  SECTION("T3 at a rank-2 idempotent") {
    const auto t = testing::t3_table();
    const auto alg = from_cayley_table(t);
    const auto cd = compute_cells(alg);
    const auto e = testing::index_of(t, "[0,0,2]");
    const auto d = delta_module(alg, cd, e);
    // Oracle: the H-class of e is the maps with the kernel and image of e.
    std::set<std::size_t> h;
    const testing::GreenOracle green(t);
    for (std::size_t x = 0; x < t.order(); ++x)
      if (green.l_equiv(x, e) && green.r_equiv(x, e)) h.insert(x);
    REQUIRE(std::set<std::size_t>(d.group.begin(), d.group.end()) == h);
    REQUIRE(h.size() == 2);
    REQUIRE(cd.left.cells[d.left_cell].size() == 6);
    REQUIRE(d.module.dim() == 3);
    REQUIRE(check_module(alg, d.module).empty());
  }
  SECTION("errors") {
    const auto a2 = testing::kl_algebra_of("A2");
    REQUIRE(kind_of([&] { delta_module(a2, compute_cells(a2), 0); }) == ErrorKind::NotMonoidBacked);
    const auto t = testing::t2_table();
    const auto alg = from_cayley_table(t);
    REQUIRE(kind_of([&] { delta_module(alg, compute_cells(alg), testing::index_of(t, "[1,0]")); }) ==
            ErrorKind::NotIdempotent);
  }
}

}  // namespace pba
