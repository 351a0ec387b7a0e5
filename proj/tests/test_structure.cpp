#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "pba/linalg.hpp"
#include "pba/spectral.hpp"
#include "pba/structure.hpp"

namespace pba {

namespace {

// Gram matrix of the trace form from scratch: trace of the naive action
// matrix of every product a_i a_j.
std::size_t oracle_radical_dim(const PBAlgebra& alg) {
  const std::size_t n = alg.dim();
  RationalMatrix g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational tr = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = alg.gamma(i, j, k);
        if (c == 0) continue;
        for (std::size_t x = 0; x < n; ++x) tr += c * alg.gamma(k, x, x);
      }
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = tr;
    }
  return n - static_cast<std::size_t>(linalg::rank<Rational>(g));
}

bool exact_span_contains(const RationalMatrix& basis, const RationalVector& v) {
  return linalg::in_column_span(basis, v);
}

}  // namespace

TEST_CASE("radical", "[structure]") {
  SECTION("group algebras are semisimple") {
    for (const auto& t : {testing::cyclic2_table(), testing::symmetric3_table(),
                          testing::dihedral4_table(), testing::symmetric4_table()})
      REQUIRE(radical(from_cayley_table(t)).dim() == 0);
  }
  SECTION("dual numbers") {
    const auto rad = radical(testing::dual_numbers());
    REQUIRE(rad.dim() == 1);
    REQUIRE(rad.basis(0, 0) == 0);
    REQUIRE(rad.basis(1, 0) != 0);
    REQUIRE(rad.nilpotency_index == 2);
  }
  SECTION("monoid and KL algebras against the brute-force Gram matrix") {
    for (const auto& alg : {from_cayley_table(testing::t2_table()), from_cayley_table(testing::t3_table()),
                            testing::kl_algebra_of("A2"), testing::kl_algebra_of("B2")}) {
      const auto rad = radical(alg);
      REQUIRE(rad.dim() == oracle_radical_dim(alg));
      for (Eigen::Index c = 0; c < rad.basis.cols(); ++c)
        for (std::size_t i = 0; i < alg.dim(); ++i) {
          const auto ai = basis_vector<Rational>(alg, i);
          const RationalVector r = rad.basis.col(c);
          REQUIRE(exact_span_contains(rad.basis, multiply<Rational>(alg, ai, r)));
          REQUIRE(exact_span_contains(rad.basis, multiply<Rational>(alg, r, ai)));
        }
    }
    REQUIRE(radical(from_cayley_table(testing::t2_table())).dim() > 0);
  }
}

TEST_CASE("generated submodules", "[structure]") {
  SECTION("PF vector of the regular module of a group spans the trivial module") {
    const auto alg = from_cayley_table(testing::symmetric3_table());
    const auto pf = pf_eigendata(action_matrix<Rational>(alg, RationalVector::Ones(6)));
    REQUIRE(generated_submodule(regular_module(alg), pf.v).cols() == 1);
  }
  SECTION("a simple module is generated by any nonzero vector") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto cd = compute_cells(alg);
    for (std::size_t l = 0; l < cd.left.size(); ++l) {
      const auto m = cell_module(alg, cd, l);
      Vector<double> v = Vector<double>::Zero(static_cast<Eigen::Index>(m.dim()));
      v(0) = 1.0;
      REQUIRE(static_cast<std::size_t>(generated_submodule(m, v).cols()) == m.dim());
    }
  }
  SECTION("V_L does not depend on c") {
    const auto alg = from_cayley_table(testing::t3_table());
    const auto cd = compute_cells(alg);
    std::mt19937_64 rng(77);
    for (std::size_t l = 0; l < cd.left.size(); ++l) {
      const auto m = cell_module(alg, cd, l);
      Matrix<double> reference;
      for (int s = 0; s < 5; ++s) {
        const RationalVector c = s == 0 ? RationalVector::Ones(27)
                                        : testing::random_positive_rationals(alg.dim(), rng);
        const auto pf = pf_eigendata(pf_action(alg, m, c));
        const auto v_space = generated_submodule(m, pf.v);
        if (s == 0) reference = v_space;
        else REQUIRE(linalg::subspace_distance(reference, v_space) < 1e-7);
      }
    }
  }
  SECTION("zero vector") {
    const auto alg = testing::dual_numbers();
    REQUIRE_THROWS_AS(generated_submodule(regular_module(alg), Vector<double>::Zero(2)), Error);
  }
}

TEST_CASE("module tops", "[structure]") {
  SECTION("semisimple: the top is the whole subspace") {
    const auto alg = testing::kl_algebra_of("A2");
    const auto rad = radical(alg);
    const auto m = regular_module(alg);
    const Matrix<double> all = Matrix<double>::Identity(6, 6);
    const auto top = module_top(m, rad, all);
    REQUIRE(top.dim() == 6);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      REQUIRE(top.character.traces(static_cast<Eigen::Index>(i)) ==
              Catch::Approx(to_double(basis_action(alg, i).trace())).margin(1e-9));
  }
  SECTION("the span of the group sum carries the trivial character") {
    const auto alg = from_cayley_table(testing::dihedral4_table());
    const Matrix<double> v = Vector<double>::Constant(8, 1.0 / std::sqrt(8.0));
    const auto top = module_top(regular_module(alg), radical(alg), v);
    REQUIRE(top.dim() == 1);
    for (Eigen::Index i = 0; i < 8; ++i) REQUIRE(top.character.traces(i) == Catch::Approx(1.0));
  }
  SECTION("dual numbers: the top of the regular module is one-dimensional") {
    const auto alg = testing::dual_numbers();
    const auto top = module_top(regular_module(alg), radical(alg), Matrix<double>::Identity(2, 2));
    REQUIRE(top.dim() == 1);
    REQUIRE(top.character.traces(0) == Catch::Approx(1.0));
    REQUIRE(std::abs(top.character.traces(1)) < 1e-12);
    // V = rad A is its own top since rad^2 = 0.
    Matrix<double> x(2, 1);
    x << 0.0, 1.0;
    const auto small = module_top(regular_module(alg), radical(alg), x);
    REQUIRE(small.dim() == 1);
    REQUIRE(std::abs(small.character.traces(1)) < 1e-12);
    REQUIRE_THROWS_AS(module_top(regular_module(alg), radical(alg), Matrix<double>(2, 0)), Error);
  }
}

TEST_CASE("kernel cone check", "[structure]") {
  REQUIRE(kernel_cone_check(Matrix<double>(3, 0)));
  REQUIRE(kernel_cone_check(RationalMatrix(3, 0)));

  Matrix<double> mixed(3, 1);
  mixed << 1.0, -1.0, 0.0;
  REQUIRE(kernel_cone_check(mixed));
  Matrix<double> positive(3, 2);
  positive << 1.0, -1.0, 1.0, 0.0, 0.0, 0.0;  // span contains (0, 1, 0)
  REQUIRE_FALSE(kernel_cone_check(positive));

  RationalMatrix exact_mixed(3, 2);
  exact_mixed << 1, 0, -1, 1, 0, -1;  // the sum-zero plane
  REQUIRE(kernel_cone_check(exact_mixed));
  RationalMatrix exact_positive(3, 1);
  exact_positive << 0, 2, 1;
  REQUIRE_FALSE(kernel_cone_check(exact_positive));

  // A two-dimensional kernel whose positive direction is only reached by a combination.
  Matrix<double> hidden(4, 2);
  hidden << 1.0, 0.0, -1.0, 2.0, 0.5, 0.5, 1.0, -1.0;  // 2*c1 + c2 = (2, 0, 1.5, 1)
  REQUIRE_FALSE(kernel_cone_check(hidden));
}

TEST_CASE("rationalize_subspace", "[structure]") {
  Matrix<double> q(3, 1);
  q << 1.0, 2.0, -3.0;
  q /= q.norm();
  const auto r = rationalize_subspace(q);
  REQUIRE(r.has_value());
  REQUIRE((*r)(0, 0) == 1);
  REQUIRE((*r)(1, 0) == 2);
  REQUIRE((*r)(2, 0) == -3);
  Matrix<double> irrational(2, 1);
  irrational << 1.0, std::sqrt(2.0);
  REQUIRE_FALSE(rationalize_subspace(irrational).has_value());
}

TEST_CASE("character pairing on a split semisimple algebra", "[structure]") {
  const auto alg = from_cayley_table(testing::symmetric3_table());
  const auto g = trace_form(alg);
  const Vector<double> trivial = Vector<double>::Ones(6);
  Vector<double> regular = Vector<double>::Zero(6);
  regular(static_cast<Eigen::Index>(alg.unit_index())) = 6.0;
  REQUIRE(character_pairing(g, trivial, trivial) == Catch::Approx(1.0));
  REQUIRE(character_pairing(g, regular, trivial) == Catch::Approx(1.0));
  REQUIRE(character_pairing(g, regular, regular) == Catch::Approx(6.0));
  REQUIRE_THROWS_AS(character_pairing(trace_form(testing::dual_numbers()), Vector<double>::Ones(2),
                                      Vector<double>::Ones(2)),
                    Error);
}

}  // namespace pba
