#include <functional>
#include <map>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "corpus.hpp"
#include "pba/kl_hecke.hpp"

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

std::size_t inversions(const std::vector<std::size_t>& p) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++n;
  return n;
}

std::size_t index_of_word(const WeylGroup& w, const std::string& word, std::size_t n) {
  const auto target = testing::permutation_of_word(word, n);
  for (std::size_t i = 0; i < w.order(); ++i)
    if (testing::permutation_of_word(w.words[i], n) == target) return i;
  FAIL("word not found: " << word);
  return 0;
}

// Hecke algebra in the standard basis, multiplied generator by generator.
using HeckeElement = std::map<std::size_t, LaurentPoly>;

HeckeElement left_multiply_by_generator(const WeylGroup& w, std::size_t s, const HeckeElement& x) {
  HeckeElement out;
  const LaurentPoly quad = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  for (const auto& [y, c] : x) {
    const auto sy = w.left_mult[s][y];
    out[sy] += c;
    if (w.lengths[sy] < w.lengths[y]) out[y] += quad * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

HeckeElement kl_element(const KLBasisData& kl, std::size_t w) {
  HeckeElement out;
  for (std::size_t x = 0; x < kl.h[w].size(); ++x)
    if (!kl.h[w][x].is_zero()) out[x] = kl.h[w][x];
  return out;
}

HeckeElement hecke_product(const WeylGroup& w, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [x, c] : a) {
    HeckeElement term = b;
    const auto& word = w.words[x];
    if (word != "e")
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        term = left_multiply_by_generator(w, static_cast<std::size_t>(*it - '1'), term);
    for (const auto& [y, d] : term) out[y] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Expands a Hecke element in the KL basis by peeling off leading terms.
std::map<std::size_t, LaurentPoly> in_kl_basis(const WeylGroup& w, const KLBasisData& kl,
                                               HeckeElement x) {
  std::map<std::size_t, LaurentPoly> coeffs;
  while (!x.empty()) {
    std::size_t top = x.begin()->first;
    for (const auto& [y, c] : x)
      if (w.lengths[y] > w.lengths[top]) top = y;
    const auto c = x[top];
    coeffs[top] = c;
    for (const auto& [y, h] : kl_element(kl, top)) x[y] -= c * h;
    std::erase_if(x, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return coeffs;
}

bool bruhat_leq_type_a(const std::string& x, const std::string& w, std::size_t n) {
  if (w == "e") return x == "e";
  const auto target = testing::permutation_of_word(x, n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
    std::string sub;
    for (std::size_t b = 0; b < w.size(); ++b)
      if (mask >> b & 1) sub.push_back(w[b]);
    if (testing::permutation_of_word(sub.empty() ? "e" : sub, n) == target) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Weyl group orders and lengths", "[kl_hecke]") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"A1", {2, 1}},  {"A2", {6, 3}},  {"A3", {24, 6}}, {"B2", {8, 4}},
      {"B3", {48, 9}}, {"C3", {48, 9}}, {"G2", {12, 6}}, {"D4", {192, 12}}};
  for (const auto& [type, ol] : expected) {
    const auto w = enumerate_weyl(cartan_matrix(type));
    INFO(type);
    REQUIRE(w.order() == ol.first);
    REQUIRE(w.lengths[w.longest()] == ol.second);
    REQUIRE(w.words.front() == "e");
    for (std::size_t i = 1; i < w.order(); ++i) REQUIRE(w.lengths[i - 1] <= w.lengths[i]);
  }
  REQUIRE(enumerate_weyl(cartan_matrix("B4")).order() == 384);
  REQUIRE(enumerate_weyl(cartan_matrix("F4"), {.max_order = 1200}).order() == 1152);
}

TEST_CASE("type A matches permutations", "[kl_hecke]") {
  const auto w = enumerate_weyl(cartan_matrix("A3"));
  std::set<std::vector<std::size_t>> perms;
  for (std::size_t i = 0; i < w.order(); ++i) {
    const auto p = testing::permutation_of_word(w.words[i], 3);
    perms.insert(p);
    REQUIRE(inversions(p) == w.lengths[i]);
    REQUIRE((w.words[i] == "e" ? w.lengths[i] == 0 : w.words[i].size() == w.lengths[i]));
  }
  REQUIRE(perms.size() == 24);
  for (std::size_t x = 0; x < w.order(); ++x) {
    const auto px = testing::permutation_of_word(w.words[x], 3);
    const auto pi = testing::permutation_of_word(w.words[w.inverse[x]], 3);
    for (std::size_t a = 0; a < 4; ++a) REQUIRE(pi[px[a]] == a);
  }
}

TEST_CASE("descents and multiplication tables agree with lengths", "[kl_hecke]") {
  for (const char* type : {"A3", "B3", "G2"}) {
    const auto w = enumerate_weyl(cartan_matrix(type));
    for (std::size_t s = 0; s < w.rank(); ++s)
      for (std::size_t x = 0; x < w.order(); ++x) {
        REQUIRE(((w.right_descents[x] >> s & 1) == 1) ==
                (w.lengths[w.right_mult[s][x]] < w.lengths[x]));
        REQUIRE(((w.left_descents[x] >> s & 1) == 1) ==
                (w.lengths[w.left_mult[s][x]] < w.lengths[x]));
        REQUIRE(w.left_mult[s][w.left_mult[s][x]] == x);
      }
    for (std::size_t x = 0; x < w.order(); ++x) {
      REQUIRE(w.multiply(x, w.inverse[x]) == 0);
      REQUIRE(w.multiply(0, x) == x);
    }
  }
}

TEST_CASE("KL basis in rank one", "[kl_hecke]") {
  const auto w = enumerate_weyl(cartan_matrix("A1"));
  const auto kl = kl_basis(w);
  REQUIRE(kl.coefficient(1, 1) == LaurentPoly(Rational(1)));
  REQUIRE(kl.coefficient(0, 1) == LaurentPoly::monomial(1));
  const auto alg = kl_algebra(w, kl);
  REQUIRE(alg.gamma(1, 1, 1) == 2);
  REQUIRE(alg.gamma(1, 1, 0) == 0);
}

TEST_CASE("KL basis in A2 is the sum over the Bruhat interval", "[kl_hecke]") {
  const auto w = enumerate_weyl(cartan_matrix("A2"));
  const auto kl = kl_basis(w);
  for (std::size_t y = 0; y < w.order(); ++y)
    for (std::size_t x = 0; x < w.order(); ++x) {
      const auto expected =
          bruhat_leq_type_a(w.words[x], w.words[y], 2)
              ? LaurentPoly::monomial(static_cast<int>(w.lengths[y] - w.lengths[x]))
              : LaurentPoly();
      INFO(w.words[x] << " " << w.words[y]);
      REQUIRE(kl.coefficient(x, y) == expected);
    }
  REQUIRE(kl.coefficient(0, w.longest()) == LaurentPoly::monomial(3));
  REQUIRE(kl.mu(1, index_of_word(w, "12", 2)) == 1);
}

TEST_CASE("a singular KL polynomial in A3", "[kl_hecke]") {
  // P_{x,w} = 1 + q for w = s2 s1 s3 s2 and x in {e, s2}.
  const auto w = enumerate_weyl(cartan_matrix("A3"));
  const auto kl = kl_basis(w);
  const auto top = index_of_word(w, "2132", 3);
  REQUIRE(kl.coefficient(0, top) == LaurentPoly::monomial(4) + LaurentPoly::monomial(2));
  REQUIRE(kl.coefficient(index_of_word(w, "2", 3), top) ==
          LaurentPoly::monomial(3) + LaurentPoly::monomial(1));
  REQUIRE(kl.mu(index_of_word(w, "2", 3), top) == 1);
  // h_{e,w0} = v^{l(w0)} in any type.
  REQUIRE(kl.coefficient(0, w.longest()) == LaurentPoly::monomial(6));
}

TEST_CASE("KL products expand with bar-invariant positive coefficients", "[kl_hecke][property]") {
  for (const char* type : {"A2", "B2", "A3"}) {
    const auto w = enumerate_weyl(cartan_matrix(type));
    const auto kl = kl_basis(w);
    const auto alg = kl_algebra(w, kl);
    const std::size_t step = w.order() > 10 ? 5 : 1;
    for (std::size_t x = 0; x < w.order(); x += step)
      for (std::size_t y = 0; y < w.order(); y += step) {
        const auto coeffs =
            in_kl_basis(w, kl, hecke_product(w, kl_element(kl, x), kl_element(kl, y)));
        for (std::size_t z = 0; z < w.order(); ++z) {
          const auto it = coeffs.find(z);
          const LaurentPoly c = it == coeffs.end() ? LaurentPoly() : it->second;
          for (const auto& [e, q] : c.terms()) {
            REQUIRE(q > 0);
            REQUIRE(c.coefficient(-e) == q);
          }
          REQUIRE(alg.gamma(x, y, z) == c.evaluate_at_one());
        }
      }
  }
}

TEST_CASE("KL structure constants are nonnegative integers with inverse symmetry",
          "[kl_hecke][property]") {
  for (const char* type : {"A3", "B3", "G2"}) {
    const auto w = enumerate_weyl(cartan_matrix(type));
    const auto alg = kl_algebra(w, kl_basis(w));
    REQUIRE(validate(alg).ok());
    for (const auto& c : alg.constants()) {
      REQUIRE(c.value > 0);
      REQUIRE(boost::multiprecision::denominator(c.value) == 1);
      REQUIRE(alg.gamma(w.inverse[c.j], w.inverse[c.i], w.inverse[c.k]) == c.value);
    }
  }
}

TEST_CASE("Weyl and Cartan errors", "[kl_hecke]") {
  REQUIRE(kind_of([] { cartan_matrix("E9"); }) == ErrorKind::ParseError);
  IntMatrix affine(2, 2);
  affine << 2, -2, -2, 2;
  REQUIRE(kind_of([&] { enumerate_weyl(affine); }) == ErrorKind::NotFiniteType);
  REQUIRE(kind_of([] { enumerate_weyl(cartan_matrix("F4")); }) == ErrorKind::SizeCapExceeded);
  REQUIRE(kind_of([] { enumerate_weyl(cartan_matrix("A4"), {.max_rank = 3}); }) ==
          ErrorKind::RankCapExceeded);
  IntMatrix bad(2, 2);
  bad << 2, 1, -1, 2;
  REQUIRE(kind_of([&] { enumerate_weyl(bad); }) == ErrorKind::ParseError);
}

}  // namespace pba
