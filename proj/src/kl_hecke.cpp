#include "pba/kl_hecke.hpp"

#include <map>
#include <set>

namespace pba {

namespace {

constexpr std::size_t kFiniteTypeLimit = 1200;

using Key = std::vector<long long>;

Key key_of(const IntMatrix& m) { return Key(m.data(), m.data() + m.size()); }

IntMatrix simple_reflection(const IntMatrix& cartan, Eigen::Index s) {
  const Eigen::Index r = cartan.rows();
  IntMatrix m = IntMatrix::Identity(r, r);
  // s(alpha_j) = alpha_j - <alpha_s^vee, alpha_j> alpha_s
  for (Eigen::Index j = 0; j < r; ++j) m(s, j) -= cartan(s, j);
  return m;
}

bool is_negative_root(const IntMatrix& col) { return (col.array() <= 0).all() && !col.isZero(); }

void check_cartan(const IntMatrix& c) {
  if (c.rows() != c.cols() || c.rows() == 0)
    throw Error(ErrorKind::ParseError, "Cartan matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (i == j && c(i, j) != 2) throw Error(ErrorKind::ParseError, "Cartan diagonal must be 2");
      if (i != j && (c(i, j) > 0 || ((c(i, j) == 0) != (c(j, i) == 0))))
        throw Error(ErrorKind::ParseError, "not a generalized Cartan matrix");
    }
}

}  // namespace

IntMatrix cartan_matrix(std::string_view type) {
  if (type.size() != 2 || type[1] < '1' || type[1] > '9')
    throw Error(ErrorKind::ParseError, "unknown Weyl type '" + std::string(type) + "'");
  const char family = type[0];
  const Eigen::Index n = type[1] - '0';
  IntMatrix c = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) c(i, i) = 2;
  const auto chain = [&] {
    for (Eigen::Index i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
  };
  switch (family) {
    case 'A':
      chain();
      return c;
    case 'B':
      if (n < 2) break;
      chain();
      c(n - 1, n - 2) = -2;  // alpha_n short
      return c;
    case 'C':
      if (n < 2) break;
      chain();
      c(n - 2, n - 1) = -2;
      return c;
    case 'D':
      if (n != 4) break;
      c(0, 1) = c(1, 0) = c(1, 2) = c(2, 1) = c(1, 3) = c(3, 1) = -1;
      return c;
    case 'F':
      if (n != 4) break;
      chain();
      c(1, 2) = -2;
      return c;
    case 'G':
      if (n != 2) break;
      c(0, 1) = -1;
      c(1, 0) = -3;
      return c;
    default:
      break;
  }
  throw Error(ErrorKind::ParseError, "unsupported Weyl type '" + std::string(type) + "'");
}

std::size_t WeylGroup::multiply(std::size_t x, std::size_t y) const {
  std::size_t out = x;
  if (words[y] == "e") return out;
  for (char letter : words[y]) out = right_mult[static_cast<std::size_t>(letter - '1')][out];
  return out;
}

WeylGroup enumerate_weyl(const IntMatrix& cartan, const WeylOptions& options) {
  check_cartan(cartan);
  const auto r = static_cast<std::size_t>(cartan.rows());
  if (r > options.max_rank || r > 9)
    throw Error(ErrorKind::RankCapExceeded, "rank " + std::to_string(r) + " exceeds cap " +
                                                std::to_string(options.max_rank));

  WeylGroup w;
  w.cartan = cartan;
  std::vector<IntMatrix> gens;
  for (std::size_t s = 0; s < r; ++s)
    gens.push_back(simple_reflection(cartan, static_cast<Eigen::Index>(s)));

  std::map<Key, std::size_t> index;
  w.elements.push_back(IntMatrix::Identity(cartan.rows(), cartan.cols()));
  w.words.push_back("e");
  index.emplace(key_of(w.elements[0]), 0);
  for (std::size_t next = 0; next < w.elements.size(); ++next) {
    for (std::size_t s = 0; s < r; ++s) {
      IntMatrix y = w.elements[next] * gens[s];
      if (index.count(key_of(y))) continue;
      index.emplace(key_of(y), w.elements.size());
      w.elements.push_back(std::move(y));
      w.words.push_back((next == 0 ? std::string() : w.words[next]) +
                        static_cast<char>('1' + s));
      if (w.elements.size() > kFiniteTypeLimit)
        throw Error(ErrorKind::NotFiniteType,
                    "closure exceeds " + std::to_string(kFiniteTypeLimit) + " elements");
    }
  }
  if (w.order() > options.max_order)
    throw Error(ErrorKind::SizeCapExceeded, "group order " + std::to_string(w.order()) +
                                                " exceeds cap " + std::to_string(options.max_order));

  const std::size_t n = w.order();
  w.left_mult.assign(r, std::vector<std::size_t>(n));
  w.right_mult.assign(r, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t x = 0; x < n; ++x) {
      w.left_mult[s][x] = index.at(key_of(gens[s] * w.elements[x]));
      w.right_mult[s][x] = index.at(key_of(w.elements[x] * gens[s]));
    }

  // Positive roots are the images of simple roots with nonnegative coordinates.
  std::set<Key> positive_roots;
  for (const auto& m : w.elements)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if ((m.col(c).array() >= 0).all()) positive_roots.insert(key_of(m.col(c)));

  w.inverse.resize(n);
  w.lengths.resize(n);
  w.left_descents.assign(n, 0);
  w.right_descents.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t inv = 0;
    if (w.words[x] != "e")
      for (char letter : w.words[x]) inv = w.left_mult[static_cast<std::size_t>(letter - '1')][inv];
    w.inverse[x] = inv;

    std::size_t length = 0;
    for (const auto& root : positive_roots) {
      IntMatrix beta = Eigen::Map<const IntMatrix>(root.data(), cartan.rows(), 1);
      if (is_negative_root(w.elements[x] * beta)) ++length;
    }
    w.lengths[x] = length;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < r; ++s) {
      if (is_negative_root(w.elements[x].col(static_cast<Eigen::Index>(s))))
        w.right_descents[x] |= 1u << s;
      if (is_negative_root(w.elements[w.inverse[x]].col(static_cast<Eigen::Index>(s))))
        w.left_descents[x] |= 1u << s;
    }
  return w;
}

KLBasisData kl_basis(const WeylGroup& w) {
  const std::size_t n = w.order();
  KLBasisData kl;
  kl.h.assign(n, std::vector<LaurentPoly>(n));
  kl.h[0][0] = LaurentPoly(Rational(1));

  for (std::size_t x = 1; x < n; ++x) {
    std::size_t s = 0;
    while (!(w.left_descents[x] >> s & 1u)) ++s;
    const std::size_t u = w.left_mult[s][x];  // s x < x
    const auto& hu = kl.h[u];

    // KL(s) KL(u) expanded in the standard basis. With KL(s) = H_s + v:
    // KL(s) H_y = H_{sy} + v H_y     if sy > y,
    //           = H_{sy} + v^-1 H_y  if sy < y.
    std::vector<LaurentPoly> col(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (hu[y].is_zero()) continue;
      const std::size_t sy = w.left_mult[s][y];
      col[sy] += hu[y];
      col[y] += hu[y].shifted(w.lengths[sy] > w.lengths[y] ? 1 : -1);
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (y == u || !(w.left_descents[y] >> s & 1u)) continue;
      const Rational m = kl.mu(y, u);
      if (m == 0) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!kl.h[y][z].is_zero()) col[z] -= m * kl.h[y][z];
    }

    for (std::size_t y = 0; y < n; ++y) {
      if (col[y].is_zero()) continue;
      for (const auto& [e, c] : col[y].terms()) {
        const bool integral = boost::multiprecision::denominator(c) == 1;
        const bool normalised = y == x ? (e == 0 && c == 1) : e > 0;
        if (c < 0 || !integral || !normalised)
          throw Error(ErrorKind::PositivityViolation,
                      "h_{" + w.words[y] + "," + w.words[x] + "} = " + col[y].str());
      }
    }
    kl.h[x] = std::move(col);
  }
  return kl;
}

PBAlgebra kl_algebra(const WeylGroup& w, const KLBasisData& kl) {
  const std::size_t n = w.order();
  // p[w] = nonzero (x, h_{x,w}(1)); unitriangular in the length order.
  std::vector<std::vector<std::pair<std::size_t, long long>>> p(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < n; ++x)
      if (!kl.h[c][x].is_zero())
        p[c].emplace_back(x, kl.h[c][x].evaluate_at_one().convert_to<long long>());

  std::vector<std::vector<std::size_t>> product(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) product[x][y] = w.multiply(x, y);

  std::vector<StructureConstant> gamma;
  std::vector<long long> z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(z.begin(), z.end(), 0);
      for (const auto& [a, ca] : p[i])
        for (const auto& [b, cb] : p[j]) z[product[a][b]] += ca * cb;
      // Solve z = sum_k c_k KL(k) from the top down; z is overwritten by c.
      for (std::size_t k = n; k-- > 0;) {
        const long long ck = z[k];
        if (ck == 0) continue;
        for (const auto& [x, cx] : p[k])
          if (x != k) z[x] -= cx * ck;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k] == 0) continue;
        if (z[k] < 0)
          throw Error(ErrorKind::NegativeSpecialization,
                      "coefficient of " + w.words[k] + " in " + w.words[i] + "*" + w.words[j]);
        gamma.push_back({i, j, k, Rational(z[k])});
      }
    }
  return PBAlgebra(w.words, 0, std::move(gamma));
}

}  // namespace pba
