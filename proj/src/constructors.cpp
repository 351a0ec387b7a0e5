#include "pba/constructors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pba {

Transformation Transformation::identity(std::size_t degree) {
  Transformation t;
  t.images.resize(degree);
  for (std::size_t x = 0; x < degree; ++x) t.images[x] = x;
  return t;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree())
    throw Error(ErrorKind::DimensionMismatch, "transformations of different degree");
  Transformation out;
  out.images.reserve(g.degree());
  for (auto x : g.images) out.images.push_back(f.images[x]);
  return out;
}

std::string to_label(const Transformation& t) {
  std::string s = "[";
  for (std::size_t x = 0; x < t.degree(); ++x) {
    if (x) s += ",";
    s += std::to_string(t.images[x]);
  }
  return s + "]";
}

std::size_t check_monoid_table(const CayleyTable& t) {
  const std::size_t m = t.order();
  if (m == 0) throw Error(ErrorKind::DimensionMismatch, "empty Cayley table");
  if (t.labels.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "label count does not match table order");
  for (const auto& row : t.table) {
    if (row.size() != m) throw Error(ErrorKind::DimensionMismatch, "Cayley table is not square");
    for (auto v : row)
      if (v >= m) throw Error(ErrorKind::IndexOutOfRange, "Cayley table entry out of range");
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (t.table[t.table[x][y]][z] != t.table[x][t.table[y][z]])
          throw Error(ErrorKind::NotAssociative, "(" + t.labels[x] + " " + t.labels[y] + ") " +
                                                     t.labels[z] + " differs");
  for (std::size_t e = 0; e < m; ++e) {
    bool identity = true;
    for (std::size_t x = 0; x < m && identity; ++x)
      identity = t.table[e][x] == x && t.table[x][e] == x;
    if (identity) return e;
  }
  throw Error(ErrorKind::NoIdentity, "Cayley table has no two-sided identity");
}

bool is_group_table(const CayleyTable& t) {
  const std::size_t m = t.order();
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<bool> row(m, false), col(m, false);
    for (std::size_t y = 0; y < m; ++y) {
      row[t.table[x][y]] = true;
      col[t.table[y][x]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      return false;
  }
  return true;
}

PBAlgebra from_cayley_table(const CayleyTable& t) {
  const std::size_t unit = check_monoid_table(t);
  std::vector<StructureConstant> gamma;
  gamma.reserve(t.order() * t.order());
  for (std::size_t i = 0; i < t.order(); ++i)
    for (std::size_t j = 0; j < t.order(); ++j) gamma.push_back({i, j, t.table[i][j], Rational(1)});
  return PBAlgebra(t.labels, unit, std::move(gamma));
}

std::optional<CayleyTable> monoid_table_of(const PBAlgebra& alg) {
  CayleyTable t;
  t.labels = alg.labels();
  t.table.assign(alg.dim(), std::vector<std::size_t>(alg.dim(), 0));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const auto p = alg.product(i, j);
      if (p.size() != 1 || p[0].coeff != 1) return std::nullopt;
      t.table[i][j] = p[0].index;
    }
  return t;
}

std::vector<Transformation> enumerate_monoid(std::vector<Transformation> gens,
                                             const MonoidClosureOptions& options) {
  if (gens.empty()) throw Error(ErrorKind::DimensionMismatch, "no generators");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw Error(ErrorKind::DimensionMismatch, "generators act on different point sets");
    for (auto x : g.images)
      if (x >= degree) throw Error(ErrorKind::IndexOutOfRange, "image out of range in " + to_label(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Transformation> elements{Transformation::identity(degree)};
  std::set<Transformation> seen{elements.front()};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& g : gens) {
      auto y = compose(elements[next], g);
      if (seen.insert(y).second) {
        elements.push_back(std::move(y));
        if (elements.size() > options.max_size)
          throw Error(ErrorKind::SizeCapExceeded,
                      "monoid closure exceeds " + std::to_string(options.max_size) + " elements");
      }
    }
  }
  return elements;
}

CayleyTable monoid_closure(const std::vector<Transformation>& gens,
                           const MonoidClosureOptions& options) {
  const auto elements = enumerate_monoid(gens, options);
  std::map<Transformation, std::size_t> index;
  for (std::size_t x = 0; x < elements.size(); ++x) index.emplace(elements[x], x);

  CayleyTable t;
  for (const auto& e : elements) t.labels.push_back(to_label(e));
  t.table.assign(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t x = 0; x < elements.size(); ++x)
    for (std::size_t y = 0; y < elements.size(); ++y)
      t.table[x][y] = index.at(compose(elements[x], elements[y]));
  return t;
}

BasedModule coset_module(const CayleyTable& group, const std::vector<std::size_t>& subgroup) {
  const std::size_t unit = check_monoid_table(group);
  if (!is_group_table(group)) throw Error(ErrorKind::NotAGroup, "Cayley table is not a group");
  const std::size_t m = group.order();

  std::set<std::size_t> h(subgroup.begin(), subgroup.end());
  for (auto x : h)
    if (x >= m) throw Error(ErrorKind::IndexOutOfRange, "subgroup element out of range");
  if (!h.count(unit)) throw Error(ErrorKind::NotASubgroup, "subset does not contain the identity");
  for (auto x : h)
    for (auto y : h)
      if (!h.count(group.table[x][y]))
        throw Error(ErrorKind::NotASubgroup, "subset is not closed under multiplication");

  std::vector<std::size_t> coset_of(m, m);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < m; ++g) {
    if (coset_of[g] != m) continue;
    for (auto x : h) coset_of[group.table[g][x]] = reps.size();
    reps.push_back(g);
  }

  BasedModule out;
  for (auto r : reps) out.labels.push_back(group.labels[r] + "H");
  const auto d = static_cast<Eigen::Index>(reps.size());
  for (std::size_t g = 0; g < m; ++g) {
    RationalMatrix a = RationalMatrix::Zero(d, d);
    for (std::size_t c = 0; c < reps.size(); ++c)
      a(static_cast<Eigen::Index>(coset_of[group.table[g][reps[c]]]), static_cast<Eigen::Index>(c)) =
          Rational(1);
    out.actions.push_back(std::move(a));
  }
  return out;
}

}  // namespace pba
