#include "pba/cells.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace pba {

namespace {

using Graph = std::vector<std::vector<std::size_t>>;

std::vector<std::vector<bool>> reachability(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::size_t> stack;
  for (std::size_t src = 0; src < n; ++src) {
    auto& row = reach[src];
    row[src] = true;
    stack.assign(1, src);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : g[v])
        if (!row[w]) {
          row[w] = true;
          stack.push_back(w);
        }
    }
  }
  return reach;
}

/// Groups indices into classes of mutual reachability, then numbers the
/// classes by Kahn's algorithm, always taking the ready class with the
/// smallest priority key.
CellFamily build_family(const std::vector<std::vector<bool>>& reach,
                        const std::function<std::tuple<std::size_t, std::size_t>(
                            const std::vector<std::size_t>&)>& priority) {
  const std::size_t n = reach.size();
  std::vector<std::size_t> provisional(n, n);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (provisional[i] != n) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        provisional[j] = classes.size();
        members.push_back(j);
      }
    classes.push_back(std::move(members));
  }

  const std::size_t c = classes.size();
  std::vector<std::vector<bool>> creach(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      creach[a][b] = reach[classes[a].front()][classes[b].front()];

  std::vector<std::size_t> indegree(c, 0);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      if (a != b && creach[a][b]) ++indegree[b];
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t a = 0; a < c; ++a)
    if (indegree[a] == 0) {
      const auto [p0, p1] = priority(classes[a]);
      ready.emplace(p0, p1, a);
    }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto a = std::get<2>(ready.top());
    ready.pop();
    order.push_back(a);
    for (std::size_t b = 0; b < c; ++b)
      if (a != b && creach[a][b] && --indegree[b] == 0) {
        const auto [p0, p1] = priority(classes[b]);
        ready.emplace(p0, p1, b);
      }
  }

  CellFamily f;
  std::vector<std::size_t> final_id(c);
  for (std::size_t pos = 0; pos < c; ++pos) final_id[order[pos]] = pos;
  f.cells.resize(c);
  for (std::size_t a = 0; a < c; ++a) f.cells[final_id[a]] = classes[a];
  f.cell_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.cell_of[i] = final_id[provisional[i]];
  f.reach.assign(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) f.reach[final_id[a]][final_id[b]] = creach[a][b];

  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (a == b || !f.reach[a][b]) continue;
      bool covering = true;
      for (std::size_t m = 0; m < c && covering; ++m)
        if (m != a && m != b && f.reach[a][m] && f.reach[m][b]) covering = false;
      if (covering) f.edges.emplace_back(a, b);
    }
  return f;
}

}  // namespace

const CellFamily& CellDecomposition::family(CellKind kind) const {
  switch (kind) {
    case CellKind::Left: return left;
    case CellKind::Right: return right;
    case CellKind::TwoSided: return two_sided;
  }
  return two_sided;
}

std::vector<std::size_t> CellDecomposition::left_cells_in(std::size_t j) const {
  if (j >= two_sided.size())
    throw Error(ErrorKind::UnknownCellId, "two-sided cell " + std::to_string(j));
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < left.size(); ++l)
    if (two_sided_of_left(l) == j) out.push_back(l);
  return out;
}

CellDecomposition compute_cells(const PBAlgebra& alg) {
  const std::size_t n = alg.dim();
  Graph left(n), right(n), both(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i) {
      for (auto k : star(alg, s, i)) left[i].push_back(k);
      for (auto k : star(alg, i, s)) right[i].push_back(k);
    }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto* g : {&left, &right}) {
      auto& adj = (*g)[i];
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    std::set_union(left[i].begin(), left[i].end(), right[i].begin(), right[i].end(),
                   std::back_inserter(both[i]));
  }

  CellDecomposition cd;
  cd.two_sided = build_family(reachability(both), [](const std::vector<std::size_t>& members) {
    return std::tuple<std::size_t, std::size_t>{members.front(), 0};
  });
  const auto by_two_sided = [&cd](const std::vector<std::size_t>& members) {
    return std::tuple<std::size_t, std::size_t>{cd.two_sided.cell_of[members.front()],
                                                members.front()};
  };
  cd.left = build_family(reachability(left), by_two_sided);
  cd.right = build_family(reachability(right), by_two_sided);
  return cd;
}

bool is_idempotent_cell(const PBAlgebra& alg, const CellDecomposition& cd, std::size_t j) {
  if (j >= cd.two_sided.size())
    throw Error(ErrorKind::UnknownCellId, "two-sided cell " + std::to_string(j));
  const auto& members = cd.two_sided.cells[j];
  for (auto a : members)
    for (auto b : members)
      for (auto k : star(alg, a, b))
        if (cd.two_sided.cell_of[k] == j) return true;
  return false;
}

bool cell_leq(const CellDecomposition& cd, CellKind kind, std::size_t c1, std::size_t c2) {
  const auto& f = cd.family(kind);
  if (c1 >= f.size() || c2 >= f.size())
    throw Error(ErrorKind::UnknownCellId,
                "cell id " + std::to_string(std::max(c1, c2)) + " of " + std::to_string(f.size()));
  return f.reach[c1][c2];
}

std::vector<std::size_t> maximal_left_cells_in(const CellDecomposition& cd, std::size_t j) {
  const auto cells = cd.left_cells_in(j);
  std::vector<std::size_t> out;
  for (auto a : cells) {
    bool maximal = true;
    for (auto b : cells)
      if (a != b && cd.left.reach[a][b]) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> minimal_left_cells_in(const CellDecomposition& cd, std::size_t j) {
  const auto cells = cd.left_cells_in(j);
  std::vector<std::size_t> out;
  for (auto a : cells) {
    bool minimal = true;
    for (auto b : cells)
      if (a != b && cd.left.reach[b][a]) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace pba
