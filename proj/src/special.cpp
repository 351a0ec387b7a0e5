#include "pba/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "pba/parallel.hpp"

namespace pba {

namespace {

std::string describe(const SimpleCharacter& ch) {
  std::ostringstream os;
  os.precision(10);
  os << "dim " << ch.dim << " [";
  for (Eigen::Index i = 0; i < ch.traces.size(); ++i) os << (i ? " " : "") << ch.traces(i);
  os << "]";
  return os.str();
}

bool acts_nonzero(const RationalMatrix& a) { return !a.isZero(); }

}  // namespace

CellAnalysis::CellAnalysis(PBAlgebra alg, RunConfig config)
    : alg_(std::move(alg)),
      config_(std::move(config)),
      cd_(compute_cells(alg_)),
      rad_(pba::radical(alg_)),
      gram_(pba::trace_form(alg_)) {}

std::vector<RationalVector> default_c_samples(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<RationalVector> out;
  if (count == 0) return out;
  out.push_back(RationalVector::Ones(static_cast<Eigen::Index>(n)));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 1; s < count; ++s) {
    RationalVector c(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      while (true) {
        const auto p = static_cast<long>(rng() % 100 + 1);
        const auto q = static_cast<long>(rng() % 100 + 1);
        if (10 * p >= q && 10 * q >= p) {
          c(i) = Rational(p) / Rational(q);
          break;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> acting_cells(const CellAnalysis& ctx, const BasedModule& m) {
  const auto& cd = ctx.cells();
  std::vector<bool> acting(cd.two_sided.size(), false);
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (acts_nonzero(m.actions[i])) acting[cd.two_sided.cell_of[i]] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < acting.size(); ++j)
    if (acting[j]) out.push_back(j);
  return out;
}

std::size_t apex(const CellAnalysis& ctx, const BasedModule& m) {
  if (!is_transitive(m)) throw Error(ErrorKind::NotTransitive, "apex needs a transitive module");
  const auto& cd = ctx.cells();
  const auto acting = acting_cells(ctx, m);
  std::vector<std::size_t> maxima;
  for (auto a : acting)
    if (std::all_of(acting.begin(), acting.end(), [&](std::size_t b) { return cd.two_sided.reach[b][a]; }))
      maxima.push_back(a);
  if (maxima.size() != 1)
    throw Error(ErrorKind::NoMaximum, std::to_string(acting.size()) +
                                          " acting two-sided cells without a unique maximum");
  const auto top = maxima.front();
  if (!is_idempotent_cell(ctx.algebra(), cd, top))
    throw Error(ErrorKind::NotIdempotentApex, "apex " + std::to_string(top) + " is not idempotent");
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (index_leq_cell(cd, i, top) && !acts_nonzero(m.actions[i]))
      throw Error(ErrorKind::InvariantViolated,
                  ctx.algebra().label(i) + " lies below the apex but acts as zero");
  return top;
}

SpecialReport special_of_module(const CellAnalysis& ctx, const BasedModule& m,
                                const std::vector<RationalVector>& samples, std::string source) {
  if (samples.empty()) throw Error(ErrorKind::PreconditionViolated, "no c-samples");
  const auto& tol = ctx.tol();
  SpecialReport rep;
  rep.source = std::move(source);
  rep.apex = apex(ctx, m);

  for (const auto& c : samples) {
    SampleResult s;
    s.c = c;
    const RationalMatrix a = pf_action(ctx.algebra(), m, c);
    s.pf = pf_eigendata(a, tol);
    const Matrix<double> v_space = generated_submodule(m, s.pf.v, tol.subspace);
    s.top = module_top(m, ctx.radical(), v_space, tol.subspace, rep.source);

    Matrix<double> induced = Matrix<double>::Zero(s.top.quotient.cols(), s.top.quotient.cols());
    for (std::size_t i = 0; i < s.top.actions.size(); ++i)
      induced += to_double(c(static_cast<Eigen::Index>(i))) * s.top.actions[i];
    Eigen::EigenSolver<Matrix<double>> es(induced, false);
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      best = std::min(best, std::abs(es.eigenvalues()(k) - std::complex<double>(s.pf.lambda, 0.0)));
    s.top_eigenvalue_error = best / std::max(1.0, s.pf.lambda);
    rep.samples.push_back(std::move(s));
  }

  const auto& first = rep.samples.front();
  for (std::size_t a = 0; a < rep.samples.size(); ++a)
    for (std::size_t b = a + 1; b < rep.samples.size(); ++b) {
      const double d = character_distance(rep.samples[a].top.character, rep.samples[b].top.character);
      rep.sample_spread = std::max(rep.sample_spread, d);
      if (!(d < tol.character))
        throw Error(ErrorKind::CSampleDisagreement,
                    rep.source + ": sample " + std::to_string(a) + " gives " +
                        describe(rep.samples[a].top.character) + ", sample " + std::to_string(b) +
                        " gives " + describe(rep.samples[b].top.character));
    }
  rep.lambda = first.pf.lambda;
  rep.character = first.top.character;
  rep.dim = first.top.dim();

  const auto& kernel = first.top.radical;
  std::optional<RationalMatrix> exact;
  if (ctx.config().precision == Precision::Exact) exact = rationalize_subspace(kernel, tol.subspace);
  rep.kernel_cone_exact = exact.has_value();
  rep.kernel_cone_ok = exact ? kernel_cone_check(*exact) : kernel_cone_check(kernel, tol.cone);
  return rep;
}

SpecialReport special_of_cell(const CellAnalysis& ctx, std::size_t left_cell,
                              const std::vector<RationalVector>& samples) {
  const auto m = cell_module(ctx.algebra(), ctx.cells(), left_cell);
  auto rep = special_of_module(ctx, m, samples, "left cell " + std::to_string(left_cell));
  rep.left_cell = left_cell;
  return rep;
}

SpecialReport special_of_cell(const CellAnalysis& ctx, std::size_t left_cell) {
  return special_of_cell(
      ctx, left_cell,
      default_c_samples(ctx.algebra().dim(), ctx.config().samples, ctx.config().seed));
}

std::size_t representative_left_cell(const CellAnalysis& ctx, std::size_t two_sided_cell) {
  const auto& cd = ctx.cells();
  const auto maximal = maximal_left_cells_in(cd, two_sided_cell);
  return *std::min_element(maximal.begin(), maximal.end(), [&](std::size_t a, std::size_t b) {
    return cd.left.cells[a].front() < cd.left.cells[b].front();
  });
}

SpecialReport special_of_transitive(const CellAnalysis& ctx, const BasedModule& m,
                                    const std::vector<RationalVector>& samples) {
  if (!is_transitive(m)) throw Error(ErrorKind::NotTransitive, "module is not transitive");
  auto rep = special_of_module(ctx, m, samples, "transitive module");
  const auto l = representative_left_cell(ctx, rep.apex);
  const auto cell = special_of_cell(ctx, l, samples);
  if (!same_character(rep.character, cell.character, ctx.tol().character))
    throw Error(ErrorKind::InvariantViolated,
                "special of the module is " + describe(rep.character) + " but left cell " +
                    std::to_string(l) + " of its apex gives " + describe(cell.character));
  return rep;
}

SpecialReport special_of_transitive(const CellAnalysis& ctx, const BasedModule& m) {
  return special_of_transitive(
      ctx, m, default_c_samples(ctx.algebra().dim(), ctx.config().samples, ctx.config().seed));
}

std::vector<ClassifiedSpecial> classify_specials(const CellAnalysis& ctx) {
  const auto& cd = ctx.cells();
  std::vector<std::size_t> idempotent;
  for (std::size_t j = 0; j < cd.two_sided.size(); ++j)
    if (is_idempotent_cell(ctx.algebra(), cd, j)) idempotent.push_back(j);
  const auto samples =
      default_c_samples(ctx.algebra().dim(), ctx.config().samples, ctx.config().seed);
  auto out = parallel_map(idempotent.size(), ctx.config().jobs, [&](std::size_t t) {
    const auto j = idempotent[t];
    const auto l = representative_left_cell(ctx, j);
    return ClassifiedSpecial{j, l, special_of_cell(ctx, l, samples)};
  });
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (same_character(out[a].report.character, out[b].report.character, ctx.tol().character))
        throw Error(ErrorKind::DuplicateSpecialAcrossCells,
                    "two-sided cells " + std::to_string(out[a].two_sided_cell) + " and " +
                        std::to_string(out[b].two_sided_cell) + " share the special " +
                        describe(out[a].report.character));
  return out;
}

bool j_invariance_check(const CellAnalysis& ctx, std::size_t two_sided_cell) {
  const auto cells = ctx.cells().left_cells_in(two_sided_cell);
  const auto samples =
      default_c_samples(ctx.algebra().dim(), ctx.config().samples, ctx.config().seed);
  const auto reports = parallel_map(cells.size(), ctx.config().jobs,
                                    [&](std::size_t t) { return special_of_cell(ctx, cells[t], samples); });
  for (const auto& r : reports)
    if (r.apex != reports.front().apex ||
        !same_character(r.character, reports.front().character, ctx.tol().character))
      return false;
  return true;
}

IncomparabilityStatus incomparability_check(const CellAnalysis& ctx, std::size_t two_sided_cell) {
  const auto& cd = ctx.cells();
  const auto cells = cd.left_cells_in(two_sided_cell);
  const auto j = apex(ctx, cell_module(ctx.algebra(), cd, cells.front()));
  const auto m = mj_module(ctx.algebra(), cd, two_sided_cell);
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (!index_leq_cell(cd, i, j) && acts_nonzero(m.actions[i]))
      return IncomparabilityStatus::HypothesisFails;
  for (auto a : cells)
    for (auto b : cells)
      if (a != b && cd.left.reach[a][b]) return IncomparabilityStatus::Fails;
  return IncomparabilityStatus::Holds;
}

IdempotentData good_cell_check(const CellAnalysis& ctx, std::size_t left_cell) {
  const auto j = apex(ctx, cell_module(ctx.algebra(), ctx.cells(), left_cell));
  return cell_idempotent(ctx.algebra(), ctx.cells(), j, representative_left_cell(ctx, j), ctx.tol());
}

std::size_t nonzero_pattern_violations(const CellAnalysis& ctx, const SpecialReport& report) {
  std::size_t bad = 0;
  for (const auto& s : report.samples) {
    for (std::size_t i = 0; i < s.top.actions.size(); ++i) {
      const bool nonzero = s.top.actions[i].size() > 0 &&
                           s.top.actions[i].cwiseAbs().maxCoeff() > ctx.tol().nonzero;
      if (nonzero != index_leq_cell(ctx.cells(), i, report.apex)) ++bad;
    }
  }
  return bad;
}

}  // namespace pba
