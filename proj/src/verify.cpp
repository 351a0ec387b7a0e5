#include "pba/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "pba/parallel.hpp"

namespace pba {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Check run_check(std::string name, const std::function<Check()>& body) {
  try {
    Check c = body();
    c.name = std::move(name);
    return c;
  } catch (const Error& e) {
    return Check{std::move(name), false, false, e.what()};
  }
}

Check fail(std::string detail) { return Check{{}, false, false, std::move(detail)}; }
Check pass(std::string detail = {}) { return Check{{}, true, false, std::move(detail)}; }

Vector<double> module_character(const BasedModule& m) {
  Vector<double> chi(static_cast<Eigen::Index>(m.actions.size()));
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    chi(static_cast<Eigen::Index>(i)) = to_double(m.actions[i].trace());
  return chi;
}

struct CellResult {
  std::size_t left_cell = 0;
  std::optional<SpecialReport> report;
  std::size_t apex = 0;
  std::string error;
};

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

std::vector<Check> exactness_checks(const PBAlgebra& alg, const CellDecomposition& cd, const Caps& caps) {
  std::vector<Check> out;
  out.push_back(run_check("validate", [&] {
    const auto report = validate(alg, ValidateOptions{caps.max_dim});
    if (report.ok()) return pass("associativity, unit and nonnegativity hold exactly");
    return fail(std::to_string(report.violations.size()) + " violations, first: " +
                report.violations.front().detail);
  }));
  out.push_back(run_check("left_ideal_closure", [&] {
    for (std::size_t l = 0; l < cd.left.size(); ++l) {
      if (!is_left_ideal_span(alg, upper_left_set(cd, l)))
        return fail("M_L not closed for left cell " + std::to_string(l));
      if (!is_left_ideal_span(alg, strict_upper_left_set(cd, l)))
        return fail("N_L not closed for left cell " + std::to_string(l));
    }
    return pass(std::to_string(cd.left.size()) + " left cells");
  }));
  out.push_back(run_check("cell_module_axioms", [&] {
    for (std::size_t l = 0; l < cd.left.size(); ++l) {
      const auto m = cell_module(alg, cd, l);
      const auto bad = check_module(alg, m);
      if (!bad.empty())
        return fail("cell module " + std::to_string(l) + ": " + std::to_string(bad.size()) +
                    " violations");
      if (!is_transitive(m)) return fail("cell module " + std::to_string(l) + " is not transitive");
    }
    return pass("all cell modules are transitive based modules");
  }));
  return out;
}

VerifyReport verify(const CellAnalysis& ctx) {
  const auto& alg = ctx.algebra();
  const auto& cd = ctx.cells();
  const auto& tol = ctx.tol();
  VerifyReport rep;
  rep.checks = exactness_checks(alg, cd, ctx.config().caps);

  rep.checks.push_back(run_check("radical", [&] {
    return pass("dim " + std::to_string(ctx.radical().dim()) + ", nilpotency index " +
                std::to_string(ctx.radical().nilpotency_index));
  }));

  const auto samples = default_c_samples(alg.dim(), ctx.config().samples, ctx.config().seed);
  const auto cells = parallel_map(cd.left.size(), ctx.config().jobs, [&](std::size_t l) {
    CellResult r;
    r.left_cell = l;
    try {
      r.apex = apex(ctx, cell_module(alg, cd, l));
      r.report = special_of_cell(ctx, l, samples);
    } catch (const Error& e) {
      r.error = e.what();
    }
    return r;
  });

  const auto per_cell = [&](std::string name, const std::function<std::string(const CellResult&)>& f) {
    rep.checks.push_back(run_check(std::move(name), [&] {
      for (const auto& c : cells) {
        if (!c.report) return fail("left cell " + std::to_string(c.left_cell) + ": " + c.error);
        const std::string problem = f(c);
        if (!problem.empty()) return fail("left cell " + std::to_string(c.left_cell) + ": " + problem);
      }
      return pass(std::to_string(cells.size()) + " left cells");
    }));
  };

  per_cell("apex", [&](const CellResult& c) -> std::string {
    if (!is_idempotent_cell(alg, cd, c.apex)) return "apex is not idempotent";
    if (c.report->apex != c.apex) return "apex differs between computations";
    return {};
  });
  per_cell("special_c_independence", [&](const CellResult& c) -> std::string {
    if (c.report->samples.size() < samples.size()) return "missing samples";
    if (c.report->sample_spread >= tol.character)
      return "character spread " + fmt(c.report->sample_spread);
    return {};
  });
  per_cell("special_eigenvalue_on_top", [&](const CellResult& c) -> std::string {
    for (const auto& s : c.report->samples)
      if (s.top_eigenvalue_error > tol.eigenvalue)
        return "lambda is " + fmt(s.top_eigenvalue_error) + " away from the top's spectrum";
    return {};
  });
  per_cell("kernel_cone", [&](const CellResult& c) -> std::string {
    return c.report->kernel_cone_ok ? "" : "kernel meets the positive cone";
  });
  per_cell("nonzero_pattern", [&](const CellResult& c) -> std::string {
    const auto bad = nonzero_pattern_violations(ctx, *c.report);
    return bad == 0 ? "" : std::to_string(bad) + " basis elements violate the pattern";
  });

  for (std::size_t j = 0; j < cd.two_sided.size(); ++j) {
    const std::string id = std::to_string(j);
    rep.checks.push_back(run_check("j_invariance[" + id + "]", [&] {
      return j_invariance_check(ctx, j) ? pass() : fail("specials or apexes differ across left cells");
    }));
    rep.checks.push_back(run_check("incomparability[" + id + "]", [&] {
      switch (incomparability_check(ctx, j)) {
        case IncomparabilityStatus::Holds: return pass();
        case IncomparabilityStatus::Fails: return fail("two left cells are comparable");
        case IncomparabilityStatus::HypothesisFails: break;
      }
      Check c = pass("hypothesis does not hold; not asserted");
      c.skipped = true;
      return c;
    }));
    rep.checks.push_back(run_check("cell_morphisms[" + id + "]", [&] {
      std::size_t built = 0;
      for (auto target : minimal_left_cells_in(cd, j))
        for (auto source : cd.left_cells_in(j)) {
          try {
            cell_morphism(alg, cd, source, target);
            ++built;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoWitness) throw;
          }
        }
      return pass(std::to_string(built) + " intertwiners checked exactly");
    }));
    if (is_idempotent_cell(alg, cd, j)) {
      rep.checks.push_back(run_check("idempotent[" + id + "]", [&] {
        const auto e = cell_idempotent(alg, cd, j, representative_left_cell(ctx, j), tol);
        return pass("residual " + fmt(e.residual) + ", margin " + fmt(e.positivity_margin));
      }));
    }
  }

  std::vector<ClassifiedSpecial> classified;
  rep.checks.push_back(run_check("classify", [&] {
    classified = classify_specials(ctx);
    std::size_t idempotent = 0;
    for (std::size_t j = 0; j < cd.two_sided.size(); ++j) idempotent += is_idempotent_cell(alg, cd, j);
    if (classified.size() != idempotent) return fail("one special per idempotent cell expected");
    return pass(std::to_string(classified.size()) + " pairwise distinct specials");
  }));

  if (ctx.semisimple()) {
    rep.checks.push_back(run_check("semisimple_cells_idempotent", [&] {
      for (std::size_t j = 0; j < cd.two_sided.size(); ++j)
        if (!is_idempotent_cell(alg, cd, j)) return fail("cell " + std::to_string(j));
      return pass();
    }));
    per_cell("semisimple_special_dim", [&](const CellResult& c) -> std::string {
      const auto expected = cd.left_cells_in(c.apex).size();
      if (c.report->dim != expected)
        return "dim " + std::to_string(c.report->dim) + ", expected " + std::to_string(expected);
      return {};
    });
    per_cell("semisimple_special_multiplicity", [&](const CellResult& c) -> std::string {
      const Vector<double> chi_cell = module_character(cell_module(alg, cd, c.left_cell));
      const Vector<double>& chi = c.report->character.traces;
      const double mult = character_pairing(ctx.trace_form(), chi_cell, chi);
      if (std::abs(mult - 1.0) > tol.character) return "multiplicity " + fmt(mult);
      const Vector<double> defect = chi_cell - chi;
      for (const auto& s : classified) {
        const double p = character_pairing(ctx.trace_form(), defect, s.report.character.traces);
        if (std::abs(p) > tol.character)
          return "defect pairs to " + fmt(p) + " with the special of cell " +
                 std::to_string(s.two_sided_cell);
      }
      return {};
    });
  }
  return rep;
}

}  // namespace pba
