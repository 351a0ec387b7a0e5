// Command-line front end: every command reads JSON files and prints one JSON
// document. Exit status 0 on success, 1 on bad input, 2 on a violated invariant.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "pba/io.hpp"

namespace {

using pba::io::Json;

struct GlobalOptions {
  std::string config_file;
  std::optional<std::size_t> jobs, samples, max_iterations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> precision, output;
  std::optional<double> tol_pf, tol_projector, tol_subspace, tol_character, tol_nonzero,
      tol_idempotent, tol_positivity, tol_cone, tol_eigenvalue;
  std::optional<std::size_t> max_dim, max_monoid, max_weyl_order, max_rank;
};

void add_global_options(CLI::App& app, GlobalOptions& g) {
  app.add_option("--config", g.config_file, "JSON file mirroring the run configuration")->check(CLI::ExistingFile);
  app.add_option("--jobs", g.jobs, "worker threads for per-cell work");
  app.add_option("--seed", g.seed, "seed of the c-vector sampler");
  app.add_option("--samples", g.samples, "c-vectors per cell, all-ones included");
  app.add_option("--precision", g.precision, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--output", g.output, "write the JSON result here instead of standard output");
  app.add_option("--tol-pf", g.tol_pf, "relative residual of power iteration");
  app.add_option("--max-iterations", g.max_iterations, "power iteration cap");
  app.add_option("--tol-projector", g.tol_projector, "limit projector convergence");
  app.add_option("--tol-subspace", g.tol_subspace, "relative rank threshold");
  app.add_option("--tol-character", g.tol_character, "character agreement");
  app.add_option("--tol-nonzero", g.tol_nonzero, "nonzero action threshold");
  app.add_option("--tol-idempotent", g.tol_idempotent, "e^2 = e residual");
  app.add_option("--tol-positivity", g.tol_positivity, "idempotent coefficient margin");
  app.add_option("--tol-cone", g.tol_cone, "kernel cone slack");
  app.add_option("--tol-eigenvalue", g.tol_eigenvalue, "lambda in the spectrum of the top");
  app.add_option("--max-dim", g.max_dim, "largest algebra accepted by validate");
  app.add_option("--max-monoid", g.max_monoid, "largest monoid closure");
  app.add_option("--max-weyl-order", g.max_weyl_order, "largest Weyl group");
  app.add_option("--max-rank", g.max_rank, "largest Weyl group rank");
}

pba::RunConfig resolve_config(const GlobalOptions& g) {
  pba::RunConfig cfg;
  if (!g.config_file.empty()) pba::io::apply_config(pba::io::read_file(g.config_file), cfg);
  const auto set = [](auto& target, const auto& value) {
    if (value) target = *value;
  };
  set(cfg.jobs, g.jobs);
  set(cfg.samples, g.samples);
  set(cfg.seed, g.seed);
  set(cfg.output, g.output);
  if (g.precision) cfg.precision = *g.precision == "float" ? pba::Precision::Float : pba::Precision::Exact;
  set(cfg.tol.pf_residual, g.tol_pf);
  set(cfg.tol.max_iterations, g.max_iterations);
  set(cfg.tol.projector, g.tol_projector);
  set(cfg.tol.subspace, g.tol_subspace);
  set(cfg.tol.character, g.tol_character);
  set(cfg.tol.nonzero, g.tol_nonzero);
  set(cfg.tol.idempotent, g.tol_idempotent);
  set(cfg.tol.positivity, g.tol_positivity);
  set(cfg.tol.cone, g.tol_cone);
  set(cfg.tol.eigenvalue, g.tol_eigenvalue);
  set(cfg.caps.max_dim, g.max_dim);
  set(cfg.caps.max_monoid, g.max_monoid);
  set(cfg.caps.max_weyl_order, g.max_weyl_order);
  set(cfg.caps.max_rank, g.max_rank);
  pba::io::check_config(cfg);
  return cfg;
}

pba::PBAlgebra load_algebra(const std::string& path, const pba::RunConfig& cfg) {
  auto alg = pba::io::algebra_from_json(pba::io::read_file(path));
  const auto report = pba::validate(alg, pba::ValidateOptions{cfg.caps.max_dim});
  if (!report.ok()) throw pba::Error(report.violations.front().kind, report.violations.front().detail);
  return alg;
}

pba::CellAnalysis load_analysis(const std::string& path, const pba::RunConfig& cfg) {
  return pba::CellAnalysis(load_algebra(path, cfg), cfg);
}

void check_left_cell(const pba::CellAnalysis& ctx, std::size_t k) {
  if (k >= ctx.cells().left.size())
    throw pba::Error(pba::ErrorKind::UnknownCellId, "left cell " + std::to_string(k) + " of " +
                                                        std::to_string(ctx.cells().left.size()));
}

pba::RationalVector parse_coeffs(const std::vector<std::string>& text, std::size_t n) {
  if (text.size() != n)
    throw pba::Error(pba::ErrorKind::DimensionMismatch,
                     std::to_string(text.size()) + " coefficients for dimension " + std::to_string(n));
  pba::RationalVector c(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) c(static_cast<Eigen::Index>(i)) = pba::parse_rational(text[i]);
  return c;
}

void emit(const Json& doc, const pba::RunConfig& cfg) {
  const std::string text = pba::io::dump(doc);
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw pba::Error(pba::ErrorKind::ParseError, "cannot write " + cfg.output);
  out << text;
}

int report_error(pba::ErrorKind kind, const std::string& message) {
  Json doc{{"error", {{"kind", std::string(pba::to_string(kind))}, {"message", message}}}};
  std::cerr << pba::io::dump(doc);
  return pba::is_invariant_violation(kind) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell theory of positively based algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  add_global_options(app, g);

  std::string file, module_file, group_file, cayley_file, trans_file, cartan_file, type;
  std::size_t left_cell = 0, two_sided = 0;
  std::optional<std::size_t> idem_left;
  std::vector<std::size_t> subgroup;
  std::vector<std::string> coeffs;
  bool with_projector = false;
  int exit_code = 0;
  std::function<Json(const pba::RunConfig&)> action;

  const auto algebra_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "algebra document")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "check the algebra axioms exactly");
  algebra_arg(validate);
  validate->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto alg = pba::io::algebra_from_json(pba::io::read_file(file));
      const auto report = pba::validate(alg, pba::ValidateOptions{cfg.caps.max_dim});
      if (!report.ok()) exit_code = 1;
      return pba::io::to_json(report);
    };
  });

  auto* gen = app.add_subcommand("gen", "generate an algebra or module document");
  gen->require_subcommand(1);
  auto* gen_group = gen->add_subcommand("group", "group algebra from a Cayley table");
  gen_group->add_option("--cayley", cayley_file, "Cayley table document")->required()->check(CLI::ExistingFile);
  gen_group->callback([&] {
    action = [&](const pba::RunConfig&) {
      const auto t = pba::io::cayley_from_json(pba::io::read_file(cayley_file));
      if (!pba::is_group_table(t)) throw pba::Error(pba::ErrorKind::NotAGroup, "table is not a group");
      return pba::io::to_json(pba::from_cayley_table(t));
    };
  });
  auto* gen_monoid = gen->add_subcommand("monoid", "transformation monoid algebra from generators");
  gen_monoid->add_option("--transformations", trans_file, "generator document")->required()->check(CLI::ExistingFile);
  gen_monoid->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto gens = pba::io::transformations_from_json(pba::io::read_file(trans_file));
      const auto t = pba::monoid_closure(gens, pba::MonoidClosureOptions{cfg.caps.max_monoid});
      return pba::io::to_json(pba::from_cayley_table(t));
    };
  });
  auto* gen_coset = gen->add_subcommand("coset", "permutation module on the cosets of a subgroup");
  gen_coset->add_option("--group", group_file, "Cayley table of the group")->required()->check(CLI::ExistingFile);
  gen_coset->add_option("--subgroup", subgroup, "element indices of the subgroup")->required()->delimiter(',');
  gen_coset->callback([&] {
    action = [&](const pba::RunConfig&) {
      const auto t = pba::io::cayley_from_json(pba::io::read_file(group_file));
      return pba::io::to_json(pba::coset_module(t, subgroup));
    };
  });
  auto* gen_weyl = gen->add_subcommand("weyl-kl", "group algebra of a Weyl group in the KL basis at v = 1");
  auto* type_opt = gen_weyl->add_option("--type", type, "finite type such as A3 or B2");
  auto* cartan_opt = gen_weyl->add_option("--cartan", cartan_file, "Cartan matrix document")->check(CLI::ExistingFile);
  type_opt->excludes(cartan_opt);
  gen_weyl->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      if (type.empty() == cartan_file.empty())
        throw pba::Error(pba::ErrorKind::ParseError, "give exactly one of --type and --cartan");
      const auto cartan = type.empty() ? pba::io::cartan_from_json(pba::io::read_file(cartan_file))
                                       : pba::cartan_matrix(type);
      const auto w = pba::enumerate_weyl(cartan, pba::WeylOptions{cfg.caps.max_weyl_order, cfg.caps.max_rank});
      return pba::io::to_json(pba::kl_algebra(w, pba::kl_basis(w)));
    };
  });

  auto* cells = app.add_subcommand("cells", "left, right and two-sided cells with their orders");
  algebra_arg(cells);
  cells->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto alg = load_algebra(file, cfg);
      return pba::io::to_json(alg, pba::compute_cells(alg));
    };
  });

  auto* cell_mod = app.add_subcommand("cell-module", "the cell module of a left cell");
  algebra_arg(cell_mod);
  cell_mod->add_option("--left-cell", left_cell)->required();
  cell_mod->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto alg = load_algebra(file, cfg);
      const auto cd = pba::compute_cells(alg);
      if (left_cell >= cd.left.size()) throw pba::Error(pba::ErrorKind::UnknownCellId, "left cell");
      return pba::io::to_json(pba::cell_module(alg, cd, left_cell));
    };
  });

  auto* pf = app.add_subcommand("pf", "Perron-Frobenius data of a(c) on a cell module");
  algebra_arg(pf);
  pf->add_option("--left-cell", left_cell)->required();
  pf->add_option("--coeffs", coeffs, "c_1,...,c_n as p/q; default all ones")->delimiter(',');
  pf->add_flag("--projector", with_projector, "include the projector v v_hat^T");
  pf->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto alg = load_algebra(file, cfg);
      const auto cd = pba::compute_cells(alg);
      if (left_cell >= cd.left.size()) throw pba::Error(pba::ErrorKind::UnknownCellId, "left cell");
      const auto c = coeffs.empty() ? pba::RationalVector(pba::RationalVector::Ones(static_cast<Eigen::Index>(alg.dim())))
                                    : parse_coeffs(coeffs, alg.dim());
      const auto m = pba::cell_module(alg, cd, left_cell);
      const auto data = pba::pf_eigendata(pba::pf_action(alg, m, c), cfg.tol);
      Json out{{"left_cell", left_cell}, {"labels", m.labels}, {"c", pba::io::to_json(c)}};
      const Json body = pba::io::to_json(data, with_projector);
      for (const auto& [k, v] : body.items()) out[k] = v;
      return out;
    };
  });

  auto* idem = app.add_subcommand("idempotent", "cell idempotent of an idempotent two-sided cell");
  algebra_arg(idem);
  idem->add_option("--two-sided-cell", two_sided)->required();
  idem->add_option("--left-cell", idem_left, "left cell inside it; default the representative");
  idem->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto ctx = load_analysis(file, cfg);
      if (two_sided >= ctx.cells().two_sided.size())
        throw pba::Error(pba::ErrorKind::UnknownCellId, "two-sided cell " + std::to_string(two_sided));
      const auto l = idem_left ? *idem_left : pba::representative_left_cell(ctx, two_sided);
      return pba::io::to_json(pba::cell_idempotent(ctx.algebra(), ctx.cells(), two_sided, l, cfg.tol),
                              ctx.algebra());
    };
  });

  auto* rad = app.add_subcommand("radical", "exact basis of the radical");
  algebra_arg(rad);
  rad->callback([&] {
    action = [&](const pba::RunConfig& cfg) { return pba::io::to_json(pba::radical(load_algebra(file, cfg))); };
  });

  auto* top = app.add_subcommand("top", "top of a cell module and its character");
  algebra_arg(top);
  top->add_option("--left-cell", left_cell)->required();
  top->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto ctx = load_analysis(file, cfg);
      check_left_cell(ctx, left_cell);
      const auto m = pba::cell_module(ctx.algebra(), ctx.cells(), left_cell);
      const auto d = static_cast<Eigen::Index>(m.dim());
      const auto t = pba::module_top(m, ctx.radical(), pba::Matrix<double>::Identity(d, d), cfg.tol.subspace);
      Json out{{"left_cell", left_cell}};
      const Json body = pba::io::to_json(t);
      for (const auto& [k, v] : body.items()) out[k] = v;
      return out;
    };
  });

  const auto cell_or_module = [&](CLI::App* sub) {
    algebra_arg(sub);
    auto* lc = sub->add_option("--left-cell", left_cell);
    auto* mf = sub->add_option("--module", module_file, "transitive module document")->check(CLI::ExistingFile);
    lc->excludes(mf);
    sub->parse_complete_callback([lc, mf] {
      if (lc->count() + mf->count() != 1) throw CLI::ValidationError("give exactly one of --left-cell and --module");
    });
  };

  auto* special = app.add_subcommand("special", "special subquotient of a cell module or transitive module");
  cell_or_module(special);
  special->final_callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto ctx = load_analysis(file, cfg);
      if (!module_file.empty())
        return pba::io::to_json(
            pba::special_of_transitive(ctx, pba::io::module_from_json(pba::io::read_file(module_file))));
      check_left_cell(ctx, left_cell);
      return pba::io::to_json(pba::special_of_cell(ctx, left_cell));
    };
  });

  auto* apex = app.add_subcommand("apex", "apex of a cell module or transitive module");
  cell_or_module(apex);
  apex->final_callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto ctx = load_analysis(file, cfg);
      pba::BasedModule m;
      Json out;
      if (!module_file.empty()) {
        m = pba::io::module_from_json(pba::io::read_file(module_file));
        out["module"] = module_file;
      } else {
        check_left_cell(ctx, left_cell);
        m = pba::cell_module(ctx.algebra(), ctx.cells(), left_cell);
        out["left_cell"] = left_cell;
      }
      const auto a = pba::apex(ctx, m);
      out["apex"] = a;
      out["members"] = Json::array();
      for (auto i : ctx.cells().two_sided.cells[a]) out["members"].push_back(ctx.algebra().label(i));
      return out;
    };
  });

  auto* classify = app.add_subcommand("classify", "one special module per idempotent two-sided cell");
  algebra_arg(classify);
  classify->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto ctx = load_analysis(file, cfg);
      Json out = Json::array();
      for (const auto& e : pba::classify_specials(ctx)) out.push_back(pba::io::to_json(e));
      return Json{{"count", out.size()}, {"specials", std::move(out)}};
    };
  });

  auto* verify = app.add_subcommand("verify", "run the full invariant battery");
  algebra_arg(verify);
  verify->callback([&] {
    action = [&](const pba::RunConfig& cfg) {
      const auto report = pba::verify(load_analysis(file, cfg));
      if (!report.ok()) exit_code = 2;
      return pba::io::to_json(report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto cfg = resolve_config(g);
    emit(action(cfg), cfg);
    return exit_code;
  } catch (const pba::Error& e) {
    return report_error(e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return report_error(pba::ErrorKind::ParseError, e.what());
  } catch (const std::exception& e) {
    return report_error(pba::ErrorKind::InvariantViolated, e.what());
  }
}
