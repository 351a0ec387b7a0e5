#include "pba/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pba::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_error("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) parse_error(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_index(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    parse_error(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

Rational as_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  parse_error("rational must be a \"p/q\" string or an integer");
}

std::vector<std::string> labels_or_default(const Json& doc, std::size_t n, const char* prefix) {
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) parse_error("\"labels\" must be an array of length " + std::to_string(n));
    for (const auto& s : l) {
      if (!s.is_string()) parse_error("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

RationalMatrix rational_matrix(const Json& rows, std::size_t n, const std::string& what) {
  if (!rows.is_array() || rows.size() != n) parse_error(what + " must have " + std::to_string(n) + " rows");
  RationalMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n)
      parse_error(what + " must have " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = as_rational(rows[r][c]);
  }
  return m;
}

std::string number_string(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_flat(const Json& v) {
  for (const auto& e : v)
    if (e.is_structured()) return false;
  return true;
}

void write(std::ostream& os, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * depth + 2), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(key).dump() << ": ";
        write(os, value, depth + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      if (is_flat(v)) {
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) os << ", ";
          write(os, v[i], depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write(os, v[i], depth + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << number_string(v.get<double>());
      return;
    default:
      os << v.dump();
  }
}

template <typename T>
void set_positive(const Json& obj, const char* key, T& target) {
  if (!obj.contains(key)) return;
  const auto& v = obj[key];
  if (!v.is_number()) throw Error(ErrorKind::InvalidConfig, std::string(key) + " must be a number");
  if constexpr (std::is_floating_point_v<T>) {
    target = v.get<double>();
  } else {
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw Error(ErrorKind::InvalidConfig, std::string(key) + " must be a positive integer");
    target = v.get<T>();
  }
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::InvalidConfig, where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw Error(ErrorKind::InvalidConfig, "unknown key \"" + key + "\" in " + where);
  }
}

Json labels_of(const PBAlgebra& alg, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(alg.label(i));
  return out;
}

Json family_json(const PBAlgebra& alg, const CellDecomposition& cd, CellKind kind) {
  const auto& f = cd.family(kind);
  Json cells = Json::array();
  for (std::size_t c = 0; c < f.size(); ++c) {
    Json cell;
    cell["id"] = c;
    cell["indices"] = f.cells[c];
    cell["members"] = labels_of(alg, f.cells[c]);
    if (kind == CellKind::TwoSided) {
      cell["idempotent"] = is_idempotent_cell(alg, cd, c);
      cell["left_cells"] = cd.left_cells_in(c);
    } else {
      cell["two_sided_cell"] = cd.two_sided.cell_of[f.cells[c].front()];
    }
    cells.push_back(std::move(cell));
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : f.edges) edges.push_back(Json::array({lo, hi}));
  return Json{{"cells", std::move(cells)}, {"edges", std::move(edges)}};
}

}  // namespace

std::string rational_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string dump(const Json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << "\n";
  return os.str();
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

Json to_json(const PBAlgebra& alg) {
  Json gamma = Json::array();
  for (const auto& c : alg.constants())
    gamma.push_back(Json::array({c.i, c.j, c.k, rational_string(c.value)}));
  return Json{{"dim", alg.dim()}, {"labels", alg.labels()}, {"unit_index", alg.unit_index()},
              {"gamma", std::move(gamma)}};
}

PBAlgebra algebra_from_json(const Json& doc) {
  const std::size_t n = as_index(field(doc, "dim"), "dim");
  auto labels = labels_or_default(doc, n, "a");
  const std::size_t unit = as_index(field(doc, "unit_index"), "unit_index");
  const auto& g = field(doc, "gamma");
  if (!g.is_array()) parse_error("\"gamma\" must be an array");
  std::vector<StructureConstant> gamma;
  gamma.reserve(g.size());
  for (const auto& t : g) {
    if (!t.is_array() || t.size() != 4) parse_error("gamma entries are [i, j, k, \"p/q\"]");
    gamma.push_back({as_index(t[0], "i"), as_index(t[1], "j"), as_index(t[2], "k"), as_rational(t[3])});
  }
  return PBAlgebra(std::move(labels), unit, std::move(gamma));
}

Json to_json(const BasedModule& m) {
  Json actions = Json::array();
  for (const auto& a : m.actions) actions.push_back(to_json(a));
  return Json{{"dim", m.dim()}, {"labels", m.labels}, {"actions", std::move(actions)}};
}

BasedModule module_from_json(const Json& doc) {
  const std::size_t d = as_index(field(doc, "dim"), "dim");
  BasedModule m;
  m.labels = labels_or_default(doc, d, "m");
  const auto& acts = field(doc, "actions");
  if (!acts.is_array()) parse_error("\"actions\" must be an array of matrices");
  for (std::size_t i = 0; i < acts.size(); ++i)
    m.actions.push_back(rational_matrix(acts[i], d, "action " + std::to_string(i)));
  return m;
}

CayleyTable cayley_from_json(const Json& doc) {
  const auto& rows = field(doc, "table");
  if (!rows.is_array()) parse_error("\"table\" must be an array of rows");
  CayleyTable t;
  t.labels = labels_or_default(doc, rows.size(), "g");
  for (const auto& r : rows) {
    if (!r.is_array()) parse_error("table rows must be arrays");
    std::vector<std::size_t> row;
    for (const auto& x : r) row.push_back(as_index(x, "table entry"));
    t.table.push_back(std::move(row));
  }
  return t;
}

std::vector<Transformation> transformations_from_json(const Json& doc) {
  const auto& gens = field(doc, "generators");
  if (!gens.is_array()) parse_error("\"generators\" must be an array");
  std::vector<Transformation> out;
  for (const auto& g : gens) {
    if (!g.is_array()) parse_error("a generator is an array of images");
    Transformation t;
    for (const auto& x : g) t.images.push_back(as_index(x, "image"));
    out.push_back(std::move(t));
  }
  return out;
}

IntMatrix cartan_from_json(const Json& doc) {
  const Json& rows = doc.is_object() ? field(doc, "cartan") : doc;
  if (!rows.is_array() || rows.empty()) parse_error("Cartan matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix c(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) parse_error("Cartan matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number_integer()) parse_error("Cartan entries must be integers");
      c(r, k) = x.get<long long>();
    }
  }
  return c;
}

void apply_config(const Json& doc, RunConfig& config) {
  reject_unknown(doc, {"tolerances", "caps", "seed", "samples", "jobs", "precision", "output"}, "config");
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    reject_unknown(t,
                   {"pf_residual", "max_iterations", "projector", "subspace", "character", "nonzero",
                    "idempotent", "positivity", "cone", "eigenvalue"},
                   "tolerances");
    auto& tol = config.tol;
    set_positive(t, "pf_residual", tol.pf_residual);
    set_positive(t, "max_iterations", tol.max_iterations);
    set_positive(t, "projector", tol.projector);
    set_positive(t, "subspace", tol.subspace);
    set_positive(t, "character", tol.character);
    set_positive(t, "nonzero", tol.nonzero);
    set_positive(t, "idempotent", tol.idempotent);
    set_positive(t, "positivity", tol.positivity);
    set_positive(t, "cone", tol.cone);
    set_positive(t, "eigenvalue", tol.eigenvalue);
  }
  if (doc.contains("caps")) {
    const auto& c = doc["caps"];
    reject_unknown(c, {"max_dim", "max_monoid", "max_weyl_order", "max_rank"}, "caps");
    set_positive(c, "max_dim", config.caps.max_dim);
    set_positive(c, "max_monoid", config.caps.max_monoid);
    set_positive(c, "max_weyl_order", config.caps.max_weyl_order);
    set_positive(c, "max_rank", config.caps.max_rank);
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw Error(ErrorKind::InvalidConfig, "seed must be a nonnegative integer");
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  set_positive(doc, "samples", config.samples);
  set_positive(doc, "jobs", config.jobs);
  if (doc.contains("precision")) {
    const auto p = doc["precision"];
    if (p == "exact") config.precision = Precision::Exact;
    else if (p == "float") config.precision = Precision::Float;
    else throw Error(ErrorKind::InvalidConfig, "precision must be \"exact\" or \"float\"");
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw Error(ErrorKind::InvalidConfig, "output must be a string");
    config.output = doc["output"].get<std::string>();
  }
  check_config(config);
}

void check_config(const RunConfig& config) {
  const auto& t = config.tol;
  for (double x : {t.pf_residual, t.projector, t.subspace, t.character, t.nonzero, t.idempotent,
                   t.positivity, t.cone, t.eigenvalue})
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorKind::InvalidConfig, "tolerances must be positive");
  const auto& c = config.caps;
  for (std::size_t x : {t.max_iterations, c.max_dim, c.max_monoid, c.max_weyl_order, c.max_rank,
                        config.samples, config.jobs})
    if (x < 1) throw Error(ErrorKind::InvalidConfig, "caps, samples and jobs must be at least 1");
}

Json to_json(const ValidationReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations)
    v.push_back(Json{{"kind", std::string(to_string(x.kind))}, {"where", x.where}, {"detail", x.detail}});
  return Json{{"ok", report.ok()}, {"violations", std::move(v)}};
}

Json to_json(const PBAlgebra& alg, const CellDecomposition& cd) {
  return Json{{"left", family_json(alg, cd, CellKind::Left)},
              {"right", family_json(alg, cd, CellKind::Right)},
              {"two_sided", family_json(alg, cd, CellKind::TwoSided)}};
}

Json to_json(const PFData& pf, bool with_projector) {
  Json out{{"lambda", pf.lambda},
           {"v", to_json(pf.v)},
           {"v_hat", to_json(pf.v_hat)},
           {"residual_right", pf.residual_right},
           {"residual_left", pf.residual_left},
           {"iterations", pf.iterations}};
  if (with_projector) out["projector"] = to_json(pf.projector);
  return out;
}

Json to_json(const IdempotentData& e, const PBAlgebra& alg) {
  return Json{{"two_sided_cell", e.two_sided_cell},
              {"left_cell", e.left_cell},
              {"indices", e.indices},
              {"labels", labels_of(alg, e.indices)},
              {"coefficients", to_json(e.coefficients)},
              {"lambda", e.lambda},
              {"residual", e.residual},
              {"positivity_margin", e.positivity_margin},
              {"squarings", e.squarings}};
}

Json to_json(const Radical& rad) {
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < rad.basis.cols(); ++c) basis.push_back(to_json(RationalVector(rad.basis.col(c))));
  return Json{{"dim", rad.dim()}, {"nilpotency_index", rad.nilpotency_index}, {"basis", std::move(basis)}};
}

Json to_json(const ModuleTop& top) {
  return Json{{"dim", top.dim()},
              {"space_dim", top.space.cols()},
              {"radical_dim", top.radical.cols()},
              {"character", to_json(top.character.traces)}};
}

Json to_json(const SpecialReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"c", to_json(s.c)},
                           {"lambda", s.pf.lambda},
                           {"residual_right", s.pf.residual_right},
                           {"top_dim", s.top.dim()},
                           {"top_eigenvalue_error", s.top_eigenvalue_error},
                           {"character", to_json(s.top.character.traces)}});
  Json out{{"source", r.source}};
  out["left_cell"] = r.left_cell ? Json(*r.left_cell) : Json(nullptr);
  out["apex"] = r.apex;
  out["lambda"] = r.lambda;
  out["dim"] = r.dim;
  out["character"] = to_json(r.character.traces);
  out["sample_spread"] = r.sample_spread;
  out["kernel_cone_ok"] = r.kernel_cone_ok;
  out["kernel_cone_exact"] = r.kernel_cone_exact;
  out["samples"] = std::move(samples);
  return out;
}

Json to_json(const ClassifiedSpecial& e) {
  return Json{{"two_sided_cell", e.two_sided_cell}, {"left_cell", e.left_cell}, {"special", to_json(e.report)}};
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
  return Json{{"ok", report.ok()}, {"failures", report.failures()}, {"checks", std::move(checks)}};
}

Json to_json(const Vector<double>& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Matrix<double>& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vector<double>(m.row(r).transpose())));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_string(v(i)));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RationalVector(m.row(r).transpose())));
  return out;
}

}  // namespace pba::io
