#include "findim/io.hpp"

#include <fstream>

namespace findim {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw Error("expected a rational number (integer or \"p/q\" string), got " + j.dump());
}

std::size_t parse_vertex(const std::string& spec, std::size_t from, std::size_t count) {
  std::size_t v = 0;
  try {
    v = std::stoul(spec.substr(from));
  } catch (const std::exception&) {
    throw Error("bad vertex in module spec '" + spec + "'");
  }
  if (v == 0 || v > count) throw Error("vertex out of range in module spec '" + spec + "'");
  return v - 1;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("malformed JSON in " + path + ": " + e.what());
  }
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Vec vec_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw Error("expected a vector of length " + std::to_string(n));
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json mat_to_json(const Mat& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  std::vector<Vec> r;
  for (const auto& row : j) r.push_back(vec_from_json(row, cols));
  return Mat::from_rows(r, cols);
}

// ---------------------------------------------------------------- algebras

Json algebra_to_json(const BasedAlgebra& a) {
  Json j;
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  j["unit"] = vec_to_json(a.unit());
  if (a.has_idempotents()) {
    j["idempotents"] = Json::array();
    for (const auto& e : a.idempotents()) j["idempotents"].push_back(vec_to_json(e));
  }
  j["table"] = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) j["table"].push_back({i, k, t.index, to_string(t.coeff)});
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("table") || !j.contains("unit"))
    throw Error("algebra file needs dim, unit and table");
  const std::size_t n = j.at("dim").get<std::size_t>();
  BasedAlgebra::Table table(n * n);
  for (const auto& e : j.at("table")) {
    if (!e.is_array() || e.size() != 4) throw Error("table entries are [i, j, k, coeff]");
    std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), c = e[2].get<std::size_t>();
    if (a >= n || b >= n || c >= n) throw Error("table index out of range in entry " + e.dump());
    table[a * n + b].push_back({c, rat_from_json(e[3])});
  }
  Vec unit = vec_from_json(j.at("unit"), n);
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("idempotents")) {
    std::vector<Vec> ids;
    for (const auto& e : j.at("idempotents")) ids.push_back(vec_from_json(e, n));
    return BasedAlgebra::make(n, std::move(table), std::move(unit), std::move(ids), std::move(labels));
  }
  return with_idempotents(BasedAlgebra::make_bare(n, std::move(table), std::move(unit), std::move(labels)));
}

AlgebraPtr load_algebra(const std::string& spec) {
  for (const auto& name : preset_names())
    if (name == spec) return preset(spec);
  if (spec.find('/') == std::string::npos && spec.find(".json") == std::string::npos)
    throw Error("unknown preset: " + spec);
  return algebra_from_json(read_json_file(spec));
}

// ---------------------------------------------------------------- modules

Json module_to_json(const Module& m) {
  Json j;
  j["side"] = to_string(m.side());
  j["dim"] = m.dim();
  j["action"] = Json::array();
  for (const auto& x : m.action()) j["action"].push_back(mat_to_json(x));
  return j;
}

Module module_from_json(const AlgebraPtr& a, const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("action")) throw Error("module file needs dim and action");
  const std::string side = j.value("side", std::string("left"));
  if (side != "left" && side != "right") throw Error("module side must be left or right");
  const std::size_t d = j.at("dim").get<std::size_t>();
  const Json& act = j.at("action");
  if (!act.is_array() || act.size() != a->dim())
    throw Error("module action needs one matrix per algebra basis element (" + std::to_string(a->dim()) + ")");
  std::vector<Mat> ms;
  for (const auto& x : act) ms.push_back(mat_from_json(x, d, d));
  return Module::make(a, side == "left" ? Side::Left : Side::Right, d, std::move(ms));
}

Module load_module(const AlgebraPtr& a, const std::string& spec) {
  if (spec == "A") return regular_module(a, Side::Left);
  if (spec == "DA") return dual_module(regular_module(a, Side::Right));
  if (spec.size() >= 2 && (spec[0] == 'S' || spec[0] == 'P' || spec[0] == 'I') && std::isdigit(spec[1])) {
    std::size_t v = parse_vertex(spec, 1, a->vertex_count());
    if (spec[0] == 'S') return simple_module(a, v);
    if (spec[0] == 'I') return injective_module(a, v);
    return projective_indecomposables(a)[v].module;
  }
  return module_from_json(a, read_json_file(spec));
}

// ---------------------------------------------------------------- complexes

Json complex_to_json(const BoundedComplex& c) {
  Json j;
  j["side"] = to_string(c.side);
  j["lo"] = c.lo;
  j["terms"] = Json::array();
  for (const auto& t : c.terms) j["terms"].push_back(module_to_json(t));
  j["diffs"] = Json::array();
  for (const auto& d : c.diffs) j["diffs"].push_back(mat_to_json(d));
  return j;
}

BoundedComplex complex_from_json(const AlgebraPtr& a, const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw Error("complex file needs terms");
  const std::string side = j.value("side", std::string("left"));
  const int lo = j.value("lo", 0);
  std::vector<Module> terms;
  for (const auto& t : j.at("terms")) {
    Json tj = t;
    if (!tj.contains("side")) tj["side"] = side;
    terms.push_back(module_from_json(a, tj));
  }
  std::vector<Mat> diffs;
  if (j.contains("diffs")) {
    const Json& d = j.at("diffs");
    if (d.size() + 1 != terms.size() && !(terms.empty() && d.empty()))
      throw Error("complex needs one differential between consecutive terms");
    for (std::size_t k = 0; k < d.size(); ++k) diffs.push_back(mat_from_json(d[k], terms[k + 1].dim(), terms[k].dim()));
  }
  return BoundedComplex::make(a, side == "left" ? Side::Left : Side::Right, lo, std::move(terms), std::move(diffs));
}

BoundedComplex load_complex(const AlgebraPtr& a, const std::string& spec) {
  return complex_from_json(a, read_json_file(spec));
}

// ---------------------------------------------------------------- reports

Json extnat_to_json(const ExtNat& v) {
  if (v.is_finite()) return v.value();
  return v.str();
}

Json bracket_to_json(const Bracket& b) {
  Json j;
  j["lo"] = b.lo_inf ? Json("inf") : Json(b.lo);
  j["hi"] = b.hi_inf ? Json("inf") : Json(b.hi);
  j["exact"] = b.is_exact();
  return j;
}

Json report_to_json(const DimensionReport& r) {
  Json j;
  j["value"] = extnat_to_json(r.value);
  j["method"] = to_string(r.method);
  j["witnesses"] = r.witnesses;
  j["undetermined"] = r.undetermined;
  return j;
}

}  // namespace findim
