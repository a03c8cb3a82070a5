#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "findim/verify.hpp"

using namespace findim;

namespace {

struct Options {
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::size_t max_i = 8;
  std::string algebra;
  std::string module;
  std::string module2;
  std::string complex;
  std::string bound;
  std::string instance;
  std::map<std::string, std::string> slots;
};

bool json_out(const Options& o) { return o.format == "json"; }

Module right_module(const AlgebraPtr& a, const std::string& spec) {
  if (spec.find(".json") != std::string::npos) {
    Module m = load_module(a, spec);
    if (m.side() != Side::Right) throw Error("module " + spec + " must be a right module");
    return m;
  }
  // Vertex specs name the same idempotents in A^op.
  return load_module(a->opposite(), spec).as_right();
}

std::string vertex_list(const std::vector<std::size_t>& vs) {
  std::string s;
  for (auto v : vs) s += (s.empty() ? "P" : " + P") + std::to_string(v + 1);
  return s.empty() ? "0" : s;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (json_out(o)) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

int cmd_validate(const Options& o) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  Json j = {{"dim", a->dim()},
            {"vertices", a->vertex_count()},
            {"split_basic", a->is_split_basic()},
            {"radical_dim", a->radical().dim()},
            {"arrows", a->arrows().size()}};
  std::ostringstream t;
  t << "algebra " << o.algebra << ": valid, dim " << a->dim() << ", " << a->vertex_count() << " vertices, radical dim "
    << a->radical().dim() << ", " << a->arrows().size() << " arrows" << (a->is_split_basic() ? ", split basic" : "")
    << "\n";
  if (!o.module.empty()) {
    Module m = load_module(a, o.module);
    j["module_dim"] = m.dim();
    t << "module " << o.module << ": valid, dim " << m.dim() << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

Json resolution_json(const Resolution& r) {
  Json terms = Json::array();
  for (const auto& p : r.terms) terms.push_back(vertex_list(p.vertices));
  return terms;
}

int cmd_pd(const Options& o, bool injective) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  Module m = load_module(a, o.module);
  ExtNat v = injective ? injective_dimension(m, o.cap) : projective_dimension(m, o.cap);
  Json j = {{"value", extnat_to_json(v)}};
  std::ostringstream t;
  t << (injective ? "injdim " : "pd ") << o.module << " = " << v.str() << "\n";
  if (!injective) {
    Resolution r = minimal_resolution(m, o.cap);
    j["witnesses"] = resolution_json(r);
    for (std::size_t k = 0; k < r.terms.size(); ++k) t << "  P_" << k << " = " << vertex_list(r.terms[k].vertices) << "\n";
    if (r.periodic) t << "  syzygy " << r.period_end << " repeats syzygy " << r.period_start << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_resolve(const Options& o) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  Module m = load_module(a, o.module);
  Resolution r = minimal_resolution(m, o.cap);
  Json j = {{"pd", extnat_to_json(r.pd)}, {"terms", resolution_json(r)}, {"periodic", r.periodic}};
  j["syzygy_dims"] = Json::array();
  for (const auto& s : r.syzygies) j["syzygy_dims"].push_back(s.dim());
  std::ostringstream t;
  t << "minimal projective resolution of " << o.module << " (pd " << r.pd.str() << ")\n";
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    t << "  P_" << k << " = " << vertex_list(r.terms[k].vertices) << ", syzygy dim "
      << (k + 1 < r.syzygies.size() ? std::to_string(r.syzygies[k + 1].dim()) : "?") << "\n";
  emit(o, j, t.str());
  return 0;
}

BoundedComplex input_complex(const Options& o, const AlgebraPtr& a) {
  if (!o.complex.empty()) return load_complex(a, o.complex);
  if (!o.module.empty()) return BoundedComplex::concentrated(load_module(a, o.module), 0);
  throw Error("give --complex or --module");
}

int cmd_width(const Options& o, bool co) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  BoundedComplex c = input_complex(o, a);
  SupInf si = sup_inf(c);
  ExtNat w;
  std::string note;
  if (co) {
    w = homological_cowidth(c, o.cap);
  } else if (all_terms_projective(c)) {
    w = homological_width(c, o.cap);
  } else {
    Normalized n = projective_normalize(c, o.cap);
    if (!n.complex) throw Error("cannot normalize to a bounded complex of projectives: " + n.diagnostic);
    note = "normalized to projectives in degrees " + std::to_string(n.complex->lo) + ".." +
           std::to_string(n.complex->hi());
    w = homological_width(*n.complex, o.cap);
  }
  Json j = {{"value", extnat_to_json(w)}, {"sup_inf", si.str()}};
  if (!note.empty()) j["note"] = note;
  std::ostringstream t;
  t << (co ? "cowidth" : "width") << " = " << w.str() << ", cohomology " << si.str() << "\n";
  if (!note.empty()) t << "  " << note << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_tor_ext(const Options& o, bool tor) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  if (o.module.empty() || o.module2.empty()) throw Error("give --module and --module2");
  std::vector<ExtNat> dims;
  if (tor) dims = tor_dims(right_module(a, o.module), load_module(a, o.module2), o.max_i, o.cap);
  else dims = ext_dims(load_module(a, o.module), load_module(a, o.module2), o.max_i, o.cap);
  Json j = Json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    j.push_back(extnat_to_json(dims[i]));
    t << (tor ? "Tor_" : "Ext^") << i << " = " << dims[i].str() << "\n";
  }
  emit(o, Json{{tor ? "tor" : "ext", j}}, t.str());
  return 0;
}

int cmd_findim(const Options& o) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  FindimBracket f = finitistic_dimension(a, o.cap, o.seed);
  Json j = {{"value", bracket_to_json(f.value)}, {"method", f.method}, {"witnesses", f.witnesses}};
  std::ostringstream t;
  t << "fd(" << o.algebra << ") = " << f.value.str() << " [" << f.method << "]\n";
  for (const auto& w : f.witnesses) t << "  " << w << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_gldim(const Options& o) {
  AlgebraPtr a = parse_algebra_spec(o.algebra);
  ExtNat g = global_dimension(a, o.cap);
  emit(o, Json{{"value", extnat_to_json(g)}}, "gd(" + o.algebra + ") = " + g.str() + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  Instance in;
  if (!o.instance.empty()) {
    in = instance_from_json(read_json_file(o.instance));
  } else {
    if (o.bound.empty()) throw Error("give a bound id or --instance");
    in.bound_id = o.bound;
    in.cap = o.cap;
    in.seed = o.seed;
  }
  if (!o.bound.empty() && o.bound != in.bound_id) throw Error("bound id does not match the instance file");
  const auto& known = bound_slots(in.bound_id);
  for (const auto& [k, v] : o.slots) {
    if (!known.count(k)) throw Error("bound " + in.bound_id + " has no slot --" + k);
    in.slots[k] = v;
  }
  VerificationReport r = verify_inequality(in);
  emit(o, report_to_json(r), format_report(r));
  return r.verdict == Verdict::Violated ? 2 : 0;
}

int cmd_suite(const Options& o) {
  SuiteReport s = report_suite(o.seed, o.cap);
  emit(o, suite_to_json(s), format_suite(s));
  return s.count(Verdict::Violated) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological dimensions of finite-dimensional algebras over Q"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "resolution length cap")->capture_default_str();
    c->add_option("--seed", o.seed, "random seed")->capture_default_str();
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    c->add_option("--max-i", o.max_i, "highest Tor/Ext degree")->capture_default_str();
  };
  const std::string alg_help = "preset name or algebra JSON file";
  const std::string mod_help = "S<i>, P<i>, I<i>, A, DA or module JSON file";

  auto* validate = app.add_subcommand("validate", "check an algebra (and optionally a module) file");
  validate->add_option("--algebra", o.algebra, alg_help)->required();
  validate->add_option("--module", o.module, mod_help);

  std::map<std::string, CLI::App*> sub;
  for (const char* name : {"pd", "injdim", "resolve"}) {
    auto* c = app.add_subcommand(name, std::string(name) + " of a left module");
    c->add_option("--algebra", o.algebra, alg_help)->required();
    c->add_option("--module", o.module, mod_help)->required();
    sub[name] = c;
  }
  for (const char* name : {"width", "cowidth"}) {
    auto* c = app.add_subcommand(name, std::string("homological ") + name + " of a complex or module");
    c->add_option("--algebra", o.algebra, alg_help)->required();
    c->add_option("--complex", o.complex, "complex JSON file");
    c->add_option("--module", o.module, mod_help);
    sub[name] = c;
  }
  auto* tor = app.add_subcommand("tor", "dim Tor_i(right module, left module)");
  auto* ext = app.add_subcommand("ext", "dim Ext^i(module, module2)");
  for (auto* c : {tor, ext}) {
    c->add_option("--algebra", o.algebra, alg_help)->required();
    c->add_option("--module", o.module, mod_help)->required();
    c->add_option("--module2", o.module2, mod_help)->required();
  }
  auto* findim = app.add_subcommand("findim", "finitistic dimension bracket");
  auto* gldim = app.add_subcommand("gldim", "global dimension");
  for (auto* c : {findim, gldim}) c->add_option("--algebra", o.algebra, alg_help)->required();

  auto* verify = app.add_subcommand("verify", "check one dimension bound on an instance");
  verify->add_option("bound", o.bound, "bound id");
  verify->add_option("--instance", o.instance, "instance JSON file");
  for (const char* s : {"S", "T", "M", "R", "e", "I", "I1", "I2", "K", "X", "Z", "R1", "R2"})
    verify->add_option_function<std::string>(std::string("--") + s, [&o, s](const std::string& v) { o.slots[s] = v; },
                                             std::string("slot ") + s);
  auto* suite = app.add_subcommand("report-suite", "run every preset instance of every bound");

  for (auto* c : app.get_subcommands({})) common(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*sub["pd"]) return cmd_pd(o, false);
    if (*sub["injdim"]) return cmd_pd(o, true);
    if (*sub["resolve"]) return cmd_resolve(o);
    if (*sub["width"]) return cmd_width(o, false);
    if (*sub["cowidth"]) return cmd_width(o, true);
    if (*tor) return cmd_tor_ext(o, true);
    if (*ext) return cmd_tor_ext(o, false);
    if (*findim) return cmd_findim(o);
    if (*gldim) return cmd_gldim(o);
    if (*verify) return cmd_verify(o);
    if (*suite) return cmd_suite(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
