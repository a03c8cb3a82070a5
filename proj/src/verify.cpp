#include "findim/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace findim {

std::string to_string(HypStatus s) {
  switch (s) {
    case HypStatus::Holds: return "holds";
    case HypStatus::Fails: return "fails";
    case HypStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Violated: return "violated";
    case Verdict::Undetermined: return "undetermined";
    case Verdict::Rejected: return "rejected";
  }
  return "?";
}

std::string Instance::name() const {
  std::string s;
  for (const auto& [k, v] : slots) s += (s.empty() ? "" : " ") + k + "=" + v;
  return s;
}

// ---------------------------------------------------------------- slot parsers

namespace {

std::vector<std::size_t> parse_vertices(const AlgebraPtr& a, const std::string& spec) {
  std::vector<std::size_t> out;
  if (spec == "0") return out;
  if (spec == "1" || spec == "all") {
    for (std::size_t v = 0; v < a->vertex_count(); ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() < 2 || part[0] != 'e') throw Error("bad idempotent spec '" + spec + "' (expected e<i>+e<j>...)");
    std::size_t v = 0;
    try {
      v = std::stoul(part.substr(1));
    } catch (const std::exception&) {
      throw Error("bad idempotent spec '" + spec + "'");
    }
    if (v == 0 || v > a->vertex_count()) throw Error("vertex out of range in '" + spec + "'");
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

AlgebraPtr parse_algebra_spec(const std::string& spec) {
  auto star = spec.find('*');
  if (star != std::string::npos)
    return product_algebra(parse_algebra_spec(spec.substr(0, star)), parse_algebra_spec(spec.substr(star + 1)));
  return load_algebra(spec);
}

Subspace parse_ideal_spec(const AlgebraPtr& a, const std::string& spec) {
  if (spec == "0") return zero_subspace(a->dim());
  if (spec == "all") return full_subspace(a->dim());
  if (spec == "rad") return a->radical();
  if (spec == "rad2") return a->radical_square();
  return idempotent_ideal(a, parse_vertices(a, spec));
}

Vec parse_idempotent_spec(const AlgebraPtr& a, const std::string& spec) {
  Vec e = zero_vec(a->dim());
  for (auto v : parse_vertices(a, spec)) e = add(e, a->idempotents()[v]);
  return e;
}

Bimodule parse_bimodule_spec(const AlgebraPtr& s, const AlgebraPtr& t, const std::string& spec) {
  if (spec == "0") return zero_bimodule(s, t);
  if (spec == "k") return simple_bimodule(s, 0, t, 0);
  if (spec == "A" || spec == "DA") {
    if (!same_algebra(s, t)) throw Error("bimodule '" + spec + "' needs equal left and right algebras");
    Bimodule m = spec == "A" ? regular_bimodule(s) : dual_bimodule(s);
    return Bimodule{s, t, m.dim, m.left_action, m.right_action};
  }
  if (spec.size() >= 4 && spec[0] == 's') {
    auto dash = spec.find('-');
    if (dash == std::string::npos) throw Error("bad bimodule spec '" + spec + "' (expected s<i>-<j>)");
    std::size_t i = std::stoul(spec.substr(1, dash - 1)), j = std::stoul(spec.substr(dash + 1));
    if (i == 0 || j == 0) throw Error("vertices in '" + spec + "' are 1-based");
    return simple_bimodule(s, i - 1, t, j - 1);
  }
  throw Error("unknown bimodule spec '" + spec + "' (use 0, k, s<i>-<j>, A or DA)");
}

// ---------------------------------------------------------------- harness

namespace {

Tri finite_tri(const Bracket& b) {
  if (b.lo_inf) return Tri::False;
  return b.is_exact() ? Tri::True : Tri::Undetermined;
}

HypStatus from_tri(Tri t) {
  switch (t) {
    case Tri::True: return HypStatus::Holds;
    case Tri::False: return HypStatus::Fails;
    default: return HypStatus::Undetermined;
  }
}

bool contains_unit(const AlgebraPtr& a, const Subspace& ideal) { return ideal.contains(a->unit()); }

class Run {
 public:
  Run(const Instance& in, VerificationReport& r) : in_(in), r_(r) {}

  std::string slot(const std::string& name) const {
    auto it = in_.slots.find(name);
    if (it != in_.slots.end() && !it->second.empty()) return it->second;
    const auto& defaults = bound_slots(in_.bound_id);
    auto d = defaults.find(name);
    if (d != defaults.end() && !d->second.empty()) return d->second;
    throw Error("bound " + in_.bound_id + " needs slot '" + name + "'");
  }

  AlgebraPtr algebra(const std::string& name) {
    std::string spec = slot(name);
    auto it = algebras_.find(spec);
    if (it != algebras_.end()) return it->second;
    AlgebraPtr a = parse_algebra_spec(spec);
    algebras_[spec] = a;
    return a;
  }

  std::size_t cap() const { return in_.cap; }
  std::uint64_t seed() const { return in_.seed; }

  void hyp(const std::string& name, HypStatus s, const std::string& detail = "") {
    r_.hypotheses.push_back({name, s, detail});
  }
  void hyp(const std::string& name, Tri t, const std::string& detail = "") { hyp(name, from_tri(t), detail); }
  void hyp(const std::string& name, bool b, const std::string& detail = "") {
    hyp(name, b ? HypStatus::Holds : HypStatus::Fails, detail);
  }
  void witness(const std::string& w) { r_.witnesses.push_back(w); }

  Bracket fd(const std::string& label, const AlgebraPtr& a) {
    FindimBracket f = finitistic_dimension(a, cap(), seed());
    witness("fd(" + label + ") = " + f.value.str() + " [" + f.method + ", dim " + std::to_string(a->dim()) + "]");
    return f.value;
  }
  Bracket fd_quotient(const std::string& label, const AlgebraPtr& a, const Subspace& ideal) {
    if (contains_unit(a, ideal)) {
      witness("fd(" + label + ") = 0 [zero ring]");
      return Bracket::exact(0);
    }
    return fd(label, quotient_algebra(a, ideal).algebra);
  }
  // Endomorphism rings in the composition convention of the bounds.
  Bracket fd_end(const std::string& label, const Module& m) {
    if (m.is_zero()) {
      witness("fd(" + label + ") = 0 [zero ring]");
      return Bracket::exact(0);
    }
    return fd(label, endomorphism_algebra(m, seed()).algebra->opposite());
  }
  Bracket gd(const std::string& label, const AlgebraPtr& a) {
    ExtNat g = global_dimension(a, cap());
    witness("gd(" + label + ") = " + g.str());
    return Bracket::of(g);
  }
  Bracket pd(const std::string& label, const Module& m) {
    ExtNat p = projective_dimension(m, cap());
    witness("pd(" + label + ") = " + p.str());
    return Bracket::of(p);
  }

  void finite_pd_hyp(const std::string& name, const Bracket& p) {
    if (p.is_exact() && !p.lo_inf) hyp(name, HypStatus::Holds, "pd " + p.str());
    else if (p.lo_inf) hyp(name, HypStatus::Fails, "pd inf (periodic syzygy)");
    else hyp(name, HypStatus::Undetermined, "pd " + p.str() + " beyond cap");
  }

  // Tor_i(x, y) = 0 for all i >= from; certified when either side has finite pd.
  void tor_vanishing_hyp(const std::string& name, const Module& x, const Module& y, std::size_t from) {
    if (x.is_zero() || y.is_zero()) {
      hyp(name, HypStatus::Holds, "zero module");
      return;
    }
    ExtNat px = projective_dimension(x, cap()), py = projective_dimension(y, cap());
    bool certified = px.is_finite() || py.is_finite();
    std::size_t depth = cap();
    if (px.is_finite()) depth = std::min<std::size_t>(depth, px.value());
    if (py.is_finite()) depth = std::min<std::size_t>(depth, py.value());
    if (certified && depth < from) {
      hyp(name, HypStatus::Holds, "pd bound " + std::to_string(depth));
      return;
    }
    auto tor = tor_dims(x, y, depth, cap());
    bool open = !certified;
    for (std::size_t i = from; i < tor.size(); ++i) {
      if (tor[i].is_finite() && tor[i].value() != 0) {
        hyp(name, HypStatus::Fails, "Tor_" + std::to_string(i) + " has dim " + tor[i].str());
        return;
      }
      if (!tor[i].is_finite()) open = true;
    }
    if (open)
      hyp(name, HypStatus::Undetermined, "vanishes up to degree " + std::to_string(tor.empty() ? 0 : tor.size() - 1));
    else
      hyp(name, HypStatus::Holds, "certified through degree " + std::to_string(depth));
  }

  void homological_hyp(const std::string& name, const AlgebraHom& f) {
    if (!is_ring_epimorphism(f)) {
      hyp(name, HypStatus::Fails, "not a ring epimorphism");
      return;
    }
    HomologicalVerdict h = is_homological_epimorphism(f, cap());
    homological_status(name, h);
  }
  void homological_status(const std::string& name, const HomologicalVerdict& h) {
    if (h.status == Homological::Certified) hyp(name, HypStatus::Holds, to_string(h.status));
    else if (h.status == Homological::Not)
      hyp(name, HypStatus::Fails, "Tor_" + std::to_string(h.first_nonzero) + " has dim " + h.tor[h.first_nonzero].str());
    else hyp(name, HypStatus::Undetermined, to_string(h.status));
  }

  void input(const std::string& name, const Bracket& b) { r_.inputs[name] = b; }
  void lhs(const Bracket& b) { r_.lhs = b; }
  void also(const std::string& text, const Bracket& a, const Bracket& b) { r_.extra.push_back({text, a, b, le(a, b)}); }

 private:
  const Instance& in_;
  VerificationReport& r_;
  std::map<std::string, AlgebraPtr> algebras_;
};

AlgebraHom quotient_map(Run& run, const AlgebraPtr& r, const std::string& kernel_slot) {
  Subspace k = parse_ideal_spec(r, run.slot(kernel_slot));
  if (k.dim() == 0) return AlgebraHom::identity(r);
  if (contains_unit(r, k)) throw Error("kernel ideal is the whole ring");
  return quotient_algebra(r, k).projection;
}

// ---------------------------------------------------------------- bounds

void triangular(Run& run) {
  AlgebraPtr s = run.algebra("S"), t = run.algebra("T");
  Bimodule m = parse_bimodule_spec(s, t, run.slot("M"));
  AlgebraPtr b = triangular_matrix_algebra(s, t, m);
  Bracket fs = run.fd("S", s), ft = run.fd("T", t), fb = run.fd("B", b);
  run.input("fd_S", fs);
  run.input("fd_T", ft);
  run.lhs(fb);
  run.also("fd_S <= fd_B", fs, fb);
}

void stratifying_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  Vec e = parse_idempotent_spec(r, run.slot("e"));
  StratifyingData d = stratifying_recollement_data(r, e, run.cap());
  run.witness("ReR has dim " + std::to_string(d.ideal.dim()));
  AlgebraPtr r1 = d.quotient ? d.quotient->algebra : nullptr;
  AlgebraPtr r3 = d.corner ? d.corner->algebra : nullptr;
  auto fd_opt = [&](const std::string& label, const AlgebraPtr& a) {
    if (!a) {
      run.witness("fd(" + label + ") = 0 [zero ring]");
      return Bracket::exact(0);
    }
    return run.fd(label, a);
  };
  auto gd_opt = [&](const std::string& label, const AlgebraPtr& a) {
    if (!a) return Bracket::exact(0);
    return run.gd(label, a);
  };
  // The surjection R -> R/ReR being homological gives the recollement.
  if (!d.ring_epi) run.hyp("R -> R/ReR is a ring epimorphism", false);
  else if (d.homological) run.homological_status("R -> R/ReR homological", *d.homological);
  run.witness("pd(_R ReR) = " + d.pd_ideal.str() + ", pd(_R R/ReR) = " + d.pd_quotient.str() +
              ", pd(Re_eRe) = " + d.pd_re_right.str());

  if (id == "stratifying") {
    run.finite_pd_hyp("_R ReR in Pf(R)", Bracket::of(d.pd_ideal));
    Bracket fr = run.fd("R", r), fq = fd_opt("R/ReR", r1);
    run.input("fd_eRe", fd_opt("eRe", r3));
    run.input("fd_RmodJ", fq);
    run.input("pd_RmodJ", Bracket::of(d.pd_quotient));
    run.lhs(fr);
    run.also("fd_RmodJ <= fd_R", fq, fr);
  } else if (id == "main_2b" || id == "finitistic_b") {
    run.finite_pd_hyp("i_*(R1) compact", Bracket::of(d.pd_quotient));
    run.input("fd_R1", fd_opt("R/ReR", r1));
    run.input("fd_R3", fd_opt("eRe", r3));
    run.input("w_i", Bracket::of(d.w_i));
    run.input("w_j", Bracket::of(d.w_j));
    run.lhs(run.fd("R", r));
  } else if (id == "finitistic_2a") {
    run.finite_pd_hyp("i_*(R1) compact", Bracket::of(d.pd_quotient));
    run.input("fd_R2", run.fd("R", r));
    run.input("w_istar", Bracket::of(d.w_istar));
    run.lhs(fd_opt("R/ReR", r1));
  } else if (id == "finitistic_1") {
    run.finite_pd_hyp("j_! restricts to bounded complexes", Bracket::of(d.pd_re_right));
    run.input("fd_R2", run.fd("R", r));
    run.input("cw_j", Bracket::of(d.cw_j));
    run.lhs(fd_opt("eRe", r3));
  } else if (id == "gldim_2") {
    Bracket g1 = gd_opt("R/ReR", r1), g3 = gd_opt("eRe", r3);
    run.hyp("gd(R1) finite", finite_tri(g1), "gd " + g1.str());
    run.hyp("gd(R3) finite", finite_tri(g3), "gd " + g3.str());
    run.input("gd_R1", g1);
    run.input("gd_R3", g3);
    run.input("w_i", Bracket::of(d.w_i));
    run.input("w_j", Bracket::of(d.w_j));
    run.lhs(run.gd("R", r));
  }
}

Bracket box_fd(Run& run, const ExactContext& ctx, const std::string& label) {
  if (tensor_over_algebra(right_regular_restricted(ctx.mu), left_regular_restricted(ctx.lambda)).dim == 0) {
    run.witness("fd(" + label + ") = 0 [zero ring]");
    return Bracket::exact(0);
  }
  return run.fd(label, nc_tensor_product(ctx));
}

void exact_context_hyp(Run& run, const ExactContext& ctx) {
  ExactContextCheck c = check_exact_context(ctx);
  run.hyp("exact context", c.exact(),
          "rank in " + std::to_string(c.rank_in) + ", rank out " + std::to_string(c.rank_out));
}

void homdim_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  ExactContext ctx = milnor_context(r, parse_ideal_spec(r, run.slot("I1")), parse_ideal_spec(r, run.slot("I2")));
  exact_context_hyp(run, ctx);
  const AlgebraPtr& s = ctx.lambda.target;
  const AlgebraPtr& t = ctx.mu.target;
  Module s_left = left_regular_restricted(ctx.lambda);
  Module t_right = right_regular_restricted(ctx.mu);
  if (id == "homdim_1") {
    run.input("fd_S", run.fd("S", s));
    run.input("fd_T", run.fd("T", t));
    run.input("fld_T", run.pd("T_R", t_right));
    run.lhs(run.fd("R", r));
    return;
  }
  run.tor_vanishing_hyp("Tor_i^R(T, S) = 0 for i >= 1", t_right, s_left, 1);
  Bracket ps = run.pd("_R S", s_left);
  run.finite_pd_hyp("_R S in Pf(R)", ps);
  if (id == "homdim_2a") {
    run.input("fd_S", run.fd("S", s));
    run.input("fd_T", run.fd("T", t));
    run.lhs(box_fd(run, ctx, "T box S"));
  } else {
    AlgebraPtr b = triangular_matrix_algebra(s, t, ctx.m);
    Bracket fb = run.fd("B", b);
    run.input("fd_R", run.fd("R", r));
    run.input("fd_box", box_fd(run, ctx, "T box S"));
    run.input("pd_S", ps);
    run.lhs(fb);
    run.also("fd_S <= fd_B", run.fd("S", s), fb);
  }
}

void mod1a_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  Subspace i1 = ideal_closure(*r, parse_ideal_spec(r, run.slot("I1")));
  Subspace i2 = ideal_closure(*r, parse_ideal_spec(r, run.slot("I2")));
  Subspace meet = subspace_intersection(i1, i2);
  run.hyp("I1 ∩ I2 = 0", meet.dim() == 0, "dim " + std::to_string(meet.dim()));
  if (meet.dim() != 0) return;
  Bracket f1 = run.fd_quotient("R/I1", r, i1), f2 = run.fd_quotient("R/I2", r, i2);
  run.input("fd_RI1", f1);
  if (id == "mod1a_1") {
    run.input("fd_RI2", f2);
    run.input("fld_RI2", run.pd("(R/I2)_R", quotient_as_right_module(r, i2)));
    run.lhs(run.fd("R", r));
    return;
  }
  run.tor_vanishing_hyp("Tor_i^R(I2, I1) = 0 for i >= 0", ideal_as_right_module(r, i2), ideal_as_left_module(r, i1), 0);
  Bracket p1 = run.pd("_R R/I1", quotient_as_left_module(r, i1));
  run.finite_pd_hyp("_R R/I1 in Pf(R)", p1);
  Subspace sum = subspace_sum(i1, i2);
  Bracket f12 = Bracket::exact(0);
  if (contains_unit(r, sum)) {
    run.witness("fd(R/(I1+I2)) = 0 [zero ring]");
  } else {
    CoproductQuotient q = nc_tensor_quotient_case(r, i1, i2);
    f12 = run.fd("R/(I1+I2)", q.algebra);
  }
  if (id == "mod1a_2a") {
    run.input("fd_RI2", f2);
    run.lhs(f12);
  } else {
    run.input("fd_R", run.fd("R", r));
    run.input("fd_RI12", f12);
    run.input("pd_RI1", p1);
    run.lhs(f1);
  }
}

void ringext_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  std::string sspec = run.slot("S");
  std::vector<Vec> gens;
  if (sspec == "idempotents") gens = r->idempotents();
  else if (sspec != "k") throw Error("ring extension slot S must be 'idempotents' or 'k'");
  Subalgebra sub = subalgebra(r, gens);
  RingExtensionContext rc = ring_extension_context(sub.inclusion);
  exact_context_hyp(run, rc.ctx);
  run.witness("R' has dim " + std::to_string(rc.r_prime->dim()) + ", Hom_S(R, R/S) has dim " +
              std::to_string(rc.ctx.m.dim));
  if (id == "ringext_1") {
    run.input("fd_R", run.fd("R", r));
    run.input("fd_Rp", run.fd("R'", rc.r_prime));
    run.input("fld_RS", run.pd("(R/S)_S", rc.quotient_right));
    run.input("fld_Hom", run.pd("Hom_S(R, R/S)_S", rc.hom_right));
    run.lhs(run.fd("S", sub.algebra));
  } else {
    run.hyp("_S R projective and finitely generated", is_projective(rc.r_left));
    run.input("fd_S", run.fd("S", sub.algebra));
    run.input("fd_box", box_fd(run, rc.ctx, "R' box R"));
    run.lhs(run.fd("R", r));
  }
}

void mod1b_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  AlgebraHom lambda = quotient_map(run, r, "K");
  const AlgebraPtr& s = lambda.target;
  Bimodule m = parse_bimodule_spec(s, s, run.slot("M"));
  run.hyp("λ is a ring epimorphism", is_ring_epimorphism(lambda));
  Module s_left = left_regular_restricted(lambda);
  Bimodule mr = restrict_bimodule(m, lambda, lambda);
  run.tor_vanishing_hyp("Tor_i^R(M, S) = 0 for i >= 1", Module::make(r, Side::Right, mr.dim, mr.right_action), s_left, 1);
  run.finite_pd_hyp("_R S in Pf(R)", run.pd("_R S", s_left));
  CoproductTrivialExtension c = nc_tensor_trivial_extension_case(lambda, m);
  run.witness(std::string("S ⋉ M has dim ") + std::to_string(c.algebra->dim()) + ", structure maps " +
              (c.commutes ? "commute" : "do not commute"));
  if (id == "mod1b_a") {
    run.input("fd_S", run.fd("S", s));
    run.input("fd_RM", run.fd("R ⋉ M", c.source));
    run.lhs(run.fd("S ⋉ M", c.algebra));
  } else {
    run.input("fd_R", run.fd("R", r));
    run.input("fd_SM", run.fd("S ⋉ M", c.algebra));
    run.lhs(run.fd("S", s));
  }
}

void homo_ring(Run& run) {
  AlgebraPtr r = run.algebra("R");
  AlgebraHom lambda = quotient_map(run, r, "K");
  run.homological_hyp("λ homological ring epimorphism", lambda);
  run.finite_pd_hyp("_R S in Pf(R)", run.pd("_R S", left_regular_restricted(lambda)));
  run.input("fd_R", run.fd("R", r));
  run.lhs(run.fd("S", lambda.target));
}

void ars_1(Run& run) {
  AlgebraPtr r = run.algebra("R");
  Subspace i = ideal_closure(*r, parse_ideal_spec(r, run.slot("I")));
  std::vector<Vec> prods;
  for (std::size_t a = 0; a < i.dim(); ++a)
    for (std::size_t b = 0; b < i.dim(); ++b) prods.push_back(r->multiply(i.vector(a), i.vector(b)));
  run.hyp("I is idempotent", span_vectors(prods, r->dim()) == i);
  Module x = regular_module(r, Side::Left);
  Submodule y = submodule(x, i);
  if (!y.module.is_zero()) run.hyp("I -> R covariant", is_covariant_morphism(y.inclusion).covariant());
  Bracket fq = run.fd_quotient("R/I", r, i);
  run.input("fd_EndI", run.fd_end("End(I)", y.module));
  run.input("fd_RI", fq);
  Bracket big = run.fd_end("End(R ⊕ I)", direct_sum({x, y.module}).module);
  run.lhs(big);
  run.also("fd_RI <= fd_EndRI", fq, big);
}

void covariant(Run& run) {
  AlgebraPtr r = run.algebra("R");
  Module x = load_module(r, run.slot("X"));
  Module z = load_module(r, run.slot("Z"));
  std::vector<Vec> gens;
  for (const auto& h : hom_space(z, x))
    for (std::size_t c = 0; c < h.cols(); ++c) gens.push_back(h.col(c));
  Submodule y = generated_submodule(x, gens);
  run.witness("trace of Z in X has dim " + std::to_string(y.module.dim()));
  if (!y.module.is_zero()) {
    CovariantCheck cc = is_covariant_morphism(y.inclusion);
    run.hyp("trace inclusion Y -> X covariant", cc.covariant(),
            std::string("injective ") + (cc.injective ? "yes" : "no") + ", split " + (cc.split ? "yes" : "no"));
  }
  EndomorphismAlgebra end = endomorphism_algebra(x, run.seed());
  Subspace ideal = y.module.is_zero() ? zero_subspace(end.algebra->dim()) : factor_through_ideal(end, x, y.module);
  Bracket frel = Bracket::exact(0);
  if (ideal.dim() == end.algebra->dim()) run.witness("fd(End_{C,Y}(X)) = 0 [zero ring]");
  else frel = run.fd("End_{C,Y}(X)", quotient_algebra(end.algebra, ideal).algebra->opposite());
  Bracket big = run.fd_end("End(Y ⊕ X)", direct_sum({y.module, x}).module);
  run.input("fd_EndY", run.fd_end("End(Y)", y.module));
  run.input("fd_EndCYX", frel);
  run.lhs(big);
  run.also("fd_EndCYX <= fd_EndYX", frel, big);
}

void f3_0(Run& run) {
  AlgebraPtr r1 = run.algebra("R1"), r2 = run.algebra("R2");
  auto iso = find_isomorphism(r1, r2, run.seed());
  Bracket f1 = run.fd("R1", r1), f2 = run.fd("R2", r2);
  run.lhs(abs_diff(f1, f2));
  if (!iso) {
    run.hyp("triangle equivalence F", HypStatus::Undetermined, "no algebra isomorphism found");
    run.input("w_F", Bracket::at_least(0));
    return;
  }
  run.hyp("triangle equivalence F", HypStatus::Holds, "restriction along an algebra isomorphism");
  auto inv = inverse(iso->matrix);
  Module fr1 = restrict_scalars(AlgebraHom::make(r2, r1, *inv), regular_module(r1, Side::Left));
  auto c = projective_normalize(fr1, run.cap());
  run.input("w_F", c ? Bracket::of(homological_width(*c, run.cap())) : Bracket::at_least(0));
}

std::vector<Module> finite_pd_sample(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed) {
  std::vector<Module> pool;
  if (is_nakayama(a)) {
    pool = nakayama_indecomposables(a);
  } else {
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      pool.push_back(simple_module(a, v));
      pool.push_back(injective_module(a, v));
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 6; ++k) pool.push_back(random_module(a, rng, 6));
  }
  for (const auto& p : projective_indecomposables(a)) pool.push_back(p.module);
  std::vector<Module> out;
  for (const auto& m : pool)
    if (projective_dimension(m, cap).is_finite()) out.push_back(m);
  return out;
}

void star(Run& run) {
  AlgebraPtr lam = run.algebra("S");
  Bimodule m = parse_bimodule_spec(lam, lam, run.slot("M"));
  TrivialExtension te = trivial_extension(lam, m);
  run.hyp("f g = Id", compose(te.injection, te.projection).matrix == Mat::identity(lam->dim()));
  run.hyp("s < +inf", HypStatus::Holds, "F(Λ) = Γ is nonzero");
  Bimodule gamma = restrict_bimodule(regular_bimodule(te.algebra), AlgebraHom::identity(te.algebra), te.injection);
  std::vector<Module> sample = finite_pd_sample(lam, run.cap(), run.seed());
  FunctorEstimate est = functor_inf_estimate(gamma, sample, 8, run.cap());
  run.witness("s over " + std::to_string(sample.size()) + " modules: " + est.str());
  // The sampled inf can only overestimate s, so -s is at least -estimate.
  run.input("minus_s", Bracket::at_least(est.empty ? 0 : -est.inf));
  run.input("fd_Gamma", run.fd("Γ", te.algebra));
  run.lhs(run.fd("Λ", lam));
}

void lemma_add_family(Run& run, const std::string& id) {
  AlgebraPtr r = run.algebra("R");
  AlgebraHom lambda = quotient_map(run, r, "K");
  const AlgebraPtr& s = lambda.target;
  Subspace i = ideal_closure(*r, parse_ideal_spec(r, run.slot("I")));
  if (contains_unit(r, i)) throw Error("ideal I is the whole ring");
  run.homological_hyp("λ homological ring epimorphism", lambda);
  std::vector<Vec> img;
  for (std::size_t k = 0; k < i.dim(); ++k) img.push_back(lambda.apply(i.vector(k)));
  Subspace jp = span_vectors(img, s->dim());
  bool left_ideal = true;
  for (std::size_t a = 0; a < s->dim() && left_ideal; ++a)
    for (std::size_t k = 0; k < jp.dim() && left_ideal; ++k)
      left_ideal = jp.contains(s->multiply(s->basis_vector(a), jp.vector(k)));
  run.hyp("J' = λ(I) is a left ideal", left_ideal);
  run.hyp("λ injective on I", jp.dim() == i.dim());
  LemmaAddConditions c = lemma_add_conditions(lambda, i, run.cap());
  Tri any = (c.cond3 == Tri::True || c.cond4 == Tri::True)     ? Tri::True
            : (c.cond3 == Tri::False && c.cond4 == Tri::False) ? Tri::False
                                                               : Tri::Undetermined;
  run.hyp("condition (3) or (4) of the lemma", any, "(3) " + to_string(c.cond3) + ", (4) " + to_string(c.cond4));
  Module ri_right = quotient_as_right_module(r, i);
  Bracket fri = run.fd_quotient("R/I", r, i);
  if (id == "lemma_add_cor_1") {
    run.input("fd_S", run.fd("S", s));
    run.input("fd_RI", fri);
    run.input("fld_RI", run.pd("(R/I)_R", ri_right));
    run.lhs(run.fd("R", r));
    return;
  }
  Bracket ps = run.pd("_R S", left_regular_restricted(lambda));
  run.finite_pd_hyp("_R S in Pf(R)", ps);
  // B = [[S, S/J'], [0, R/I]].
  Quotient qi = quotient_algebra(r, i);
  QuotientModule sj = quotient_module(regular_module(s, Side::Left), jp);
  const Mat& p = sj.projection.matrix;
  Mat lift = section(qi.projection.matrix);
  Mat back = p.rows() ? section(p) : Mat(s->dim(), 0);
  std::vector<Mat> right;
  for (std::size_t k = 0; k < qi.algebra->dim(); ++k)
    right.push_back(p * s->right_mult(lambda.apply(lift.col(k))) * back);
  Bimodule bm = Bimodule::make(s, qi.algebra, sj.module.dim(), sj.module.action(), right);
  AlgebraPtr b = triangular_matrix_algebra(s, qi.algebra, bm);
  Subspace jj = ideal_closure(*s, jp);
  Bracket fr = run.fd("R", r), fs = run.fd("S", s), fsj = run.fd_quotient("S/J", s, jj);
  run.input("fd_R", fr);
  run.input("fd_SJ", fsj);
  run.input("pd_S", ps);
  run.lhs(run.fd("B", b));
  run.also("fd_S <= fd_R", fs, fr);
  run.also("fd_SJ <= fd_RI", fsj, fri);
}

void decide(VerificationReport& r) {
  r.holds = le(r.lhs, r.rhs);
  if (!r.lhs.is_exact()) r.undetermined.push_back(r.lhs_name);
  for (const auto& [k, v] : r.inputs)
    if (!v.is_exact()) r.undetermined.push_back(k);
  bool all_hold = true, any_fail = false;
  for (const auto& h : r.hypotheses) {
    if (h.status == HypStatus::Fails) any_fail = true;
    if (h.status != HypStatus::Holds) all_hold = false;
    if (h.status == HypStatus::Undetermined) r.undetermined.push_back("hypothesis: " + h.name);
  }
  if (any_fail) {
    r.verdict = Verdict::Rejected;
    return;
  }
  std::vector<Tri> all{r.holds};
  for (const auto& c : r.extra) all.push_back(c.holds);
  bool any_false = false, all_true = true;
  for (Tri t : all) {
    if (t == Tri::False) any_false = true;
    if (t != Tri::True) all_true = false;
  }
  if (any_false) r.verdict = all_hold ? Verdict::Violated : Verdict::Undetermined;
  else if (all_true && all_hold) r.verdict = Verdict::Verified;
  else r.verdict = Verdict::Undetermined;
}

}  // namespace

const std::map<std::string, std::string>& bound_slots(const std::string& id) {
  static const std::map<std::string, std::map<std::string, std::string>> table = [] {
    std::map<std::string, std::map<std::string, std::string>> t;
    t["triangular"] = {{"S", ""}, {"T", ""}, {"M", "0"}};
    for (const char* b : {"stratifying", "main_2b", "finitistic_b", "finitistic_2a", "finitistic_1", "gldim_2"})
      t[b] = {{"R", ""}, {"e", ""}};
    for (const char* b : {"homdim_1", "homdim_2a", "homdim_2b", "mod1a_1", "mod1a_2a", "mod1a_2b"})
      t[b] = {{"R", ""}, {"I1", ""}, {"I2", "0"}};
    for (const char* b : {"ringext_1", "ringext_2b"}) t[b] = {{"R", ""}, {"S", "idempotents"}};
    for (const char* b : {"mod1b_a", "mod1b_b"}) t[b] = {{"R", ""}, {"K", "0"}, {"M", ""}};
    t["homo_ring"] = {{"R", ""}, {"K", ""}};
    t["ars_1"] = {{"R", ""}, {"I", ""}};
    t["covariant"] = {{"R", ""}, {"X", "A"}, {"Z", ""}};
    t["f3_0"] = {{"R1", ""}, {"R2", ""}};
    t["star"] = {{"S", ""}, {"M", ""}};
    for (const char* b : {"lemma_add_cor_1", "lemma_add_cor_2b"}) t[b] = {{"R", ""}, {"K", "0"}, {"I", ""}};
    return t;
  }();
  bound_formula(id);  // throws on unknown ids
  return table.at(id);
}

VerificationReport verify_inequality(const Instance& in) {
  const BoundFormula& f = bound_formula(in.bound_id);
  for (const auto& [k, v] : in.slots)
    if (!bound_slots(in.bound_id).count(k)) throw Error("bound " + in.bound_id + " has no slot '" + k + "'");
  VerificationReport r;
  r.bound_id = in.bound_id;
  r.instance = in.name();
  r.lhs_name = f.lhs;
  r.rhs_formula = f.rhs;
  Run run(in, r);
  const std::string& id = in.bound_id;
  if (id == "triangular") triangular(run);
  else if (id == "stratifying" || id == "main_2b" || id == "finitistic_b" || id == "finitistic_2a" ||
           id == "finitistic_1" || id == "gldim_2")
    stratifying_family(run, id);
  else if (id.rfind("homdim_", 0) == 0) homdim_family(run, id);
  else if (id.rfind("mod1a_", 0) == 0) mod1a_family(run, id);
  else if (id.rfind("ringext_", 0) == 0) ringext_family(run, id);
  else if (id.rfind("mod1b_", 0) == 0) mod1b_family(run, id);
  else if (id == "homo_ring") homo_ring(run);
  else if (id == "ars_1") ars_1(run);
  else if (id == "covariant") covariant(run);
  else if (id == "f3_0") f3_0(run);
  else if (id == "star") star(run);
  else if (id.rfind("lemma_add_cor_", 0) == 0) lemma_add_family(run, id);
  else throw Error("no verifier for bound " + id);
  // A failed hypothesis can stop the computation before every input exists.
  bool complete = true;
  for (const auto& n : f.inputs)
    if (!r.inputs.count(n)) complete = false;
  if (complete) r.rhs = evaluate_bound(id, r.inputs);
  else r.rhs = Bracket::infinite();
  decide(r);
  return r;
}

// ---------------------------------------------------------------- JSON / text

Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bound_id")) throw Error("instance needs bound_id");
  Instance in;
  in.bound_id = j.at("bound_id").get<std::string>();
  if (j.contains("slots")) {
    for (const auto& [k, v] : j.at("slots").items()) in.slots[k] = v.get<std::string>();
  }
  in.cap = j.value("cap", kDefaultCap);
  in.seed = j.value("seed", std::uint64_t{0});
  const auto& known = bound_slots(in.bound_id);
  for (const auto& [k, v] : in.slots)
    if (!known.count(k)) throw Error("bound " + in.bound_id + " has no slot '" + k + "'");
  return in;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["bound_id"] = r.bound_id;
  j["instance"] = r.instance;
  j["hypotheses"] = Json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  j["lhs"] = {{"name", r.lhs_name}, {"value", bracket_to_json(r.lhs)}};
  j["rhs"] = {{"formula", r.rhs_formula}, {"value", bracket_to_json(r.rhs)}};
  Json in = Json::object();
  for (const auto& [k, v] : r.inputs) in[k] = bracket_to_json(v);
  j["inputs"] = in;
  j["holds"] = to_string(r.holds);
  j["equality"] = r.equality();
  j["extra"] = Json::array();
  for (const auto& c : r.extra)
    j["extra"].push_back({{"text", c.text}, {"lhs", bracket_to_json(c.lhs)}, {"rhs", bracket_to_json(c.rhs)}, {"holds", to_string(c.holds)}});
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  j["undetermined"] = r.undetermined;
  return j;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream o;
  o << r.bound_id << " [" << r.instance << "]: " << to_string(r.verdict) << "\n";
  for (const auto& h : r.hypotheses)
    o << "  hypothesis " << h.name << ": " << to_string(h.status) << (h.detail.empty() ? "" : " (" + h.detail + ")") << "\n";
  o << "  lhs " << r.lhs_name << " = " << r.lhs.str() << " <= rhs " << r.rhs_formula << " = " << r.rhs.str() << ": "
    << to_string(r.holds) << (r.equality() ? " (equality)" : "") << "\n";
  for (const auto& c : r.extra)
    o << "  also " << c.text << ": " << c.lhs.str() << " <= " << c.rhs.str() << ": " << to_string(c.holds) << "\n";
  if (!r.inputs.empty()) {
    o << "  inputs";
    for (const auto& [k, v] : r.inputs) o << " " << k << "=" << v.str();
    o << "\n";
  }
  for (const auto& w : r.witnesses) o << "  witness " << w << "\n";
  for (const auto& u : r.undetermined) o << "  open " << u << "\n";
  return o.str();
}

// ---------------------------------------------------------------- suite

std::size_t SuiteReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.verdict == v) ++n;
  return n;
}

std::vector<Instance> suite_instances(std::uint64_t seed, std::size_t cap) {
  std::vector<Instance> out;
  auto add = [&](const std::string& id, std::map<std::string, std::string> slots) {
    out.push_back(Instance{id, std::move(slots), cap, seed});
  };
  add("triangular", {{"S", "k"}, {"T", "k"}, {"M", "k"}});
  add("triangular", {{"S", "A2"}, {"T", "k"}, {"M", "s2-1"}});
  add("triangular", {{"S", "nak3"}, {"T", "k"}, {"M", "k"}});
  add("triangular", {{"S", "k"}, {"T", "dual"}, {"M", "k"}});
  add("triangular", {{"S", "A2"}, {"T", "A2"}, {"M", "A"}});
  const std::vector<std::pair<std::string, std::vector<std::string>>> strat = {
      {"ut2", {"e1", "e2"}}, {"A2", {"e1", "e2"}},      {"A3", {"e1", "e2", "e3"}},
      {"A3-rad2", {"e2"}},   {"kronecker-trunc", {"e1"}}, {"cyc2", {"e1"}}, {"nak3", {"e1"}}};
  for (const auto& [alg, es] : strat)
    for (const auto& e : es)
      for (const char* id : {"stratifying", "main_2b", "finitistic_2a", "finitistic_1", "gldim_2"})
        add(id, {{"R", alg}, {"e", e}});
  add("finitistic_b", {{"R", "ut2"}, {"e", "e2"}});
  for (const char* id : {"homdim_1", "homdim_2a", "homdim_2b", "mod1a_1", "mod1a_2a", "mod1a_2b"}) {
    add(id, {{"R", "ut2"}, {"I1", "e2"}, {"I2", "0"}});
    add(id, {{"R", "A3-rad2"}, {"I1", "e1"}, {"I2", "e3"}});
  }
  for (const char* r : {"ut2", "A2", "A3", "nak3", "kronecker-trunc"})
    for (const char* id : {"ringext_1", "ringext_2b"}) add(id, {{"R", r}});
  for (const char* id : {"mod1b_a", "mod1b_b"}) {
    add(id, {{"R", "dual"}, {"K", "0"}, {"M", "k"}});
    add(id, {{"R", "nak3"}, {"K", "rad2"}, {"M", "k"}});
    add(id, {{"R", "ut2"}, {"K", "e2"}, {"M", "k"}});
  }
  add("homo_ring", {{"R", "ut2"}, {"K", "e2"}});
  add("homo_ring", {{"R", "A3"}, {"K", "e1"}});
  add("homo_ring", {{"R", "A3"}, {"K", "e3"}});
  add("homo_ring", {{"R", "nak3"}, {"K", "rad2"}});
  add("homo_ring", {{"R", "A3-rad2"}, {"K", "e2"}});
  add("ars_1", {{"R", "ut2"}, {"I", "e2"}});
  add("ars_1", {{"R", "A2"}, {"I", "e1"}});
  add("ars_1", {{"R", "A3-rad2"}, {"I", "e2"}});
  add("covariant", {{"R", "ut2"}, {"X", "A"}, {"Z", "P2"}});
  add("covariant", {{"R", "A3"}, {"X", "A"}, {"Z", "P1"}});
  add("f3_0", {{"R1", "ut2"}, {"R2", "A2"}});
  add("f3_0", {{"R1", "dual"}, {"R2", "dual"}});
  add("star", {{"S", "k"}, {"M", "k"}});
  add("star", {{"S", "A2"}, {"M", "A"}});
  add("star", {{"S", "ut2"}, {"M", "DA"}});
  for (const char* id : {"lemma_add_cor_1", "lemma_add_cor_2b"}) {
    add(id, {{"R", "ut2"}, {"K", "0"}, {"I", "e2"}});
    add(id, {{"R", "k*A2"}, {"K", "e2+e3"}, {"I", "e1"}});
  }
  return out;
}

SuiteReport report_suite(std::uint64_t seed, std::size_t cap) {
  SuiteReport s;
  s.seed = seed;
  s.cap = cap;
  for (const auto& in : suite_instances(seed, cap)) s.rows.push_back(verify_inequality(in));
  return s;
}

Json suite_to_json(const SuiteReport& s) {
  Json j;
  j["seed"] = s.seed;
  j["cap"] = s.cap;
  j["rows"] = Json::array();
  for (const auto& r : s.rows) j["rows"].push_back(report_to_json(r));
  j["counts"] = {{"verified", s.count(Verdict::Verified)},
                 {"violated", s.count(Verdict::Violated)},
                 {"undetermined", s.count(Verdict::Undetermined)},
                 {"rejected", s.count(Verdict::Rejected)}};
  return j;
}

std::string format_suite(const SuiteReport& s) {
  std::ostringstream o;
  o << "report suite: seed " << s.seed << ", cap " << s.cap << "\n";
  for (const auto& r : s.rows)
    o << "  " << r.bound_id << " [" << r.instance << "] lhs " << r.lhs.str() << " rhs " << r.rhs.str() << " "
      << to_string(r.verdict) << "\n";
  o << "verified " << s.count(Verdict::Verified) << ", violated " << s.count(Verdict::Violated) << ", undetermined "
    << s.count(Verdict::Undetermined) << ", rejected " << s.count(Verdict::Rejected) << "\n";
  return o.str();
}

}  // namespace findim
