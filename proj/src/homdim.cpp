#include "findim/homdim.hpp"

#include <algorithm>
#include <random>

namespace findim {

std::string to_string(DimensionMethod m) {
  switch (m) {
    case DimensionMethod::ExactList: return "exact-list";
    case DimensionMethod::Search: return "search";
    case DimensionMethod::Formula: return "formula";
  }
  return "?";
}

namespace {

std::string describe(const Module& m) {
  std::string s = "dim " + std::to_string(m.dim()) + " dimvec (";
  auto dv = dimension_vector(m);
  for (std::size_t i = 0; i < dv.size(); ++i) s += (i ? "," : "") + std::to_string(dv[i]);
  return s + ")";
}

}  // namespace

DimensionReport findim_from_module_list(const AlgebraPtr& a, const std::vector<Module>& modules, std::size_t cap) {
  DimensionReport r;
  r.method = DimensionMethod::ExactList;
  r.value = ExtNat::finite(0);
  for (const auto& m : modules) {
    if (!same_algebra(m.algebra(), a)) throw Error("findim_from_module_list: module over another algebra");
    ExtNat pd = projective_dimension(m, cap);
    r.witnesses.push_back(describe(m) + ": pd " + pd.str());
    if (pd.is_unknown()) ++r.undetermined;
    if (pd.is_finite()) r.value = max(r.value, pd);
  }
  return r;
}

bool is_uniserial(const Module& m) {
  Module cur = m;
  while (cur.dim() > 0) {
    TopAndRadical tr = top_and_radical(cur);
    if (tr.top.module.dim() != 1) return false;
    cur = tr.radical.module;
  }
  return true;
}

bool is_nakayama(const AlgebraPtr& a) {
  if (!a->has_split_idempotents()) return false;
  for (const auto& p : projective_indecomposables(a))
    if (!is_uniserial(p.module)) return false;
  for (const auto& p : projective_indecomposables(a->opposite()))
    if (!is_uniserial(p.module)) return false;
  return true;
}

std::vector<Module> nakayama_indecomposables(const AlgebraPtr& a) {
  if (!is_nakayama(a)) throw Error("algebra is not Nakayama: some indecomposable projective is not uniserial");
  std::vector<Module> out;
  for (const auto& p : projective_indecomposables(a)) {
    // Radical series P ⊃ rad P ⊃ ... ; the quotients P / rad^t P, t = 1..length.
    std::vector<Subspace> layers;
    Module cur = p.module;
    Mat into = Mat::identity(p.module.dim());  // cur -> P
    while (cur.dim() > 0) {
      TopAndRadical tr = top_and_radical(cur);
      into = into * tr.radical.inclusion.matrix;
      layers.push_back(column_space(into));
      cur = tr.radical.module;
    }
    for (const auto& sub : layers) out.push_back(quotient_module(p.module, sub).module);
  }
  return out;
}

DimensionReport findim_search_lower_bound(const AlgebraPtr& a, std::size_t budget, std::size_t size_cap,
                                          std::uint64_t seed, std::size_t cap) {
  DimensionReport r;
  r.method = DimensionMethod::Search;
  r.value = ExtNat::finite(0);
  auto consider = [&](const Module& m) {
    ExtNat pd = projective_dimension(m, cap);
    if (pd.is_unknown()) ++r.undetermined;
    if (pd.is_finite() && (r.witnesses.empty() || pd.value() > r.value.value())) {
      r.value = pd;
      r.witnesses = {describe(m) + ": pd " + pd.str()};
    }
  };
  for (std::size_t v = 0; v < a->vertex_count(); ++v) consider(simple_module(a, v));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < budget; ++i) consider(random_module(a, rng, size_cap));
  return r;
}

ExtNat global_dimension(const AlgebraPtr& a, std::size_t cap) {
  if (a->dim() == 0) return ExtNat::finite(0);
  AlgebraPtr b = dimension_model(a);
  ExtNat gd = ExtNat::finite(0);
  for (std::size_t v = 0; v < b->vertex_count(); ++v) gd = max(gd, projective_dimension(simple_module(b, v), cap));
  return gd;
}

AlgebraPtr dimension_model(const AlgebraPtr& a) {
  AlgebraPtr b = a->has_idempotents() ? a : with_idempotents(a);
  if (!b->has_split_idempotents())
    throw Error("dimension routines need primitive idempotents with residue field Q");
  if (!b->is_split_basic()) b = basic_algebra(b).algebra;
  return b;
}

FindimBracket finitistic_dimension(const AlgebraPtr& a, std::size_t cap, std::uint64_t seed) {
  FindimBracket out;
  if (a->dim() == 0) {
    out.value = Bracket::exact(0);
    out.method = "zero-ring";
    return out;
  }
  AlgebraPtr b = dimension_model(a);
  if (b->is_local()) {
    out.value = Bracket::exact(0);
    out.method = "local";
    return out;
  }
  ExtNat gd = global_dimension(b, cap);
  if (gd.is_finite()) {
    out.value = Bracket::exact(gd.value());
    out.method = "global";
    out.witnesses.push_back("gd " + gd.str());
    return out;
  }
  if (is_nakayama(b)) {
    DimensionReport r = findim_from_module_list(b, nakayama_indecomposables(b), cap);
    out.method = "nakayama";
    out.witnesses = r.witnesses;
    out.value = r.undetermined == 0 ? Bracket::exact(r.value.value()) : Bracket::at_least(r.value.value());
    return out;
  }
  DimensionReport r = findim_search_lower_bound(b, 24, 8, seed, cap);
  out.method = "search";
  out.witnesses = r.witnesses;
  out.value = Bracket::at_least(r.value.value());
  return out;
}

// ---------------------------------------------------------------- bounds

const std::vector<BoundFormula>& bound_formulas() {
  static const std::vector<BoundFormula> table = {
      {"triangular", "fd_B", "fd_S + fd_T + 1", {"fd_S", "fd_T"}},
      {"stratifying", "fd_R", "fd_eRe + fd_RmodJ + pd_RmodJ + 1", {"fd_eRe", "fd_RmodJ", "pd_RmodJ"}},
      {"main_2b", "fd_R2", "fd_R1 + fd_R3 + w_i + w_j + 1", {"fd_R1", "fd_R3", "w_i", "w_j"}},
      {"finitistic_b", "fd_R2", "fd_R1 + fd_R3 + w_i + w_j + 1", {"fd_R1", "fd_R3", "w_i", "w_j"}},
      {"finitistic_2a", "fd_R1", "fd_R2 + w_istar", {"fd_R2", "w_istar"}},
      {"finitistic_1", "fd_R3", "fd_R2 + cw_j", {"fd_R2", "cw_j"}},
      {"homdim_1", "fd_R", "fd_S + fd_T + max(1, fld_T) + 1", {"fd_S", "fd_T", "fld_T"}},
      {"homdim_2a", "fd_box", "fd_S + fd_T + 1", {"fd_S", "fd_T"}},
      {"homdim_2b", "fd_B", "fd_R + fd_box + max(1, pd_S) + 3", {"fd_R", "fd_box", "pd_S"}},
      {"ringext_1", "fd_S", "fd_R + fd_Rp + max(1, fld_RS, fld_Hom) + 1", {"fd_R", "fd_Rp", "fld_RS", "fld_Hom"}},
      {"ringext_2b", "fd_R", "fd_S + fd_box + 4", {"fd_S", "fd_box"}},
      {"mod1b_a", "fd_SM", "fd_S + fd_RM + 1", {"fd_S", "fd_RM"}},
      {"mod1b_b", "fd_S", "fd_R + fd_SM", {"fd_R", "fd_SM"}},
      {"mod1a_1", "fd_R", "fd_RI1 + fd_RI2 + max(1, fld_RI2) + 1", {"fd_RI1", "fd_RI2", "fld_RI2"}},
      {"mod1a_2a", "fd_RI12", "fd_RI1 + fd_RI2 + 1", {"fd_RI1", "fd_RI2"}},
      {"mod1a_2b", "fd_RI1", "fd_R + fd_RI12 + max(1, pd_RI1) + 3", {"fd_R", "fd_RI12", "pd_RI1"}},
      {"ars_1", "fd_EndRI", "fd_EndI + fd_RI + 2", {"fd_EndI", "fd_RI"}},
      {"covariant", "fd_EndYX", "fd_EndY + fd_EndCYX + 2", {"fd_EndY", "fd_EndCYX"}},
      {"f3_0", "absdiff_fd", "w_F", {"w_F"}},
      {"homo_ring", "fd_S", "fd_R", {"fd_R"}},
      {"star", "fd_Lambda", "fd_Gamma + minus_s", {"fd_Gamma", "minus_s"}},
      {"gldim_2", "gd_R2", "gd_R1 + gd_R3 + w_i + w_j + 1", {"gd_R1", "gd_R3", "w_i", "w_j"}},
      {"lemma_add_cor_1", "fd_R", "fd_S + fd_RI + max(1, fld_RI) + 1", {"fd_S", "fd_RI", "fld_RI"}},
      {"lemma_add_cor_2b", "fd_B", "fd_R + fd_SJ + max(1, pd_S) + 3", {"fd_R", "fd_SJ", "pd_S"}},
  };
  return table;
}

const BoundFormula& bound_formula(const std::string& id) {
  for (const auto& f : bound_formulas())
    if (f.id == id) return f;
  std::string known;
  for (const auto& f : bound_formulas()) known += (known.empty() ? "" : ", ") + f.id;
  throw Error("unknown bound id '" + id + "' (known: " + known + ")");
}

namespace {

template <class T>
T one(std::int64_t k);
template <>
ExtNat one<ExtNat>(std::int64_t k) { return ExtNat::finite(k); }
template <>
Bracket one<Bracket>(std::int64_t k) { return Bracket::exact(k); }

template <class T>
T evaluate(const std::string& id, const std::map<std::string, T>& in) {
  const BoundFormula& f = bound_formula(id);
  std::vector<std::string> missing;
  for (const auto& n : f.inputs)
    if (!in.count(n)) missing.push_back(n);
  if (!missing.empty()) {
    std::string msg = "bound " + id + " is missing inputs:";
    for (const auto& n : missing) msg += " " + n;
    msg += " (requires:";
    for (const auto& n : f.inputs) msg += " " + n;
    throw Error(msg + ")");
  }
  auto v = [&](const char* n) { return in.at(n); };
  const T c1 = one<T>(1);
  if (id == "triangular" || id == "homdim_2a") return v("fd_S") + v("fd_T") + 1;
  if (id == "stratifying") return v("fd_eRe") + v("fd_RmodJ") + v("pd_RmodJ") + 1;
  if (id == "main_2b" || id == "finitistic_b") return v("fd_R1") + v("fd_R3") + v("w_i") + v("w_j") + 1;
  if (id == "finitistic_2a") return v("fd_R2") + v("w_istar");
  if (id == "finitistic_1") return v("fd_R2") + v("cw_j");
  if (id == "homdim_1") return v("fd_S") + v("fd_T") + max(c1, v("fld_T")) + 1;
  if (id == "homdim_2b") return v("fd_R") + v("fd_box") + max(c1, v("pd_S")) + 3;
  if (id == "ringext_1") return v("fd_R") + v("fd_Rp") + max(max(c1, v("fld_RS")), v("fld_Hom")) + 1;
  if (id == "ringext_2b") return v("fd_S") + v("fd_box") + 4;
  if (id == "mod1b_a") return v("fd_S") + v("fd_RM") + 1;
  if (id == "mod1b_b") return v("fd_R") + v("fd_SM");
  if (id == "mod1a_1") return v("fd_RI1") + v("fd_RI2") + max(c1, v("fld_RI2")) + 1;
  if (id == "mod1a_2a") return v("fd_RI1") + v("fd_RI2") + 1;
  if (id == "mod1a_2b") return v("fd_R") + v("fd_RI12") + max(c1, v("pd_RI1")) + 3;
  if (id == "ars_1") return v("fd_EndI") + v("fd_RI") + 2;
  if (id == "covariant") return v("fd_EndY") + v("fd_EndCYX") + 2;
  if (id == "f3_0") return v("w_F");
  if (id == "homo_ring") return v("fd_R");
  if (id == "star") return v("fd_Gamma") + v("minus_s");
  if (id == "gldim_2") return v("gd_R1") + v("gd_R3") + v("w_i") + v("w_j") + 1;
  if (id == "lemma_add_cor_1") return v("fd_S") + v("fd_RI") + max(c1, v("fld_RI")) + 1;
  if (id == "lemma_add_cor_2b") return v("fd_R") + v("fd_SJ") + max(c1, v("pd_S")) + 3;
  throw Error("no formula for bound " + id);
}

}  // namespace

ExtNat evaluate_bound(const std::string& id, const std::map<std::string, ExtNat>& inputs) {
  return evaluate(id, inputs);
}

Bracket evaluate_bound(const std::string& id, const std::map<std::string, Bracket>& inputs) {
  return evaluate(id, inputs);
}

}  // namespace findim
