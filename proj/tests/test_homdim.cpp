#include <gtest/gtest.h>

#include "findim/homdim.hpp"

using namespace findim;

namespace {

ExtNat fin(std::int64_t n) { return ExtNat::finite(n); }

bool isomorphic(const Module& m, const Module& n) { return m.dim() == n.dim() && find_module_isomorphism(m, n); }

// Length of the radical series of m.
std::size_t loewy_length(const Module& m) {
  std::size_t len = 0;
  Module cur = m;
  while (!cur.is_zero()) {
    cur = top_and_radical(cur).radical.module;
    ++len;
  }
  return len;
}

}  // namespace

TEST(ModuleList, Examples) {
  auto k = preset("k");
  EXPECT_EQ(findim_from_module_list(k, {simple_module(k, 0)}).value, fin(0));
  auto n3 = preset("nak3");
  auto r = findim_from_module_list(n3, nakayama_indecomposables(n3));
  EXPECT_EQ(r.value, fin(0));
  EXPECT_EQ(r.method, DimensionMethod::ExactList);
  auto a2 = preset("A2");
  auto l = findim_from_module_list(a2, {simple_module(a2, 0), simple_module(a2, 1), projective_indecomposables(a2)[0].module});
  EXPECT_EQ(l.value, fin(1));
  EXPECT_EQ(l.witnesses.size(), 3u);
}

TEST(Nakayama, Indecomposables) {
  auto n3 = preset("nak3");
  auto ms = nakayama_indecomposables(n3);
  ASSERT_EQ(ms.size(), 3u);
  std::vector<std::size_t> dims;
  for (const auto& m : ms) dims.push_back(m.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(nakayama_indecomposables(preset("k")).size(), 1u);
  auto a2 = preset("A2");
  auto as = nakayama_indecomposables(a2);
  ASSERT_EQ(as.size(), 3u);
  for (const auto& want : {simple_module(a2, 0), simple_module(a2, 1), projective_indecomposables(a2)[0].module}) {
    int hits = 0;
    for (const auto& m : as) hits += isomorphic(m, want);
    EXPECT_EQ(hits, 1);
  }
}

TEST(Nakayama, CompleteAndDistinct) {
  for (const auto& name : {"A3", "A3-rad2", "cyc2", "cyc2-3", "dual", "ut2"}) {
    auto a = preset(name);
    ASSERT_TRUE(is_nakayama(a)) << name;
    auto ms = nakayama_indecomposables(a);
    std::size_t expected = 0;
    for (const auto& p : projective_indecomposables(a)) expected += loewy_length(p.module);
    EXPECT_EQ(ms.size(), expected) << name;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      EXPECT_TRUE(is_uniserial(ms[i])) << name;
      for (std::size_t j = i + 1; j < ms.size(); ++j) EXPECT_FALSE(isomorphic(ms[i], ms[j])) << name;
    }
  }
}

TEST(Nakayama, NonNakayamaThrows) {
  auto a = preset("kronecker-trunc");
  EXPECT_FALSE(is_nakayama(a));
  EXPECT_THROW(nakayama_indecomposables(a), Error);
}

TEST(Search, Examples) {
  EXPECT_EQ(findim_search_lower_bound(preset("k"), 4, 6, 0).value, fin(0));
  auto r = findim_search_lower_bound(preset("A2"), 1, 6, 0);
  ASSERT_TRUE(r.value.is_finite());
  EXPECT_GE(r.value.value(), 1);
  EXPECT_EQ(r.method, DimensionMethod::Search);
}

TEST(Search, BelowExactListOnNakayama) {
  for (const auto& name : {"A2", "A3", "A3-rad2", "nak3", "dual", "cyc2", "cyc2-3", "ut2"}) {
    auto a = preset(name);
    ExtNat exact = findim_from_module_list(a, nakayama_indecomposables(a)).value;
    for (std::uint64_t seed : {0u, 1u, 7u}) {
      ExtNat lower = findim_search_lower_bound(a, 12, 6, seed).value;
      EXPECT_EQ(le(lower, exact), Tri::True) << name;
    }
  }
}

TEST(GlobalDimension, Examples) {
  EXPECT_EQ(global_dimension(preset("k")), fin(0));
  EXPECT_EQ(global_dimension(preset("A2")), fin(1));
  EXPECT_EQ(global_dimension(preset("dual")), ExtNat::infinite());
  EXPECT_EQ(global_dimension(preset("A3-rad2")), fin(2));
  EXPECT_EQ(global_dimension(preset("kronecker-trunc")), fin(1));
}

TEST(Findim, SelfInjectiveIsZero) {
  for (const auto& name : {"dual", "nak3", "cyc2", "cyc2-3"}) {
    auto a = preset(name);
    ASSERT_TRUE(is_injective(regular_module(a))) << name;
    auto b = finitistic_dimension(a);
    EXPECT_TRUE(b.value.is_exact()) << name;
    EXPECT_EQ(b.value.lo, 0) << name;
  }
}

TEST(Findim, FiniteGlobalDimensionEqualsGd) {
  for (const auto& name : {"k", "A2", "A3", "A3-rad2", "kronecker-trunc", "ut2", "k3"}) {
    auto a = preset(name);
    ExtNat gd = global_dimension(a);
    ASSERT_TRUE(gd.is_finite());
    auto b = finitistic_dimension(a);
    EXPECT_TRUE(b.value.is_exact()) << name;
    EXPECT_EQ(b.value.lo, gd.value()) << name;
  }
}

TEST(Findim, BoundedByGd) {
  for (const auto& name : preset_names()) {
    auto a = preset(name);
    ExtNat gd = global_dimension(a);
    auto b = finitistic_dimension(a);
    if (gd.is_finite() && b.value.is_exact()) EXPECT_LE(b.value.lo, gd.value()) << name;
  }
}

TEST(Findim, MethodLabels) {
  EXPECT_EQ(finitistic_dimension(preset("dual")).method, "local");
  EXPECT_EQ(finitistic_dimension(preset("A2")).method, "global");
  EXPECT_EQ(finitistic_dimension(preset("cyc2")).method, "nakayama");
}

TEST(EvaluateBound, Examples) {
  EXPECT_EQ(evaluate_bound("triangular", {{"fd_S", fin(0)}, {"fd_T", fin(0)}}), fin(1));
  EXPECT_EQ(evaluate_bound("homdim_1", {{"fd_S", fin(0)}, {"fd_T", fin(0)}, {"fld_T", fin(0)}}), fin(2));
  EXPECT_EQ(evaluate_bound("main_2b", {{"fd_R1", fin(0)}, {"fd_R3", fin(0)}, {"w_i", fin(1)}, {"w_j", fin(0)}}), fin(2));
  EXPECT_EQ(evaluate_bound("triangular", {{"fd_S", fin(0)}, {"fd_T", ExtNat::infinite()}}), ExtNat::infinite());
  EXPECT_EQ(evaluate_bound("triangular", {{"fd_S", fin(2)}, {"fd_T", ExtNat::unknown(3)}}), ExtNat::unknown(6));
}

TEST(EvaluateBound, MissingInputThrows) {
  try {
    evaluate_bound("triangular", {{"fd_S", fin(0)}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("fd_T"), std::string::npos);
  }
  EXPECT_THROW(evaluate_bound("nosuch", std::map<std::string, ExtNat>{}), Error);
}

TEST(EvaluateBound, EveryFormulaIsPure) {
  for (const auto& f : bound_formulas()) {
    std::map<std::string, ExtNat> in;
    std::int64_t v = 0;
    for (const auto& name : f.inputs) in[name] = fin(v++ % 3);
    EXPECT_EQ(evaluate_bound(f.id, in), evaluate_bound(f.id, in)) << f.id;
    std::map<std::string, Bracket> bin;
    for (const auto& [k, x] : in) bin[k] = Bracket::of(x);
    Bracket b = evaluate_bound(f.id, bin);
    ExtNat e = evaluate_bound(f.id, in);
    if (e.is_finite() && b.is_exact() && !b.lo_inf) EXPECT_EQ(b.lo, e.value()) << f.id;
  }
}
