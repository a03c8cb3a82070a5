#include <gtest/gtest.h>

#include "findim/algebra.hpp"
#include "findim/contexts.hpp"
#include "findim/module.hpp"

using namespace findim;

namespace {

// Brute-force structure constant checks, independent of BasedAlgebra::validate.
bool associative(const BasedAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += a.coeff(i, j, m) * a.coeff(m, k, l);
            rhs += a.coeff(j, k, m) * a.coeff(i, m, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

bool unital(const BasedAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec b = a.basis_vector(i);
    if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) return false;
  }
  return true;
}

Subspace product_space(const BasedAlgebra& a, const Subspace& x, const Subspace& y) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) out.push_back(a.multiply(x.vector(i), y.vector(j)));
  return span_vectors(out, a.dim());
}

std::size_t nilpotency_steps(const BasedAlgebra& a, const Subspace& s) {
  Subspace p = s;
  std::size_t steps = 1;
  while (p.dim() > 0 && steps <= a.dim() + 1) {
    p = product_space(a, p, s);
    ++steps;
  }
  return steps;
}

// Checks every product of basis elements, independent of AlgebraHom::make.
bool multiplicative(const AlgebraHom& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.apply(s.unit()) != t.unit()) return false;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec lhs = f.apply(s.multiply(s.basis_vector(i), s.basis_vector(j)));
      Vec rhs = t.multiply(f.apply(s.basis_vector(i)), f.apply(s.basis_vector(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

void expect_iso(const AlgebraPtr& a, const AlgebraPtr& b) {
  ASSERT_EQ(a->dim(), b->dim());
  auto f = find_isomorphism(a, b);
  ASSERT_TRUE(f) << "no isomorphism found";
  EXPECT_TRUE(multiplicative(*f));
  EXPECT_EQ(rank(f->matrix), a->dim());
}

AlgebraPtr full_matrix_2() {
  // e11, e12, e21, e22 with eij ekl = δjk eil.
  const std::size_t n = 4;
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  BasedAlgebra::Table t(n * n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) t[idx(i, j) * n + idx(j, l)].push_back({idx(i, l), Rat(1)});
  return BasedAlgebra::make(n, t, {1, 0, 0, 1}, {{1, 0, 0, 1}});
}


}  // namespace

TEST(Presets, AssociativeAndUnital) {
  for (const auto& name : preset_names()) {
    auto a = preset(name);
    EXPECT_TRUE(associative(*a)) << name;
    EXPECT_TRUE(unital(*a)) << name;
    EXPECT_TRUE(a->is_split_basic()) << name;
  }
}

TEST(Presets, UnknownNameThrows) { EXPECT_THROW(preset("nosuch"), Error); }

TEST(Validation, NonAssociativeRejected) {
  // Q[x]/(x^2 - x - 2) is fine; a table where b1 fails to fix the unit is not.
  BasedAlgebra::Table t(4);
  t[0].push_back({0, Rat(1)});
  t[1].push_back({1, Rat(1)});
  t[2].push_back({1, Rat(1)});
  t[3].push_back({0, Rat(2)});
  t[3].push_back({1, Rat(1)});
  EXPECT_NO_THROW(BasedAlgebra::make_bare(2, t, {1, 0}));
  BasedAlgebra::Table bad(4);
  bad[0].push_back({0, Rat(1)});
  bad[1].push_back({1, Rat(1)});
  bad[2].push_back({0, Rat(1)});  // x 1 = 1: unit not two-sided
  bad[3].push_back({1, Rat(1)});
  EXPECT_THROW(BasedAlgebra::make_bare(2, bad, {1, 0}), Error);
}

TEST(Radical, Field) { EXPECT_EQ(radical_algebra(*preset("k")).dim(), 0u); }

TEST(Radical, Dual) {
  auto a = preset("dual");
  Subspace r = radical_algebra(*a);
  ASSERT_EQ(r.dim(), 1u);
  // x spans the unique maximal ideal: nilpotent, and the quotient is a field.
  EXPECT_TRUE(r.contains(a->basis_vector(1)));
  EXPECT_EQ(ideal_closure(*a, r).dim(), 1u);
  EXPECT_LE(nilpotency_steps(*a, r), 2u);
}

TEST(Radical, A2IsArrowSpan) {
  auto a = preset("A2");
  Subspace r = radical_algebra(*a);
  std::vector<Vec> arrows;
  for (const auto& ar : a->arrows()) arrows.push_back(ar.element);
  Subspace gen = ideal_closure(*a, arrows);
  EXPECT_EQ(r, gen);
  EXPECT_EQ(r.dim(), 1u);
  EXPECT_LE(nilpotency_steps(*a, gen), 2u);
  EXPECT_EQ(radical_algebra(*quotient_algebra(a, gen).algebra).dim(), 0u);
}

TEST(Radical, NilpotentWithSemisimpleQuotient) {
  for (const auto& name : preset_names()) {
    auto a = preset(name);
    Subspace r = radical_algebra(*a);
    EXPECT_EQ(ideal_closure(*a, r), r) << name;
    EXPECT_LE(nilpotency_steps(*a, r), a->dim() + 1) << name;
    if (r.dim() > 0) EXPECT_EQ(radical_algebra(*quotient_algebra(a, r).algebra).dim(), 0u) << name;
  }
}

TEST(SplitBasic, Examples) {
  EXPECT_TRUE(is_split_basic(*preset("A2")));
  EXPECT_TRUE(is_split_basic(*preset("k")));
  auto m2 = full_matrix_2();
  EXPECT_FALSE(is_split_basic(*m2));
  EXPECT_EQ(radical_algebra(*m2).dim(), 0u);
}

TEST(Opposite, CommutativeIsIdentical) {
  auto a = preset("dual");
  EXPECT_TRUE(opposite(a)->same_table(*a));
}

TEST(Opposite, Involution) {
  for (const auto& name : preset_names()) {
    auto a = preset(name);
    EXPECT_TRUE(opposite(opposite(a))->same_table(*a)) << name;
  }
}

TEST(Opposite, TransposedStructureConstants) {
  auto a = preset("ut2");
  auto o = opposite(a);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(o->coeff(i, j, k), a->coeff(j, i, k));
  EXPECT_FALSE(o->same_table(*a));
  EXPECT_EQ(o->idempotents(), a->idempotents());
}

TEST(Corner, UnitGivesWholeAlgebra) {
  auto a = preset("A3");
  Corner c = corner(a, a->unit());
  EXPECT_EQ(c.algebra->dim(), a->dim());
  expect_iso(c.algebra, a);
}

TEST(Corner, Ut2Vertices) {
  auto a = preset("ut2");
  for (const auto& e : a->idempotents()) {
    Corner c = corner(a, e);
    EXPECT_EQ(c.algebra->dim(), 1u);
    expect_iso(c.algebra, preset("k"));
  }
}

TEST(Corner, DimensionIsRankOfSandwich) {
  for (const auto& name : {"A3", "kronecker-trunc", "cyc2-3", "A3-rad2"}) {
    auto a = preset(name);
    for (const auto& e : a->idempotents()) {
      Mat sandwich = a->left_mult(e) * a->right_mult(e);
      EXPECT_EQ(corner(a, e).algebra->dim(), rank(sandwich)) << name;
    }
  }
}

TEST(Corner, NonIdempotentThrows) {
  auto a = preset("dual");
  EXPECT_THROW(corner(a, a->basis_vector(1)), Error);
}

TEST(IdealClosure, TrivialCases) {
  auto a = preset("A3");
  EXPECT_EQ(ideal_closure(*a, std::vector<Vec>{a->unit()}).dim(), a->dim());
  EXPECT_EQ(ideal_closure(*a, std::vector<Vec>{}).dim(), 0u);
}

TEST(IdealClosure, Ut2TraceIdeal) {
  auto a = preset("ut2");  // e11, e12, e22
  Subspace i = ideal_closure(*a, std::vector<Vec>{a->basis_vector(2)});
  EXPECT_EQ(i, span_vectors({a->basis_vector(1), a->basis_vector(2)}, 3));
  EXPECT_EQ(i, idempotent_ideal(a, {1}));
}

TEST(Quotient, ZeroIdeal) {
  auto a = preset("A2");
  expect_iso(quotient_algebra(a, zero_subspace(a->dim())).algebra, a);
}

TEST(Quotient, Nak3ByXSquared) {
  auto a = preset("nak3");
  Subspace x2 = ideal_closure(*a, std::vector<Vec>{a->basis_vector(2)});
  ASSERT_EQ(x2.dim(), 1u);
  auto q = quotient_algebra(a, x2);
  EXPECT_TRUE(q.algebra->same_table(*preset("dual")));
  EXPECT_TRUE(q.projection.is_surjective());
}

TEST(Quotient, Ut2ByTraceIdeal) {
  auto a = preset("ut2");
  auto q = quotient_algebra(a, idempotent_ideal(a, {1}));
  EXPECT_EQ(q.algebra->dim(), 1u);
  ASSERT_EQ(q.algebra->vertex_count(), 1u);
  EXPECT_EQ(q.projection.apply(a->idempotents()[0]), q.algebra->unit());
}

TEST(Quotient, WholeAlgebraThrows) {
  auto a = preset("A2");
  EXPECT_THROW(quotient_algebra(a, full_subspace(a->dim())), Error);
}

TEST(Quotient, ProjectionIsRingEpi) {
  for (const auto& name : {"A2", "nak3", "ut2", "A3", "kronecker-trunc"}) {
    auto a = preset(name);
    auto q = quotient_algebra(a, a->radical());
    EXPECT_TRUE(is_ring_epimorphism(q.projection)) << name;
    EXPECT_TRUE(multiplicative(q.projection)) << name;
  }
}

TEST(Triangular, KKKIsA2) {
  auto k = preset("k");
  auto b = triangular_matrix_algebra(k, k, regular_bimodule(k));
  EXPECT_EQ(b->dim(), 3u);
  EXPECT_TRUE(associative(*b));
  expect_iso(b, preset("A2"));
}

TEST(Triangular, ZeroBimoduleIsProduct) {
  auto s = preset("A2"), t = preset("dual");
  auto b = triangular_matrix_algebra(s, t, zero_bimodule(s, t));
  EXPECT_EQ(b->dim(), 5u);
  expect_iso(b, product_algebra(s, t));
}

TEST(Triangular, KOverDual) {
  auto s = preset("k"), t = preset("dual");
  auto b = triangular_matrix_algebra(s, t, simple_bimodule(s, 0, t, 0));
  EXPECT_EQ(b->dim(), 4u);
  EXPECT_TRUE(associative(*b));
  EXPECT_EQ(b->vertex_count(), 2u);
}

TEST(Triangular, MismatchedBimoduleThrows) {
  auto s = preset("k"), t = preset("dual");
  EXPECT_THROW(triangular_matrix_algebra(s, t, regular_bimodule(t)), Error);
}

TEST(TrivialExtension, KByKIsDual) {
  auto k = preset("k");
  auto te = trivial_extension(k, regular_bimodule(k));
  expect_iso(te.algebra, preset("dual"));
  // R -> R⋉M -> R is the identity.
  EXPECT_EQ(te.projection.matrix * te.injection.matrix, Mat::identity(1));
}

TEST(TrivialExtension, ZeroBimodule) {
  auto r = preset("A2");
  expect_iso(trivial_extension(r, zero_bimodule(r, r)).algebra, r);
}

TEST(TrivialExtension, DualByDualIsSelfInjective) {
  auto r = preset("dual");
  auto te = trivial_extension(r, dual_bimodule(r));
  EXPECT_EQ(te.algebra->dim(), 4u);
  EXPECT_TRUE(associative(*te.algebra));
  EXPECT_TRUE(is_injective(regular_module(te.algebra)));
  EXPECT_TRUE(multiplicative(te.injection));
  EXPECT_TRUE(multiplicative(te.projection));
}

TEST(PathAlgebra, Examples) {
  EXPECT_EQ(path_algebra_monomial(1, {}, {}, 2)->dim(), 1u);
  auto a2 = path_algebra_monomial(2, {{0, 1, "a"}}, {}, 2);
  EXPECT_EQ(a2->dim(), 3u);
  EXPECT_TRUE(a2->same_table(*preset("A2")));
  auto n3 = path_algebra_monomial(1, {{0, 0, "x"}}, {{0, 0, 0}}, 3);
  EXPECT_EQ(n3->dim(), 3u);
  EXPECT_TRUE(n3->same_table(*preset("nak3")));
  EXPECT_EQ(n3->vertex_count(), 1u);
}

TEST(PathAlgebra, UnboundedCycleThrows) {
  EXPECT_THROW(path_algebra_monomial(1, {{0, 0, "x"}}, {}, 3), Error);
  EXPECT_THROW(path_algebra_monomial(2, {{0, 1, "a"}, {1, 0, "b"}}, {}, 4), Error);
}

TEST(RingEpi, Examples) {
  EXPECT_TRUE(is_ring_epimorphism(AlgebraHom::identity(preset("ut2"))));
  auto n3 = preset("nak3");
  auto q = quotient_algebra(n3, ideal_closure(*n3, std::vector<Vec>{n3->basis_vector(2)}));
  EXPECT_TRUE(is_ring_epimorphism(q.projection));
  auto k = preset("k"), d = preset("dual");
  Mat inc(2, 1);
  inc(0, 0) = 1;
  EXPECT_FALSE(is_ring_epimorphism(AlgebraHom::make(k, d, inc)));
}

TEST(Idempotents, Decomposition) {
  auto kk = preset("k2");
  auto bare = BasedAlgebra::make_bare(kk->dim(), kk->table(), kk->unit());
  auto ids = decompose_idempotents(*bare);
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_EQ(bare->multiply(ids[0], ids[1]), Vec(2));
  EXPECT_EQ(add(ids[0], ids[1]), bare->unit());
  auto d = preset("dual");
  auto dids = decompose_idempotents(*BasedAlgebra::make_bare(d->dim(), d->table(), d->unit()));
  ASSERT_EQ(dids.size(), 1u);
  EXPECT_EQ(dids[0], d->unit());
}

TEST(Idempotents, RecoversPathIdempotentsUpToConjugacy) {
  for (const auto& name : {"A3", "kronecker-trunc", "cyc2-3", "ut2"}) {
    auto a = preset(name);
    auto bare = BasedAlgebra::make_bare(a->dim(), a->table(), a->unit());
    auto b = with_idempotents(bare);
    EXPECT_EQ(b->vertex_count(), a->vertex_count()) << name;
    EXPECT_TRUE(b->is_split_basic()) << name;
  }
}

TEST(Isomorphism, SelfAndNonIso) {
  expect_iso(preset("A3"), preset("A3"));
  EXPECT_FALSE(find_isomorphism(preset("k2"), preset("dual")));
  expect_iso(preset("A2"), preset("ut2"));
}

TEST(Subalgebra, IdempotentSubalgebra) {
  auto a = preset("A3");
  auto s = subalgebra(a, a->idempotents());
  EXPECT_EQ(s.algebra->dim(), 3u);
  expect_iso(s.algebra, preset("k3"));
  EXPECT_TRUE(multiplicative(s.inclusion));
}
