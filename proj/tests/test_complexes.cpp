#include <gtest/gtest.h>

#include <random>

#include "findim/complex.hpp"

using namespace findim;

namespace {

ExtNat fin(std::int64_t n) { return ExtNat::finite(n); }

bool isomorphic(const Module& m, const Module& n) { return m.dim() == n.dim() && find_module_isomorphism(m, n); }

// Alternating sum of cohomology dimensions, from ranks of the differentials.
long cohomology_euler(const BoundedComplex& c) {
  long chi = 0;
  for (int n = c.lo; n <= c.hi(); ++n) {
    long h = static_cast<long>(c.term(n).dim()) - static_cast<long>(rank(c.diff(n))) -
             static_cast<long>(rank(c.diff(n - 1)));
    chi += (n % 2 == 0 ? 1 : -1) * h;
  }
  return chi;
}

int lowest_nonzero_degree(const BoundedComplex& c) {
  for (int n = c.lo; n <= c.hi(); ++n)
    if (!c.term(n).is_zero()) return n;
  return std::numeric_limits<int>::max();
}

ChainMap random_chain_map(const BoundedComplex& x, const BoundedComplex& y, std::mt19937_64& rng) {
  auto basis = chain_map_space(x, y);
  if (basis.empty()) return ChainMap::zero(x, y);
  std::uniform_int_distribution<int> coeff(-2, 2);
  ChainMap f = basis[0];
  for (auto& m : f.maps) m = Mat(m.rows(), m.cols());
  for (const auto& b : basis) {
    Rat t = coeff(rng);
    for (std::size_t k = 0; k < f.maps.size(); ++k) f.maps[k] += t * b.maps[k];
  }
  return ChainMap::make(x, y, f.lo, f.maps);
}

// S1 over A2 resolved: 0 -> P2 -> P1 -> 0 in degrees -1, 0.
BoundedComplex a2_resolution() {
  auto r = projective_normalize(simple_module(preset("A2"), 0));
  EXPECT_TRUE(r);
  return *r;
}

}  // namespace

TEST(Cohomology, Concentrated) {
  auto a = preset("A3");
  Module m = simple_module(a, 1);
  auto c = BoundedComplex::concentrated(m, 0);
  EXPECT_TRUE(isomorphic(cohomology(c, 0), m));
  EXPECT_EQ(cohomology_dim(c, 1), 0u);
  EXPECT_EQ(cohomology_dim(c, -1), 0u);
}

TEST(Cohomology, ResolutionOfS1) {
  auto c = a2_resolution();
  EXPECT_EQ(c.lo, -1);
  EXPECT_EQ(c.hi(), 0);
  EXPECT_TRUE(isomorphic(cohomology(c, 0), simple_module(preset("A2"), 0)));
  EXPECT_EQ(cohomology_dim(c, -1), 0u);
}

TEST(Cohomology, ConeOfIdentityAcyclic) {
  auto c = a2_resolution();
  auto k = cone(ChainMap::identity(c));
  for (int n = k.lo; n <= k.hi(); ++n) EXPECT_EQ(cohomology_dim(k, n), 0u);
}

TEST(SupInf, Conventions) {
  auto a = preset("k");
  auto s = sup_inf(BoundedComplex::concentrated(simple_module(a, 0), 0));
  EXPECT_FALSE(s.acyclic);
  EXPECT_EQ(s.sup, 0);
  EXPECT_EQ(s.inf, 0);
  EXPECT_TRUE(sup_inf(cone(ChainMap::identity(a2_resolution()))).acyclic);
  // k^2 -> k^2 of rank 1 in degrees -1, 0: both cohomologies survive.
  Module v = direct_sum({simple_module(a, 0), simple_module(a, 0)}).module;
  Mat f(2, 2);
  f(0, 0) = 1;
  auto c = BoundedComplex::make(a, Side::Left, -1, {v, v}, {f});
  auto t = sup_inf(c);
  EXPECT_EQ(t.sup, 0);
  EXPECT_EQ(t.inf, -1);
}

TEST(Shift, DegreesAndSign) {
  auto c = a2_resolution();
  auto s = shift(c, 1);
  EXPECT_EQ(s.lo, -2);
  EXPECT_EQ(s.diff(-2), -c.diff(-1));
  EXPECT_EQ(sup_inf(s).sup, -1);
}

TEST(Cone, ZeroMapIsSum) {
  std::mt19937_64 rng(40);
  auto a = preset("A3");
  auto x = random_projective_complex(a, rng, -1, 8);
  auto y = random_projective_complex(a, rng, 0, 8);
  auto k = cone(ChainMap::zero(x, y));
  for (int n = std::min(y.lo, x.lo - 1); n <= std::max(y.hi(), x.hi() - 1); ++n) {
    EXPECT_EQ(k.term(n).dim(), y.term(n).dim() + x.term(n + 1).dim());
    EXPECT_EQ(cohomology_dim(k, n), cohomology_dim(y, n) + cohomology_dim(x, n + 1));
  }
}

TEST(Cone, SignConvention) {
  auto c = a2_resolution();
  auto k = cone(ChainMap::identity(c));
  // Cone^{-1} = Y^{-1} ⊕ X^0, d = [[d_Y, f], [0, -d_X]] on Y^{-2}⊕X^{-1} -> Y^{-1}⊕X^0.
  Mat d = k.diff(-2);
  std::size_t p2 = c.term(-1).dim(), p1 = c.term(0).dim();
  ASSERT_EQ(d.rows(), p2 + p1);
  ASSERT_EQ(d.cols(), p2);
  EXPECT_EQ(d.block(0, 0, p2, p2), Mat::identity(p2));
  EXPECT_EQ(d.block(p2, 0, p1, p2), -c.diff(-1));
}

TEST(Cone, EulerCharacteristic) {
  std::mt19937_64 rng(41);
  for (const auto& name : {"A2", "A3", "kronecker-trunc", "nak3"}) {
    auto a = preset(name);
    for (int t = 0; t < 4; ++t) {
      auto x = random_projective_complex(a, rng, -1, 8);
      auto y = random_projective_complex(a, rng, -1, 8);
      auto f = random_chain_map(x, y, rng);
      auto k = cone(f);
      EXPECT_EQ(euler_characteristic(k), euler_characteristic(y) - euler_characteristic(x)) << name;
      EXPECT_EQ(cohomology_euler(k), cohomology_euler(y) - cohomology_euler(x)) << name;
    }
  }
}

TEST(Truncate, Cases) {
  auto a = preset("A3-rad2");
  auto r = *projective_normalize(simple_module(a, 0));  // degrees -2..0
  ASSERT_EQ(r.lo, -2);
  auto same = brutal_truncate(r, -5, Truncate::Below);
  EXPECT_EQ(same.lo, r.lo);
  EXPECT_EQ(same.terms.size(), r.terms.size());
  EXPECT_TRUE(brutal_truncate(r, 3, Truncate::Below).is_zero_complex());
  auto prefix = brutal_truncate(r, -1, Truncate::Above);
  EXPECT_EQ(prefix.lo, -2);
  EXPECT_EQ(prefix.hi(), -1);
  EXPECT_EQ(prefix.diff(-2), r.diff(-2));
}

TEST(NullHomotopy, Cases) {
  auto c = a2_resolution();
  EXPECT_TRUE(is_null_homotopic(ChainMap::zero(c, c)));
  auto a = preset("A2");
  Module m = projective_indecomposables(a)[0].module;
  auto split = BoundedComplex::make(a, Side::Left, 0, {m, m}, {Mat::identity(m.dim())});
  auto h = is_null_homotopic(ChainMap::identity(split));
  ASSERT_TRUE(h);
  auto s1 = BoundedComplex::concentrated(simple_module(a, 0), 0);
  EXPECT_FALSE(is_null_homotopic(ChainMap::identity(s1)));
  EXPECT_FALSE(is_null_homotopic(ChainMap::identity(c)));
}

TEST(Contractible, Cases) {
  auto a = preset("A2");
  EXPECT_TRUE(is_contractible(cone(ChainMap::identity(a2_resolution()))));
  EXPECT_FALSE(is_contractible(BoundedComplex::concentrated(simple_module(a, 0), 0)));
  Module p2 = projective_indecomposables(a)[1].module;
  EXPECT_TRUE(is_contractible(BoundedComplex::make(a, Side::Left, 0, {p2, p2}, {Mat::identity(1)})));
  std::mt19937_64 rng(42);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(is_contractible(random_contractible_complex(preset("A3"), rng, -2, 2)));
}

TEST(Normalize, Modules) {
  auto a = preset("A2");
  Module p1 = projective_indecomposables(a)[0].module;
  auto n = projective_normalize(p1);
  ASSERT_TRUE(n);
  EXPECT_EQ(n->lo, 0);
  EXPECT_EQ(n->terms.size(), 1u);
  EXPECT_TRUE(isomorphic(n->term(0), p1));
  auto r = a2_resolution();
  EXPECT_TRUE(isomorphic(r.term(-1), projective_indecomposables(a)[1].module));
  EXPECT_TRUE(isomorphic(r.term(0), p1));
  EXPECT_FALSE(projective_normalize(simple_module(preset("dual"), 0)));
}

TEST(Normalize, ComplexQuasiIsomorphic) {
  std::mt19937_64 rng(43);
  for (const auto& name : {"A2", "A3", "A3-rad2"}) {
    auto a = preset(name);
    for (int t = 0; t < 4; ++t) {
      Module m = random_module(a, rng, 5), n = random_module(a, rng, 5);
      auto hom = hom_space(m, n);
      Mat f(n.dim(), m.dim());
      for (const auto& h : hom) f += Rat(static_cast<int>(rng() % 5) - 2) * h;
      auto c = BoundedComplex::make(a, Side::Left, -1, {m, n}, {f});
      auto p = projective_normalize(c);
      ASSERT_TRUE(p.complex) << p.diagnostic;
      EXPECT_TRUE(all_terms_projective(*p.complex));
      for (int d = -4; d <= 1; ++d) EXPECT_EQ(cohomology_dim(*p.complex, d), cohomology_dim(c, d)) << name;
    }
  }
}

TEST(Width, Examples) {
  auto a = preset("A2");
  EXPECT_EQ(homological_width(cone(ChainMap::identity(a2_resolution()))), fin(0));
  EXPECT_EQ(homological_width(BoundedComplex::concentrated(projective_indecomposables(a)[0].module, 3)), fin(0));
  EXPECT_EQ(homological_width(a2_resolution()), fin(1));
  EXPECT_THROW(homological_width(BoundedComplex::concentrated(simple_module(a, 0), 0)), Error);
}

TEST(Width, EqualsPd) {
  std::mt19937_64 rng(44);
  for (const auto& name : {"A2", "ut2", "A3-rad2", "kronecker-trunc", "nak3"}) {
    auto a = preset(name);
    for (int t = 0; t < 5; ++t) {
      Module m = random_module(a, rng, 6);
      ExtNat pd = projective_dimension(m);
      auto n = projective_normalize(m);
      ASSERT_EQ(pd.is_finite(), n.has_value());
      if (n) EXPECT_EQ(homological_width(*n), pd) << name;
    }
  }
}

TEST(Width, HomotopyInvariance) {
  std::mt19937_64 rng(45);
  for (const auto& name : {"A2", "A3", "A3-rad2", "kronecker-trunc"}) {
    auto a = preset(name);
    for (int t = 0; t < 4; ++t) {
      auto p = random_projective_complex(a, rng, -2, 8);
      auto c = random_contractible_complex(a, rng, p.lo - 1, p.hi() + 1);
      ExtNat w = homological_width(p);
      EXPECT_EQ(homological_width(direct_sum(p, c)), w) << name;
      EXPECT_EQ(homological_width(random_conjugate(direct_sum(c, p), rng)), w) << name;
      auto q = random_projective_complex(a, rng, 0, 8);
      EXPECT_EQ(homological_width(direct_sum(p, cone(ChainMap::identity(q)))), w) << name;
    }
  }
}

TEST(Cowidth, Examples) {
  auto a = preset("A2");
  auto da = dual_module(regular_module(a, Side::Right));
  EXPECT_EQ(homological_cowidth(BoundedComplex::concentrated(da, 0)), fin(0));
  auto inj = BoundedComplex::make(a, Side::Left, 0, {da, da}, {Mat::identity(da.dim())});
  EXPECT_EQ(homological_cowidth(inj), fin(0));
  EXPECT_THROW(homological_cowidth(BoundedComplex::concentrated(simple_module(a, 1), 0)), Error);
}

TEST(Cowidth, DualOfResolution) {
  std::mt19937_64 rng(46);
  int checked = 0;
  for (const auto& name : {"A2", "A3", "A3-rad2", "kronecker-trunc"}) {
    auto a = preset(name);
    for (int t = 0; t < 3; ++t) {
      auto r = projective_normalize(random_module(a, rng, 6));
      if (!r) continue;
      auto d = dual_complex(*r);
      EXPECT_TRUE(all_terms_injective(d));
      EXPECT_EQ(homological_cowidth(d), homological_width(*r)) << name;
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(ConeSupport, NormalizesAboveMinimum) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> deg(-3, 1);
  for (const auto& name : {"A2", "A3", "A3-rad2", "kronecker-trunc", "nak3"}) {
    auto a = preset(name);
    for (int t = 0; t < 3; ++t) {
      int n = deg(rng), m = deg(rng);
      auto p = random_projective_complex(a, rng, n, 8);
      auto q = random_projective_complex(a, rng, m, 8);
      ASSERT_GE(lowest_nonzero_degree(p), n);
      ASSERT_GE(lowest_nonzero_degree(q), m);
      // Cone of Q[-1] -> P has terms Q^i ⊕ P^i.
      auto k = cone(random_chain_map(shift(q, -1), p, rng));
      auto norm = projective_normalize(k);
      ASSERT_TRUE(norm.complex) << norm.diagnostic;
      EXPECT_GE(lowest_nonzero_degree(*norm.complex), std::min(n, m)) << name;
      EXPECT_GE(lowest_nonzero_degree(minimize_projective_complex(k)), std::min(n, m)) << name;
    }
  }
}
