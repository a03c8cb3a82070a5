#include "findim/contexts.hpp"

namespace findim {

Mat section(const Mat& p) {
  auto s = solve_linear(p, Mat::identity(p.rows()));
  if (!s) throw Error("section: map is not surjective");
  return *s;
}

Module right_regular_restricted(const AlgebraHom& f) { return restrict_scalars(f, regular_module(f.target, Side::Right)); }

Module left_regular_restricted(const AlgebraHom& f) { return restrict_scalars(f, regular_module(f.target, Side::Left)); }

Subspace idempotent_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices) {
  std::vector<Vec> gens;
  for (auto v : vertices) {
    if (v >= a->vertex_count()) throw Error("idempotent_ideal: vertex out of range");
    gens.push_back(a->idempotents()[v]);
  }
  return ideal_closure(*a, gens);
}

Module ideal_as_left_module(const AlgebraPtr& a, const Subspace& ideal) {
  return submodule(regular_module(a, Side::Left), ideal).module;
}
Module ideal_as_right_module(const AlgebraPtr& a, const Subspace& ideal) {
  return submodule(regular_module(a, Side::Right), ideal).module;
}
Module quotient_as_left_module(const AlgebraPtr& a, const Subspace& ideal) {
  return quotient_module(regular_module(a, Side::Left), ideal).module;
}
Module quotient_as_right_module(const AlgebraPtr& a, const Subspace& ideal) {
  return quotient_module(regular_module(a, Side::Right), ideal).module;
}

// ---------------------------------------------------------------- exact contexts

ExactContextCheck check_exact_context(const ExactContext& ctx) {
  const std::size_t dr = ctx.lambda.source->dim(), ds = ctx.lambda.target->dim(), dt = ctx.mu.target->dim();
  const std::size_t dm = ctx.m.dim;
  if (!same_algebra(ctx.lambda.source, ctx.mu.source)) throw Error("exact context: λ and μ start at different rings");
  Mat in = vstack(ctx.lambda.matrix, ctx.mu.matrix);
  Mat out(dm, ds + dt);
  for (std::size_t i = 0; i < ds; ++i) out.set_col(i, ctx.m.left_of(unit_vec(ds, i)).apply(ctx.element));
  for (std::size_t j = 0; j < dt; ++j) out.set_col(ds + j, scale(Rat(-1), ctx.m.right_of(unit_vec(dt, j)).apply(ctx.element)));
  ExactContextCheck c;
  c.rank_in = rank(in);
  c.rank_out = rank(out);
  c.injective = c.rank_in == dr;
  c.complex = (out * in).is_zero();
  c.middle_exact = c.complex && c.rank_in + c.rank_out == ds + dt;
  c.surjective = c.rank_out == dm;
  return c;
}

bool check_exact_pair(const ExactContext& ctx) {
  Module s = right_regular_restricted(ctx.lambda);
  Module t = left_regular_restricted(ctx.mu);
  TensorProduct tp = tensor_over_algebra(s, t);
  const std::size_t ds = s.dim(), dt = t.dim();
  Mat big(ctx.m.dim, ds * dt);
  for (std::size_t i = 0; i < ds; ++i) {
    Vec sm = ctx.m.left_of(unit_vec(ds, i)).apply(ctx.element);
    for (std::size_t j = 0; j < dt; ++j) big.set_col(i * dt + j, ctx.m.right_of(unit_vec(dt, j)).apply(sm));
  }
  return tp.dim == ctx.m.dim && rank(big) == ctx.m.dim;
}

ExactContext milnor_context(const AlgebraPtr& r, const Subspace& i1, const Subspace& i2) {
  Subspace a = ideal_closure(*r, i1), b = ideal_closure(*r, i2);
  Quotient q1 = quotient_algebra(r, a), q2 = quotient_algebra(r, b), q12 = quotient_algebra(r, subspace_sum(a, b));
  const Mat& p12 = q12.projection.matrix;
  Mat l1 = section(q1.projection.matrix), l2 = section(q2.projection.matrix), l12 = section(p12);
  std::vector<Mat> left, right;
  for (std::size_t k = 0; k < q1.algebra->dim(); ++k) left.push_back(p12 * r->left_mult(l1.col(k)) * l12);
  for (std::size_t k = 0; k < q2.algebra->dim(); ++k) right.push_back(p12 * r->right_mult(l2.col(k)) * l12);
  Bimodule m = Bimodule::make(q1.algebra, q2.algebra, q12.algebra->dim(), std::move(left), std::move(right));
  return ExactContext{q1.projection, q2.projection, std::move(m), p12.apply(r->unit())};
}

AlgebraPtr nc_tensor_product(const ExactContext& ctx) {
  if (!check_exact_context(ctx).exact()) throw Error("nc_tensor_product: context is not exact");
  const AlgebraPtr& sa = ctx.lambda.target;
  const AlgebraPtr& ta = ctx.mu.target;
  Module t = right_regular_restricted(ctx.mu);
  Module s = left_regular_restricted(ctx.lambda);
  TensorProduct tp = tensor_over_algebra(t, s);
  if (tp.dim == 0) throw Error("nc_tensor_product: T ⊗_R S is zero");
  const std::size_t ds = sa->dim(), dt = ta->dim(), dm = ctx.m.dim;
  // (s, t) -> s m + m t, to rewrite s m t' in the image.
  Mat out(dm, ds + dt);
  for (std::size_t i = 0; i < ds; ++i) out.set_col(i, ctx.m.left_of(unit_vec(ds, i)).apply(ctx.element));
  for (std::size_t j = 0; j < dt; ++j) out.set_col(ds + j, ctx.m.right_of(unit_vec(dt, j)).apply(ctx.element));
  // Products of the pure tensors t_i ⊗ s_j, in T ⊗ S coordinates, then projected.
  auto pure = [&](const Vec& x, const Vec& y) {
    Vec v(dt * ds);
    for (std::size_t i = 0; i < dt; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < ds; ++j)
        if (sgn(y[j]) != 0) v[i * ds + j] += x[i] * y[j];
    }
    return v;
  };
  auto mul = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    // (t_i ⊗ s_j)(t_k ⊗ s_l)
    Vec x = ctx.m.right_of(unit_vec(dt, k)).apply(ctx.m.left_of(unit_vec(ds, j)).apply(ctx.element));
    auto pre = solve_linear(out, Mat::from_cols({x}, dm));
    if (!pre) throw Error("nc_tensor_product: s m t is not in the image");
    Vec s2(ds), t2(dt);
    for (std::size_t a = 0; a < ds; ++a) s2[a] = (*pre)(a, 0);
    for (std::size_t b = 0; b < dt; ++b) t2[b] = (*pre)(ds + b, 0);
    Vec ti = unit_vec(dt, i), sl = unit_vec(ds, l);
    return add(pure(ta->multiply(ti, t2), sl), pure(ti, sa->multiply(s2, sl)));
  };
  Mat lift = section(tp.quotient_map);
  const std::size_t n = tp.dim;
  std::vector<std::vector<std::pair<std::size_t, Rat>>> pre(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < dt * ds; ++c)
      if (sgn(lift(c, b)) != 0) pre[b].push_back({c, lift(c, b)});
  BasedAlgebra::Table table(n * n);
  for (std::size_t b1 = 0; b1 < n; ++b1)
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      Vec acc(dt * ds);
      for (const auto& [c1, x1] : pre[b1])
        for (const auto& [c2, x2] : pre[b2]) axpy(acc, x1 * x2, mul(c1 / ds, c1 % ds, c2 / ds, c2 % ds));
      Vec img = tp.quotient_map.apply(acc);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(img[k]) != 0) table[b1 * n + b2].push_back({k, img[k]});
    }
  Vec unit = tp.quotient_map.apply(pure(ta->unit(), sa->unit()));
  return with_idempotents(BasedAlgebra::make_bare(n, std::move(table), std::move(unit)));
}

RingExtensionContext ring_extension_context(const AlgebraHom& inclusion) {
  if (!inclusion.is_injective()) throw Error("ring_extension_context: S -> R is not injective");
  const AlgebraPtr& sa = inclusion.source;
  const AlgebraPtr& ra = inclusion.target;
  RingExtensionContext rc;
  rc.r_left = left_regular_restricted(inclusion);
  Subspace s_in_r = column_space(inclusion.matrix);
  if (s_in_r.dim() == ra->dim()) throw Error("ring_extension_context: R/S is zero");
  QuotientModule q = quotient_module(rc.r_left, s_in_r);
  const Mat& pi = q.projection.matrix;
  // R/S as a right S-module.
  Module r_right = right_regular_restricted(inclusion);
  rc.quotient_right = quotient_module(r_right, s_in_r).module;
  EndomorphismAlgebra end = endomorphism_algebra(q.module);
  rc.r_prime = end.algebra->opposite();
  const Mat lq = section(pi);
  auto right_on_quotient = [&](const Vec& s) { return pi * ra->right_mult(inclusion.apply(s)) * lq; };
  Mat sigma(rc.r_prime->dim(), sa->dim());
  for (std::size_t k = 0; k < sa->dim(); ++k) sigma.set_col(k, end.coords(right_on_quotient(unit_vec(sa->dim(), k))));
  AlgebraHom sig = AlgebraHom::make(sa, rc.r_prime, sigma);
  // M = Hom_S(R, R/S): left R by (r f)(x) = f(x r), right R' by f g = g ∘ f.
  std::vector<Mat> hb = hom_space(rc.r_left, q.module);
  std::vector<Vec> flat;
  for (const auto& f : hb) {
    Vec v;
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) v.push_back(f(i, j));
    flat.push_back(std::move(v));
  }
  const std::size_t dm = hb.size();
  Mat fm = Mat::from_cols(flat, pi.rows() * pi.cols());
  auto coords = [&](const Mat& g) {
    Vec v;
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) v.push_back(g(i, j));
    auto c = solve_linear(fm, Mat::from_cols({v}, v.size()));
    if (!c) throw Error("ring_extension_context: map left Hom_S(R, R/S)");
    return c->col(0);
  };
  std::vector<Mat> left, right;
  for (std::size_t k = 0; k < ra->dim(); ++k) {
    Mat a(dm, dm);
    Mat rr = ra->right_mult(unit_vec(ra->dim(), k));
    for (std::size_t b = 0; b < dm; ++b) a.set_col(b, coords(hb[b] * rr));
    left.push_back(std::move(a));
  }
  for (std::size_t k = 0; k < rc.r_prime->dim(); ++k) {
    Mat a(dm, dm);
    for (std::size_t b = 0; b < dm; ++b) a.set_col(b, coords(end.basis[k] * hb[b]));
    right.push_back(std::move(a));
  }
  Bimodule m = Bimodule::make(ra, rc.r_prime, dm, left, right);
  rc.ctx = ExactContext{inclusion, sig, m, coords(pi)};
  rc.hom_right = restrict_scalars(sig, Module::make_unchecked(rc.r_prime, Side::Right, dm, right));
  return rc;
}

// ---------------------------------------------------------------- homological epis

std::string to_string(Homological h) {
  switch (h) {
    case Homological::Certified: return "homological (certified)";
    case Homological::UpToCap: return "homological up to cap";
    case Homological::Not: return "not homological";
  }
  return "?";
}

HomologicalVerdict is_homological_epimorphism(const AlgebraHom& f, std::size_t cap) {
  if (!is_ring_epimorphism(f)) throw Error("is_homological_epimorphism: map is not a ring epimorphism");
  HomologicalVerdict v;
  if (f.target->dim() == 0) {
    v.status = Homological::Certified;
    v.pd_left = ExtNat::finite(0);
    return v;
  }
  Module right = right_regular_restricted(f), left = left_regular_restricted(f);
  // Tor_1 first: a nonzero value settles it before a long resolution.
  auto low = tor_dims(right, left, 1, cap);
  if (low.size() > 1 && low[1].is_finite() && low[1].value() != 0) {
    v.tor = low;
    v.status = Homological::Not;
    v.first_nonzero = 1;
    v.pd_left = projective_dimension(left, std::min<std::size_t>(cap, 4));
    return v;
  }
  v.pd_left = projective_dimension(left, cap);
  const std::size_t depth = v.pd_left.is_finite() ? std::max<std::size_t>(1, v.pd_left.value()) : cap;
  v.tor = tor_dims(right, left, depth, cap);
  for (std::size_t i = 1; i < v.tor.size(); ++i)
    if (v.tor[i].is_finite() && v.tor[i].value() != 0) {
      v.status = Homological::Not;
      v.first_nonzero = i;
      return v;
    }
  v.status = v.pd_left.is_finite() ? Homological::Certified : Homological::UpToCap;
  return v;
}

// ---------------------------------------------------------------- tensor product cases

CoproductQuotient nc_tensor_quotient_case(const AlgebraPtr& r, const Subspace& i1, const Subspace& i2) {
  Subspace a = ideal_closure(*r, i1), b = ideal_closure(*r, i2);
  if (subspace_intersection(a, b).dim() != 0) throw Error("nc_tensor_quotient_case: I1 ∩ I2 is not zero");
  Quotient q1 = quotient_algebra(r, a);
  std::vector<Vec> img;
  for (std::size_t k = 0; k < b.dim(); ++k) img.push_back(q1.projection.apply(b.vector(k)));
  Quotient q = quotient_algebra(q1.algebra, span_vectors(img, q1.algebra->dim()));
  return CoproductQuotient{q.algebra, compose(q1.projection, q.projection)};
}

CoproductTrivialExtension nc_tensor_trivial_extension_case(const AlgebraHom& lambda, const Bimodule& m) {
  if (!is_ring_epimorphism(lambda)) throw Error("nc_tensor_trivial_extension_case: λ is not a ring epimorphism");
  TrivialExtension ts = trivial_extension(lambda.target, m);
  TrivialExtension tr = trivial_extension(lambda.source, restrict_bimodule(m, lambda, lambda));
  CoproductTrivialExtension out;
  out.algebra = ts.algebra;
  out.source = tr.algebra;
  out.rho = ts.injection;
  out.mu = tr.injection;
  out.lambda_tilde = AlgebraHom::make(tr.algebra, ts.algebra, block_diag(lambda.matrix, Mat::identity(m.dim)));
  out.commutes = compose(lambda, out.rho).matrix == compose(out.mu, out.lambda_tilde).matrix;
  return out;
}

// ---------------------------------------------------------------- stratifying instance

StratifyingData stratifying_recollement_data(const AlgebraPtr& r, const Vec& e, std::size_t cap) {
  if (r->multiply(e, e) != e) throw Error("stratifying data: element is not idempotent");
  StratifyingData d;
  d.algebra = r;
  d.idempotent = e;
  d.ideal = ideal_closure(*r, std::vector<Vec>{e});
  d.re = submodule(regular_module(r, Side::Left), r->peirce(r->unit(), e)).module;
  d.ideal_module = ideal_as_left_module(r, d.ideal);
  d.pd_ideal = projective_dimension(d.ideal_module, cap);
  d.pd_re = projective_dimension(d.re, cap);
  d.w_j = d.pd_re;
  if (d.ideal.contains(r->unit())) {
    // R/ReR = 0: the surjection onto the zero ring is trivially homological.
    d.quotient_module = Module::zero(r, Side::Left);
    d.pd_quotient = ExtNat::finite(0);
    d.ring_epi = true;
    d.homological = HomologicalVerdict{Homological::Certified, {}, ExtNat::finite(0), 0};
    d.w_istar = ExtNat::finite(0);
  } else {
    d.quotient = quotient_algebra(r, d.ideal);
    d.quotient_module = quotient_as_left_module(r, d.ideal);
    d.pd_quotient = projective_dimension(d.quotient_module, cap);
    d.ring_epi = is_ring_epimorphism(d.quotient->projection);
    if (d.ring_epi) d.homological = is_homological_epimorphism(d.quotient->projection, cap);
    auto c = projective_normalize(regular_module(d.quotient->algebra, Side::Left), cap);
    d.w_istar = c ? homological_width(*c, cap) : ExtNat::unknown(static_cast<long>(cap));
  }
  d.w_i = d.pd_quotient;
  if (is_zero(e)) {
    d.pd_re_right = ExtNat::finite(0);
    d.cw_j = ExtNat::finite(0);
    return d;
  }
  d.corner = corner(r, e);
  const Corner& c = *d.corner;
  const std::size_t dc = c.algebra->dim();
  // Re as a right eRe-module.
  Subspace re_space = r->peirce(r->unit(), e);
  std::vector<Mat> ract;
  for (std::size_t k = 0; k < dc; ++k) {
    Mat rm = r->right_mult(c.embedding.col(k));
    Mat a(re_space.dim(), re_space.dim());
    for (std::size_t b = 0; b < re_space.dim(); ++b) a.set_col(b, re_space.coords(rm.apply(re_space.vector(b))));
    ract.push_back(std::move(a));
  }
  d.pd_re_right = projective_dimension(Module::make(c.algebra, Side::Right, re_space.dim(), std::move(ract)), cap);
  // j^!(D R) = e D(R) as a left eRe-module.
  Module dr = dual_module(regular_module(r, Side::Right));
  Subspace u = column_space(dr.act(e));
  std::vector<Mat> lact;
  for (std::size_t k = 0; k < dc; ++k) {
    Mat x = dr.act(c.embedding.col(k));
    Mat a(u.dim(), u.dim());
    for (std::size_t b = 0; b < u.dim(); ++b) a.set_col(b, u.coords(x.apply(u.vector(b))));
    lact.push_back(std::move(a));
  }
  d.cw_j = injective_dimension(Module::make(c.algebra, Side::Left, u.dim(), std::move(lact)), cap);
  return d;
}

// ---------------------------------------------------------------- functor estimate

std::string FunctorEstimate::str() const {
  std::string s = empty ? "+inf" : std::to_string(inf);
  return "estimate " + s + (truncated ? " (Tor truncated)" : "");
}

FunctorEstimate functor_inf_estimate(const Bimodule& f, const std::vector<Module>& sample, std::size_t max_i,
                                     std::size_t cap) {
  Module fr = Module::make_unchecked(f.right, Side::Right, f.dim, f.right_action);
  FunctorEstimate est;
  for (const auto& x : sample) {
    auto tor = tor_dims(fr, x, max_i, cap);
    long top = -1;
    for (std::size_t i = 0; i < tor.size(); ++i) {
      if (tor[i].is_unknown()) est.truncated = true;
      if (tor[i].is_finite() && tor[i].value() != 0) top = static_cast<long>(i);
    }
    if (top < 0) continue;
    if (est.empty || -top < est.inf) est.inf = -top;
    est.empty = false;
  }
  return est;
}

AlgebraPtr relative_end_quotient(const Module& x, const Module& y, std::uint64_t seed) {
  EndomorphismAlgebra end = endomorphism_algebra(x, seed);
  Subspace ideal = factor_through_ideal(end, x, y);
  if (ideal.dim() == end.algebra->dim())
    throw Error("relative_end_quotient: every endomorphism factors through y, the quotient is the zero ring");
  return quotient_algebra(end.algebra, ideal).algebra;
}

// ---------------------------------------------------------------- conditions 3 and 4 for a ring map and an ideal

LemmaAddConditions lemma_add_conditions(const AlgebraHom& lambda, const Subspace& ideal, std::size_t cap) {
  const AlgebraPtr& r = lambda.source;
  Module s = left_regular_restricted(lambda);
  Module i_right = ideal_as_right_module(r, ideal);
  Module q_right = quotient_as_right_module(r, ideal);
  ExtNat pd = projective_dimension(s, cap);
  const std::size_t depth = pd.is_finite() ? std::max<std::size_t>(1, pd.value()) : cap;
  auto vanish = [&](const std::vector<ExtNat>& tor) {
    for (std::size_t i = 1; i < tor.size(); ++i)
      if (tor[i].is_finite() && tor[i].value() != 0) return Tri::False;
    return pd.is_finite() ? Tri::True : Tri::Undetermined;
  };
  LemmaAddConditions out;
  out.certified = pd.is_finite();
  out.cond4 = vanish(tor_dims(q_right, s, depth, cap));
  // Multiplication I ⊗_R S -> S; its image is J' S = J.
  TensorProduct tp = tensor_over_algebra(i_right, s);
  const std::size_t ds = s.dim();
  Mat big(ds, i_right.dim() * ds);
  for (std::size_t i = 0; i < ideal.dim(); ++i) {
    Vec li = lambda.apply(ideal.vector(i));
    for (std::size_t j = 0; j < ds; ++j) big.set_col(i * ds + j, lambda.target->multiply(li, unit_vec(ds, j)));
  }
  const bool iso = tp.dim == rank(big);
  Tri tor3 = vanish(tor_dims(i_right, s, depth, cap));
  out.cond3 = !iso ? Tri::False : tor3;
  return out;
}

}  // namespace findim
