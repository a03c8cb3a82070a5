#include "findim/complex.hpp"

#include <algorithm>
#include <numeric>

namespace findim {

namespace {

Module conjugate_module(const Module& m, const Mat& t, const Mat& ti) {
  std::vector<Mat> act;
  for (const auto& x : m.action()) act.push_back(t * x * ti);
  return Module::make_unchecked(m.algebra(), m.side(), m.dim(), std::move(act));
}

Mat random_invertible(std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  Mat t = Mat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) t(i, j) = coeff(rng);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Mat::identity(d).select_rows(perm) * t;
}

// Strip zero terms at both ends.
BoundedComplex trimmed(BoundedComplex c) {
  std::size_t first = 0, last = c.terms.size();
  while (first < last && c.terms[first].dim() == 0) ++first;
  while (last > first && c.terms[last - 1].dim() == 0) --last;
  if (first == last) return BoundedComplex::zero(c.algebra, c.side);
  BoundedComplex out;
  out.algebra = c.algebra;
  out.side = c.side;
  out.lo = c.lo + static_cast<int>(first);
  out.terms.assign(c.terms.begin() + first, c.terms.begin() + last);
  out.diffs.assign(c.diffs.begin() + first, c.diffs.begin() + (last - 1));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- construction

BoundedComplex BoundedComplex::make(AlgebraPtr a, Side side, int lo, std::vector<Module> terms,
                                    std::vector<Mat> diffs) {
  if (terms.empty()) {
    if (!diffs.empty()) throw Error("complex without terms has differentials");
    return zero(std::move(a), side);
  }
  if (diffs.size() + 1 != terms.size()) throw Error("complex needs one differential between consecutive terms");
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (terms[k].side() != side || !same_algebra(terms[k].algebra(), a))
      throw Error("complex term in degree " + std::to_string(lo + static_cast<int>(k)) + " is over another algebra");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const int n = lo + static_cast<int>(k);
    if (!is_module_hom(terms[k], terms[k + 1], diffs[k]))
      throw Error("differential d^" + std::to_string(n) + " is not a module map");
    if (k + 1 < diffs.size() && !(diffs[k + 1] * diffs[k]).is_zero())
      throw Error("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " is not zero");
  }
  return BoundedComplex{std::move(a), side, lo, std::move(terms), std::move(diffs)};
}

BoundedComplex BoundedComplex::zero(AlgebraPtr a, Side side) { return BoundedComplex{std::move(a), side, 0, {}, {}}; }

BoundedComplex BoundedComplex::concentrated(const Module& m, int degree) {
  return BoundedComplex{m.algebra(), m.side(), degree, {m}, {}};
}

bool BoundedComplex::is_zero_complex() const {
  return std::all_of(terms.begin(), terms.end(), [](const Module& m) { return m.dim() == 0; });
}

Module BoundedComplex::term(int n) const {
  if (n < lo || n > hi()) return Module::zero(algebra, side);
  return terms[n - lo];
}

Mat BoundedComplex::diff(int n) const {
  if (n >= lo && n < hi()) return diffs[n - lo];
  return Mat(term(n + 1).dim(), term(n).dim());
}

ChainMap ChainMap::make(BoundedComplex source, BoundedComplex target, int lo, std::vector<Mat> maps) {
  ChainMap f{std::move(source), std::move(target), lo, std::move(maps)};
  if (f.source.side != f.target.side || !same_algebra(f.source.algebra, f.target.algebra))
    throw Error("chain map between complexes over different algebras");
  const int a = std::min({f.source.lo, f.target.lo, lo}) - 1;
  const int b = std::max({f.source.hi(), f.target.hi(), lo + static_cast<int>(f.maps.size()) - 1}) + 1;
  for (int n = a; n <= b; ++n) {
    Mat c = f.component(n);
    if (c.rows() != f.target.term(n).dim() || c.cols() != f.source.term(n).dim())
      throw Error("chain map component in degree " + std::to_string(n) + " has wrong shape");
    if (!is_module_hom(f.source.term(n), f.target.term(n), c))
      throw Error("chain map component in degree " + std::to_string(n) + " is not a module map");
    if (f.component(n + 1) * f.source.diff(n) != f.target.diff(n) * c)
      throw Error("chain map does not commute with the differentials in degree " + std::to_string(n));
  }
  return f;
}

ChainMap ChainMap::identity(const BoundedComplex& c) {
  std::vector<Mat> maps;
  for (const auto& t : c.terms) maps.push_back(Mat::identity(t.dim()));
  return ChainMap{c, c, c.lo, std::move(maps)};
}

ChainMap ChainMap::zero(const BoundedComplex& source, const BoundedComplex& target) {
  return ChainMap{source, target, source.lo, {}};
}

Mat ChainMap::component(int n) const {
  const int k = n - lo;
  if (k >= 0 && k < static_cast<int>(maps.size()) && source.term(n).dim() > 0 && target.term(n).dim() > 0)
    return maps[k];
  return Mat(target.term(n).dim(), source.term(n).dim());
}

// ---------------------------------------------------------------- cohomology

Module cohomology(const BoundedComplex& c, int n) {
  Module t = c.term(n);
  if (t.dim() == 0) return t;
  Submodule z = submodule(t, null_space(c.diff(n)));
  Mat b = c.diff(n - 1);
  std::vector<Vec> im;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Vec v = b.col(j);
    if (!is_zero(v)) im.push_back(z.space.coords(v));
  }
  return quotient_module(z.module, span_vectors(im, z.module.dim())).module;
}

std::size_t cohomology_dim(const BoundedComplex& c, int n) {
  const std::size_t d = c.term(n).dim();
  if (d == 0) return 0;
  return d - rank(c.diff(n)) - rank(c.diff(n - 1));
}

std::string SupInf::str() const {
  if (acyclic) return "sup=-inf inf=+inf";
  return "sup=" + std::to_string(sup) + " inf=" + std::to_string(inf);
}

SupInf sup_inf(const BoundedComplex& c) {
  SupInf s;
  for (int n = c.lo; n <= c.hi(); ++n) {
    if (cohomology_dim(c, n) == 0) continue;
    if (s.acyclic) {
      s.acyclic = false;
      s.inf = n;
    }
    s.sup = n;
  }
  return s;
}

long euler_characteristic(const BoundedComplex& c) {
  long chi = 0;
  for (int n = c.lo; n <= c.hi(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.term(n).dim());
  return chi;
}

// ---------------------------------------------------------------- constructions

BoundedComplex shift(const BoundedComplex& c, int k) {
  BoundedComplex out = c;
  out.lo = c.lo - k;
  if (k % 2 != 0)
    for (auto& d : out.diffs) d = -d;
  return out;
}

BoundedComplex cone(const ChainMap& f) {
  const BoundedComplex& x = f.source;
  const BoundedComplex& y = f.target;
  if (x.terms.empty() && y.terms.empty()) return BoundedComplex::zero(y.algebra, y.side);
  int lo = std::min(y.terms.empty() ? x.lo - 1 : y.lo, x.terms.empty() ? y.lo : x.lo - 1);
  int hi = std::max(y.terms.empty() ? x.hi() - 1 : y.hi(), x.terms.empty() ? y.hi() : x.hi() - 1);
  BoundedComplex out;
  out.algebra = y.algebra;
  out.side = y.side;
  out.lo = lo;
  for (int n = lo; n <= hi; ++n) out.terms.push_back(direct_sum({y.term(n), x.term(n + 1)}).module);
  for (int n = lo; n < hi; ++n) {
    const std::size_t yn = y.term(n).dim(), xn = x.term(n + 1).dim();
    const std::size_t ym = y.term(n + 1).dim(), xm = x.term(n + 2).dim();
    Mat d(ym + xm, yn + xn);
    d.set_block(0, 0, y.diff(n));
    d.set_block(0, yn, f.component(n + 1));
    d.set_block(ym, yn, -x.diff(n + 1));
    out.diffs.push_back(std::move(d));
  }
  return out;
}

BoundedComplex direct_sum(const BoundedComplex& x, const BoundedComplex& y) {
  if (x.terms.empty()) return y;
  if (y.terms.empty()) return x;
  if (x.side != y.side || !same_algebra(x.algebra, y.algebra)) throw Error("direct sum of complexes over different algebras");
  const int lo = std::min(x.lo, y.lo), hi = std::max(x.hi(), y.hi());
  BoundedComplex out;
  out.algebra = x.algebra;
  out.side = x.side;
  out.lo = lo;
  for (int n = lo; n <= hi; ++n) out.terms.push_back(direct_sum({x.term(n), y.term(n)}).module);
  for (int n = lo; n < hi; ++n) out.diffs.push_back(block_diag(x.diff(n), y.diff(n)));
  return out;
}

BoundedComplex dual_complex(const BoundedComplex& c) {
  BoundedComplex out;
  out.side = c.side == Side::Left ? Side::Right : Side::Left;
  out.algebra = c.algebra;
  if (c.terms.empty()) return out;
  out.lo = -c.hi();
  for (int m = out.lo; m <= c.lo * -1; ++m) out.terms.push_back(dual_module(c.term(-m)));
  for (int m = out.lo; m < -c.lo; ++m) out.diffs.push_back(c.diff(-m - 1).transpose());
  return out;
}

BoundedComplex brutal_truncate(const BoundedComplex& c, int at, Truncate side) {
  BoundedComplex out;
  out.algebra = c.algebra;
  out.side = c.side;
  int lo = c.lo, hi = c.hi();
  if (side == Truncate::Below) lo = std::max(lo, at);
  if (side == Truncate::Above) hi = std::min(hi, at);
  if (lo > hi) return BoundedComplex::zero(c.algebra, c.side);
  out.lo = lo;
  for (int n = lo; n <= hi; ++n) out.terms.push_back(c.term(n));
  for (int n = lo; n < hi; ++n) out.diffs.push_back(c.diff(n));
  return out;
}

// ---------------------------------------------------------------- homotopy

namespace {

Vec flat(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::optional<std::vector<Mat>> is_null_homotopic(const ChainMap& f) {
  const BoundedComplex& x = f.source;
  const BoundedComplex& y = f.target;
  if (x.terms.empty()) return std::vector<Mat>{};
  const int lo = x.lo, hi = x.hi();
  std::vector<std::vector<Mat>> basis;  // per degree n in [lo, hi]
  std::vector<std::size_t> off{0};
  for (int n = lo; n <= hi; ++n) {
    basis.push_back(hom_space(x.term(n), y.term(n - 1)));
    off.push_back(off.back() + basis.back().size());
  }
  const std::size_t unk = off.back();
  std::vector<Vec> rows;
  Vec rhs;
  for (int n = lo; n <= hi; ++n) {
    // f^n = d_Y^{n-1} h^n + h^{n+1} d_X^n
    const std::size_t r = y.term(n).dim(), c = x.term(n).dim();
    if (r == 0 || c == 0) continue;
    std::vector<Vec> cols(unk, Vec(r * c));
    const std::size_t k = n - lo;
    for (std::size_t b = 0; b < basis[k].size(); ++b) cols[off[k] + b] = flat(y.diff(n - 1) * basis[k][b]);
    if (n + 1 <= hi)
      for (std::size_t b = 0; b < basis[k + 1].size(); ++b) cols[off[k + 1] + b] = flat(basis[k + 1][b] * x.diff(n));
    Vec target = flat(f.component(n));
    for (std::size_t e = 0; e < r * c; ++e) {
      Vec row(unk);
      for (std::size_t u = 0; u < unk; ++u) row[u] = cols[u][e];
      rows.push_back(std::move(row));
      rhs.push_back(target[e]);
    }
  }
  Mat sol(unk, 1);
  if (!rows.empty()) {
    auto s = solve_linear(Mat::from_rows(rows, unk), Mat::from_cols({rhs}, rows.size()));
    if (!s) return std::nullopt;
    sol = *s;
  }
  std::vector<Mat> h;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t k = n - lo;
    Mat hn(y.term(n - 1).dim(), x.term(n).dim());
    for (std::size_t b = 0; b < basis[k].size(); ++b) hn += sol(off[k] + b, 0) * basis[k][b];
    h.push_back(std::move(hn));
  }
  return h;
}

bool is_contractible(const BoundedComplex& c) { return is_null_homotopic(ChainMap::identity(c)).has_value(); }

std::vector<ChainMap> chain_map_space(const BoundedComplex& x, const BoundedComplex& y) {
  if (x.terms.empty() || y.terms.empty()) return {};
  const int lo = std::max(x.lo, y.lo), hi = std::min(x.hi(), y.hi());
  if (lo > hi) return {ChainMap::zero(x, y)};
  std::vector<std::vector<Mat>> basis;
  std::vector<std::size_t> off{0};
  for (int n = lo; n <= hi; ++n) {
    basis.push_back(hom_space(x.term(n), y.term(n)));
    off.push_back(off.back() + basis.back().size());
  }
  const std::size_t unk = off.back();
  std::vector<Vec> rows;
  for (int n = lo - 1; n <= hi; ++n) {
    // f^{n+1} d_X^n - d_Y^n f^n = 0
    const std::size_t r = y.term(n + 1).dim(), c = x.term(n).dim();
    if (r == 0 || c == 0) continue;
    std::vector<Vec> cols(unk, Vec(r * c));
    if (n >= lo) {
      const std::size_t k = n - lo;
      for (std::size_t b = 0; b < basis[k].size(); ++b) cols[off[k] + b] = flat(-(y.diff(n) * basis[k][b]));
    }
    if (n + 1 <= hi) {
      const std::size_t k = n + 1 - lo;
      for (std::size_t b = 0; b < basis[k].size(); ++b) {
        Vec v = flat(basis[k][b] * x.diff(n));
        for (std::size_t e = 0; e < v.size(); ++e) cols[off[k] + b][e] += v[e];
      }
    }
    for (std::size_t e = 0; e < r * c; ++e) {
      Vec row(unk);
      for (std::size_t u = 0; u < unk; ++u) row[u] = cols[u][e];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  Mat k = kernel_basis(rows.empty() ? Mat(0, unk) : Mat::from_rows(rows, unk));
  std::vector<ChainMap> out;
  for (std::size_t s = 0; s < k.rows(); ++s) {
    std::vector<Mat> maps;
    for (int n = lo; n <= hi; ++n) {
      const std::size_t kk = n - lo;
      Mat m(y.term(n).dim(), x.term(n).dim());
      for (std::size_t b = 0; b < basis[kk].size(); ++b) m += k(s, off[kk] + b) * basis[kk][b];
      maps.push_back(std::move(m));
    }
    out.push_back(ChainMap{x, y, lo, std::move(maps)});
  }
  return out;
}

bool all_terms_projective(const BoundedComplex& c) {
  return std::all_of(c.terms.begin(), c.terms.end(), [](const Module& m) { return is_projective(m); });
}

bool all_terms_injective(const BoundedComplex& c) {
  return std::all_of(c.terms.begin(), c.terms.end(), [](const Module& m) { return is_injective(m); });
}

// ---------------------------------------------------------------- normalization

std::optional<BoundedComplex> projective_normalize(const Module& m, std::size_t cap) {
  Resolution res = minimal_resolution(m, cap);
  if (!res.pd.is_finite()) return std::nullopt;
  const int pd = static_cast<int>(res.pd.value());
  BoundedComplex out;
  out.algebra = res.module.algebra();
  out.side = Side::Left;
  if (res.module.dim() == 0) return BoundedComplex::zero(out.algebra, Side::Left);
  out.lo = -pd;
  for (int k = 0; k <= pd; ++k) out.terms.push_back(res.terms[pd - k].module);
  for (int k = 0; k < pd; ++k) out.diffs.push_back(res.differentials[pd - k - 1]);
  if (m.side() == Side::Right)
    for (auto& t : out.terms) t = t.as_right();
  if (m.side() == Side::Right) {
    out.algebra = m.algebra();
    out.side = Side::Right;
  }
  return out;
}

namespace {

struct PTerm {
  Module module;
  std::vector<Vec> gens;
  std::vector<std::size_t> verts;
};

// Coefficients of the generators in x modulo the radical.
std::optional<Vec> top_coefficients(const PTerm& t, const Subspace& rad, const Vec& x) {
  const std::size_t g = t.gens.size();
  std::vector<Vec> cols = t.gens;
  for (std::size_t k = 0; k < rad.dim(); ++k) cols.push_back(rad.vector(k));
  auto sol = solve_linear(Mat::from_cols(cols, t.module.dim()), Mat::from_cols({x}, t.module.dim()));
  if (!sol) return std::nullopt;
  Vec c(g);
  for (std::size_t k = 0; k < g; ++k) c[k] = (*sol)(k, 0);
  return c;
}

PTerm drop_summand(const PTerm& t, const Vec& generator, std::size_t index, Mat& proj, Mat& lift) {
  Submodule s = generated_submodule(t.module, {generator});
  QuotientModule q = quotient_module(t.module, s.space);
  proj = q.projection.matrix;
  lift = Mat(t.module.dim(), q.module.dim());
  for (std::size_t k = 0; k < q.module.dim(); ++k) lift.set_col(k, q.lift(unit_vec(q.module.dim(), k)));
  PTerm out;
  out.module = q.module;
  for (std::size_t k = 0; k < t.gens.size(); ++k) {
    if (k == index) continue;
    out.gens.push_back(proj.apply(t.gens[k]));
    out.verts.push_back(t.verts[k]);
  }
  return out;
}

BoundedComplex minimize_terms(const AlgebraPtr& a, int lo, std::vector<PTerm> terms, std::vector<Mat> diffs) {
  ProjectiveCatalog cat(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < terms.size() && !changed; ++k) {
      if (terms[k].gens.empty() || terms[k + 1].gens.empty()) continue;
      Subspace rad = radical_subspace(terms[k + 1].module);
      for (std::size_t l = 0; l < terms[k].gens.size() && !changed; ++l) {
        Vec y = diffs[k].apply(terms[k].gens[l]);
        if (rad.contains(y)) continue;
        auto c = top_coefficients(terms[k + 1], rad, y);
        if (!c) continue;
        std::size_t lp = 0;
        while (lp < c->size() && (sgn((*c)[lp]) == 0 || terms[k + 1].verts[lp] != terms[k].verts[l])) ++lp;
        if (lp == c->size()) continue;
        Mat p0, l0, p1, l1;
        PTerm t0 = drop_summand(terms[k], terms[k].gens[l], l, p0, l0);
        PTerm t1 = drop_summand(terms[k + 1], y, lp, p1, l1);
        if (k > 0) diffs[k - 1] = p0 * diffs[k - 1];
        diffs[k] = p1 * diffs[k] * l0;
        if (k + 1 < diffs.size()) diffs[k + 1] = diffs[k + 1] * l1;
        terms[k] = std::move(t0);
        terms[k + 1] = std::move(t1);
        changed = true;
      }
    }
  }
  // Rewrite every term as a standard sum of A e_v.
  BoundedComplex out;
  out.algebra = a;
  out.side = Side::Left;
  out.lo = lo;
  std::vector<Mat> iso, inv;
  for (auto& t : terms) {
    ProjectiveSum s = cat.sum(t.verts);
    Mat f = t.gens.empty() ? Mat(t.module.dim(), 0) : cat.map_from(s, t.module, t.gens);
    auto fi = inverse(f);
    if (!fi) throw Error("internal: minimized term is not free on its generators");
    out.terms.push_back(s.module);
    iso.push_back(f);
    inv.push_back(*fi);
  }
  for (std::size_t k = 0; k < diffs.size(); ++k) out.diffs.push_back(inv[k + 1] * diffs[k] * iso[k]);
  return trimmed(out);
}

}  // namespace

BoundedComplex minimize_projective_complex(const BoundedComplex& c) {
  if (c.terms.empty()) return c;
  const bool right = c.side == Side::Right;
  std::vector<PTerm> terms;
  AlgebraPtr a;
  for (int n = c.lo; n <= c.hi(); ++n) {
    Module t = c.term(n).as_left();
    a = t.algebra();
    ProjectiveCover cov = projective_cover(t);
    if (cov.projective.module.dim() != t.dim())
      throw Error("term in degree " + std::to_string(n) + " is not projective");
    terms.push_back({t, cov.generators, cov.projective.vertices});
  }
  BoundedComplex out = minimize_terms(a, c.lo, std::move(terms), c.diffs);
  if (right) {
    for (auto& t : out.terms) t = t.as_right();
    out.algebra = c.algebra;
    out.side = Side::Right;
  }
  return out;
}

Normalized projective_normalize(const BoundedComplex& c, std::size_t cap) {
  Normalized out;
  if (c.is_zero_complex()) {
    out.complex = BoundedComplex::zero(c.algebra, c.side);
    return out;
  }
  const bool right = c.side == Side::Right;
  std::vector<Module> cterm;
  for (const auto& t : c.terms) cterm.push_back(t.as_left());
  const AlgebraPtr a = cterm.front().algebra();
  ProjectiveCatalog cat(a);
  auto C = [&](int n) { return n < c.lo || n > c.hi() ? Module::zero(a, Side::Left) : cterm[n - c.lo]; };
  const int floor_degree = c.lo - static_cast<int>(cap) - 1;

  // Built from the top degree down: P^n, eps^n : P^n -> C^n, dP^n : P^n -> P^{n+1}.
  std::vector<ProjectiveSum> p;  // p[0] is degree hi, p[1] degree hi-1, ...
  std::vector<Mat> eps, dp;
  ProjectiveSum zero_sum = cat.sum({});
  auto P = [&](int n) -> const ProjectiveSum& {
    int k = c.hi() - n;
    return (k < 0 || k >= static_cast<int>(p.size())) ? zero_sum : p[k];
  };
  auto EPS = [&](int n) { int k = c.hi() - n; return (k < 0 || k >= static_cast<int>(eps.size())) ? Mat(C(n).dim(), P(n).module.dim()) : eps[k]; };
  auto DP = [&](int n) { int k = c.hi() - n; return (k < 0 || k >= static_cast<int>(dp.size())) ? Mat(P(n + 1).module.dim(), P(n).module.dim()) : dp[k]; };

  int n = c.hi();
  for (;; --n) {
    Module cn = C(n);
    const ProjectiveSum& pn1 = P(n + 1);
    Module cone_n = direct_sum({cn, pn1.module}).module;
    const std::size_t a1 = cn.dim(), b1 = pn1.module.dim();
    const std::size_t a2 = C(n + 1).dim(), b2 = P(n + 2).module.dim();
    Mat dd(a2 + b2, a1 + b1);
    dd.set_block(0, 0, c.diff(n));
    dd.set_block(0, a1, EPS(n + 1));
    dd.set_block(a2, a1, -DP(n + 1));
    Submodule k = submodule(cone_n, null_space(dd));
    Mat dc = c.diff(n - 1);
    std::vector<Vec> im;
    for (std::size_t j = 0; j < dc.cols(); ++j) {
      Vec v(a1 + b1);
      bool nz = false;
      for (std::size_t i = 0; i < a1; ++i) {
        v[i] = dc(i, j);
        nz = nz || sgn(v[i]) != 0;
      }
      if (nz) im.push_back(k.space.coords(v));
    }
    QuotientModule q = quotient_module(k.module, span_vectors(im, k.module.dim()));
    if (q.module.dim() == 0) {
      p.push_back(cat.sum({}));
      eps.push_back(Mat(a1, 0));
      dp.push_back(Mat(b1, 0));
      if (n <= c.lo) break;
      continue;
    }
    if (n <= floor_degree) {
      out.diagnostic = "projective replacement does not terminate within cap " + std::to_string(cap) +
                       " degrees below " + std::to_string(c.lo);
      return out;
    }
    ProjectiveCover cov = projective_cover(cat, q.module);
    std::vector<Vec> gens;
    for (std::size_t l = 0; l < cov.generators.size(); ++l) {
      Vec lifted = k.space.basis.transpose().apply(q.lift(cov.generators[l]));
      gens.push_back(cone_n.act(a->idempotents()[cov.projective.vertices[l]]).apply(lifted));
    }
    Mat phi = cat.map_from(cov.projective, cone_n, gens);
    eps.push_back(phi.block(0, 0, a1, phi.cols()));
    dp.push_back(-phi.block(a1, 0, b1, phi.cols()));
    p.push_back(cov.projective);
  }
  // Degrees n+1 .. hi hold the replacement (degree n is zero).
  std::vector<PTerm> terms;
  std::vector<Mat> diffs;
  for (int m = n + 1; m <= c.hi(); ++m) {
    const ProjectiveSum& s = P(m);
    PTerm t{s.module, {}, s.vertices};
    for (std::size_t l = 0; l < s.summands(); ++l) t.gens.push_back(s.generator(l));
    terms.push_back(std::move(t));
    if (m < c.hi()) diffs.push_back(DP(m));
  }
  if (terms.empty()) {
    out.complex = BoundedComplex::zero(c.algebra, c.side);
    return out;
  }
  BoundedComplex res = minimize_terms(a, n + 1, std::move(terms), std::move(diffs));
  if (right) {
    for (auto& t : res.terms) t = t.as_right();
    res.algebra = c.algebra;
    res.side = Side::Right;
  }
  out.complex = std::move(res);
  return out;
}

// ---------------------------------------------------------------- width

ExtNat homological_width(const BoundedComplex& c, std::size_t cap) {
  for (int n = c.lo; n <= c.hi(); ++n)
    if (!is_projective(c.term(n)))
      throw Error("homological_width: term in degree " + std::to_string(n) + " is not projective");
  SupInf s = sup_inf(c);
  if (s.acyclic) return ExtNat::finite(0);
  Module coker = cokernel(ModuleHom{c.term(s.inf - 1), c.term(s.inf), c.diff(s.inf - 1)}).module;
  return ExtNat::finite(s.sup - s.inf) + projective_dimension(coker, cap);
}

ExtNat homological_cowidth(const BoundedComplex& c, std::size_t cap) {
  for (int n = c.lo; n <= c.hi(); ++n)
    if (!is_injective(c.term(n)))
      throw Error("homological_cowidth: term in degree " + std::to_string(n) + " is not injective");
  SupInf s = sup_inf(c);
  if (s.acyclic) return ExtNat::finite(0);
  Module ker = kernel(ModuleHom{c.term(s.sup), c.term(s.sup + 1), c.diff(s.sup)}).module;
  return ExtNat::finite(s.sup - s.inf) + injective_dimension(ker, cap);
}

// ---------------------------------------------------------------- random

BoundedComplex random_projective_complex(const AlgebraPtr& a, std::mt19937_64& rng, int lo, std::size_t cap) {
  auto piece = [&](int bottom) {
    for (int attempt = 0; attempt < 12; ++attempt) {
      Module m = random_module(a, rng, 6);
      auto r = projective_normalize(m, cap);
      if (r && !r->terms.empty()) return shift(*r, r->lo - bottom);
    }
    ProjectiveCatalog cat(a);
    return BoundedComplex::concentrated(cat.at(0).module, bottom);
  };
  std::uniform_int_distribution<int> gap(0, 2), coin(0, 1);
  BoundedComplex x = piece(lo);
  if (coin(rng)) {
    BoundedComplex y = piece(lo + 1 + gap(rng));
    if (coin(rng)) {
      // Cone^n = x^n ⊕ y^n, so the support stays above lo.
      BoundedComplex ys = shift(y, -1);
      auto f = chain_map_space(ys, x);
      std::uniform_int_distribution<int> coeff(-2, 2);
      ChainMap g = ChainMap::zero(ys, x);
      if (!f.empty()) {
        g = f[0];
        for (auto& m : g.maps) m = Mat(m.rows(), m.cols());
        for (const auto& b : f) {
          Rat t = coeff(rng);
          for (std::size_t k = 0; k < g.maps.size(); ++k) g.maps[k] += t * b.maps[k];
        }
      }
      return trimmed(cone(g));
    }
    return direct_sum(x, y);
  }
  return x;
}

BoundedComplex random_contractible_complex(const AlgebraPtr& a, std::mt19937_64& rng, int lo, int hi) {
  ProjectiveCatalog cat(a);
  std::uniform_int_distribution<std::size_t> vert(0, a->vertex_count() - 1);
  std::uniform_int_distribution<int> deg(lo, std::max(lo, hi - 1)), count(1, 2);
  BoundedComplex out = BoundedComplex::zero(a, Side::Left);
  int pieces = count(rng);
  for (int i = 0; i < pieces; ++i) {
    std::vector<std::size_t> vs{vert(rng)};
    if (count(rng) == 2) vs.push_back(vert(rng));
    std::sort(vs.begin(), vs.end());
    Module q = cat.sum(vs).module;
    int n = deg(rng);
    BoundedComplex piece{a, Side::Left, n, {q, q}, {Mat::identity(q.dim())}};
    out = direct_sum(out, piece);
  }
  return out;
}

BoundedComplex random_conjugate(const BoundedComplex& c, std::mt19937_64& rng) {
  BoundedComplex out = c;
  std::vector<Mat> t, ti;
  for (auto& m : out.terms) {
    Mat x = random_invertible(m.dim(), rng);
    Mat xi = *inverse(x);
    m = conjugate_module(m, x, xi);
    t.push_back(x);
    ti.push_back(xi);
  }
  for (std::size_t k = 0; k < out.diffs.size(); ++k) out.diffs[k] = t[k + 1] * out.diffs[k] * ti[k];
  return out;
}

}  // namespace findim
