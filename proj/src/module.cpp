#include "findim/module.hpp"

#include <algorithm>
#include <numeric>

namespace findim {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

Mat act_sum(const std::vector<Mat>& action, std::size_t dim, const Vec& x) {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out += x[i] * action[i];
  return out;
}

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

void require_compatible(const Module& m, const Module& n, const char* what) {
  if (!compatible(m, n)) throw Error(std::string(what) + ": modules over different algebras or sides");
}

}  // namespace

// ---------------------------------------------------------------- Module

Module Module::make_unchecked(AlgebraPtr a, Side side, std::size_t dim, std::vector<Mat> action) {
  Module m;
  m.d_ = std::make_shared<const Data>(Data{std::move(a), side, dim, std::move(action)});
  return m;
}

Module Module::make(AlgebraPtr a, Side side, std::size_t dim, std::vector<Mat> action) {
  if (!a) throw Error("module over a null algebra");
  const std::size_t n = a->dim();
  if (action.size() != n) throw Error("module needs one action matrix per algebra basis element");
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim) throw Error("module action matrix has wrong shape");
  if (act_sum(action, dim, a->unit()) != Mat::identity(dim)) throw Error("module: unit does not act as identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat lhs(dim, dim);
      for (const auto& t : a->product(i, j)) lhs += t.coeff * action[t.index];
      Mat rhs = side == Side::Left ? action[i] * action[j] : action[j] * action[i];
      if (lhs != rhs)
        throw Error("module action is not multiplicative at basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  return make_unchecked(std::move(a), side, dim, std::move(action));
}

Module Module::zero(AlgebraPtr a, Side side) {
  std::vector<Mat> act(a->dim(), Mat(0, 0));
  return make_unchecked(std::move(a), side, 0, std::move(act));
}

Mat Module::act(const Vec& x) const { return act_sum(d_->action, d_->dim, x); }

Module Module::as_left() const {
  if (side() == Side::Left) return *this;
  return make_unchecked(algebra()->opposite(), Side::Left, dim(), action());
}

Module Module::as_right() const {
  if (side() == Side::Right) return *this;
  return make_unchecked(algebra()->opposite(), Side::Right, dim(), action());
}

bool compatible(const Module& m, const Module& n) {
  return m.side() == n.side() && same_algebra(m.algebra(), n.algebra());
}

bool is_module_hom(const Module& m, const Module& n, const Mat& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (const auto& g : m.algebra()->generators())
    if (f * m.act(g) != n.act(g) * f) return false;
  return true;
}

ModuleHom ModuleHom::make(Module source, Module target, Mat matrix) {
  require_compatible(source, target, "module hom");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw Error("module hom matrix has wrong shape");
  if (!is_module_hom(source, target, matrix)) throw Error("matrix does not commute with the action");
  return ModuleHom{std::move(source), std::move(target), std::move(matrix)};
}

ModuleHom ModuleHom::identity(const Module& m) { return ModuleHom{m, m, Mat::identity(m.dim())}; }

// ---------------------------------------------------------------- basic modules

Module regular_module(const AlgebraPtr& a, Side side) {
  std::vector<Mat> act;
  for (std::size_t i = 0; i < a->dim(); ++i)
    act.push_back(side == Side::Left ? a->left_mult(a->basis_vector(i)) : a->right_mult(a->basis_vector(i)));
  return Module::make_unchecked(a, side, a->dim(), std::move(act));
}

std::vector<ProjectiveIndecomposable> projective_indecomposables(const AlgebraPtr& a) {
  if (!a->has_idempotents()) throw Error("projective modules need an idempotent system");
  Module reg = regular_module(a, Side::Left);
  std::vector<ProjectiveIndecomposable> out;
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    Subspace b = a->peirce(a->unit(), a->idempotents()[v]);
    out.push_back({v, b, submodule(reg, b).module});
  }
  return out;
}

Module simple_module(const AlgebraPtr& a, std::size_t vertex, Side side) {
  if (vertex >= a->vertex_count()) throw Error("simple module: vertex out of range");
  if (side == Side::Right) {
    Module s = simple_module(a->opposite(), vertex, Side::Left);
    return Module::make_unchecked(a, Side::Right, s.dim(), s.action());
  }
  Module reg = regular_module(a, Side::Left);
  Submodule p = submodule(reg, a->peirce(a->unit(), a->idempotents()[vertex]));
  return top_and_radical(p.module).top.module;
}

Module injective_module(const AlgebraPtr& a, std::size_t vertex) {
  if (vertex >= a->vertex_count()) throw Error("injective module: vertex out of range");
  Module reg = regular_module(a, Side::Right);
  Submodule p = submodule(reg, a->peirce(a->idempotents()[vertex], a->unit()));
  return dual_module(p.module);
}

// ---------------------------------------------------------------- projective sums

ProjectiveCatalog::ProjectiveCatalog(const AlgebraPtr& a) : a_(a), p_(projective_indecomposables(a)) {}

ProjectiveSum ProjectiveCatalog::sum(const std::vector<std::size_t>& vertices) const {
  ProjectiveSum s;
  s.algebra = a_;
  s.vertices = vertices;
  std::vector<Module> parts;
  std::size_t off = 0;
  for (auto v : vertices) {
    s.offsets.push_back(off);
    s.bases.push_back(p_.at(v).basis);
    parts.push_back(p_.at(v).module);
    off += p_.at(v).module.dim();
  }
  s.module = parts.empty() ? Module::zero(a_, Side::Left) : direct_sum(parts).module;
  return s;
}

Mat ProjectiveCatalog::map_from(const ProjectiveSum& p, const Module& target, const std::vector<Vec>& gens) const {
  if (gens.size() != p.summands()) throw Error("map_from: one generator image per summand expected");
  Mat out(target.dim(), p.module.dim());
  for (std::size_t l = 0; l < p.summands(); ++l) {
    const Vec& e = a_->idempotents()[p.vertices[l]];
    Vec g = target.act(e).apply(gens[l]);
    const Subspace& b = p.bases[l];
    for (std::size_t k = 0; k < b.dim(); ++k) out.set_col(p.offsets[l] + k, target.act(b.vector(k)).apply(g));
  }
  return out;
}

Vec ProjectiveSum::generator(std::size_t l) const {
  return embed(l, algebra->idempotents()[vertices[l]]);
}

Vec ProjectiveSum::embed(std::size_t l, const Vec& x) const {
  Vec out(module.dim());
  Vec c = bases[l].coords(x);
  for (std::size_t k = 0; k < c.size(); ++k) out[offsets[l] + k] = c[k];
  return out;
}

Vec ProjectiveSum::component(std::size_t l, const Vec& coords) const {
  Vec out(algebra->dim());
  for (std::size_t k = 0; k < bases[l].dim(); ++k) axpy(out, coords[offsets[l] + k], bases[l].vector(k));
  return out;
}

// ---------------------------------------------------------------- sums, sub, quotients

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error("direct_sum of no modules");
  for (const auto& p : parts) require_compatible(parts[0], p, "direct_sum");
  const AlgebraPtr& a = parts[0].algebra();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  std::vector<Mat> act(a->dim(), Mat(total, total));
  DirectSum out;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < a->dim(); ++i) act[i].set_block(off, off, p.action(i));
    Mat inj(total, p.dim()), proj(p.dim(), total);
    for (std::size_t k = 0; k < p.dim(); ++k) {
      inj(off + k, k) = 1;
      proj(k, off + k) = 1;
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
    off += p.dim();
  }
  out.module = Module::make_unchecked(a, parts[0].side(), total, std::move(act));
  return out;
}

Submodule submodule(const Module& m, const Subspace& s) {
  if (s.ambient != m.dim()) throw Error("submodule: ambient dimension mismatch");
  const auto gens = m.algebra()->generators();
  for (const auto& g : gens) {
    Mat ag = m.act(g);
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (!s.contains(ag.apply(s.vector(k)))) throw Error("subspace is not a submodule");
  }
  const std::size_t d = s.dim();
  std::vector<Mat> act;
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
    Mat a(d, d);
    for (std::size_t k = 0; k < d; ++k) a.set_col(k, s.coords(m.action(i).apply(s.vector(k))));
    act.push_back(std::move(a));
  }
  Module sub = Module::make_unchecked(m.algebra(), m.side(), d, std::move(act));
  return Submodule{sub, s, ModuleHom{sub, m, s.basis.transpose()}};
}

Submodule generated_submodule(const Module& m, const std::vector<Vec>& gens) {
  Subspace s = span_vectors(gens, m.dim());
  const auto ag = m.algebra()->generators();
  std::vector<Vec> todo(s.basis.row_list());
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (const auto& g : ag) {
      Vec w = m.act(g).apply(v);
      if (s.contains(w)) continue;
      s = subspace_sum(s, span_vectors({w}, m.dim()));
      todo.push_back(w);
    }
  }
  return submodule(m, s);
}

QuotientModule quotient_module(const Module& m, const Subspace& s) {
  if (s.ambient != m.dim()) throw Error("quotient: ambient dimension mismatch");
  for (const auto& g : m.algebra()->generators()) {
    Mat ag = m.act(g);
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (!s.contains(ag.apply(s.vector(k)))) throw Error("subspace is not a submodule");
  }
  auto comp = complement_indices(s);
  const std::size_t q = comp.size();
  Mat proj(q, m.dim()), lift(m.dim(), q);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vec r = s.reduce(unit_vec(m.dim(), j));
    for (std::size_t k = 0; k < q; ++k) proj(k, j) = r[comp[k]];
  }
  for (std::size_t k = 0; k < q; ++k) lift(comp[k], k) = 1;
  std::vector<Mat> act;
  for (std::size_t i = 0; i < m.algebra()->dim(); ++i) act.push_back(proj * m.action(i) * lift);
  Module quo = Module::make_unchecked(m.algebra(), m.side(), q, std::move(act));
  return QuotientModule{quo, s, ModuleHom{m, quo, proj}};
}

Vec QuotientModule::lift(const Vec& q) const {
  auto comp = complement_indices(killed);
  Vec out(killed.ambient);
  for (std::size_t k = 0; k < comp.size(); ++k) out[comp[k]] = q[k];
  return out;
}

Submodule kernel(const ModuleHom& f) { return submodule(f.source, null_space(f.matrix)); }
Submodule image(const ModuleHom& f) { return submodule(f.target, column_space(f.matrix)); }
QuotientModule cokernel(const ModuleHom& f) { return quotient_module(f.target, column_space(f.matrix)); }

// ---------------------------------------------------------------- Hom

namespace {

std::vector<Mat> hom_space_generic(const Module& m, const Module& n) {
  const std::size_t dm = m.dim(), dn = n.dim(), u = dm * dn;
  const auto gens = m.algebra()->generators();
  Mat eq(gens.size() * u, u);
  std::size_t row = 0;
  for (const auto& g : gens) {
    Mat am = m.act(g), an = n.act(g);
    for (std::size_t p = 0; p < dn; ++p)
      for (std::size_t q = 0; q < dm; ++q, ++row) {
        for (std::size_t j = 0; j < dm; ++j)
          if (sgn(am(j, q)) != 0) eq(row, p * dm + j) += am(j, q);
        for (std::size_t i = 0; i < dn; ++i)
          if (sgn(an(p, i)) != 0) eq(row, i * dm + q) -= an(p, i);
      }
  }
  Mat k = kernel_basis(eq);
  std::vector<Mat> out;
  for (std::size_t r = 0; r < k.rows(); ++r) out.push_back(unflatten(k.row(r), dn, dm));
  return out;
}

std::vector<Mat> hom_space_vertex(const Module& m, const Module& n) {
  const BasedAlgebra& a = *m.algebra();
  const std::size_t r = a.vertex_count();
  std::vector<Subspace> bm(r), bn(r);
  std::vector<Mat> em(r), en(r);
  std::vector<std::size_t> off(r + 1, 0);
  for (std::size_t v = 0; v < r; ++v) {
    em[v] = m.act(a.idempotents()[v]);
    en[v] = n.act(a.idempotents()[v]);
    bm[v] = column_space(em[v]);
    bn[v] = column_space(en[v]);
    off[v + 1] = off[v] + bm[v].dim() * bn[v].dim();
  }
  const std::size_t u = off[r];
  std::vector<Vec> rows;
  for (const auto& arr : a.arrows()) {
    const std::size_t s = arr.source, t = arr.target;
    const std::size_t ms = bm[s].dim(), mt = bm[t].dim(), ns = bn[s].dim(), nt = bn[t].dim();
    if (nt == 0 || ms == 0) continue;
    Mat am = m.act(arr.element), an = n.act(arr.element);
    Mat c(mt, ms), g(nt, ns);
    for (std::size_t k = 0; k < ms; ++k) c.set_col(k, bm[t].coords(am.apply(bm[s].vector(k))));
    for (std::size_t j = 0; j < ns; ++j) g.set_col(j, bn[t].coords(an.apply(bn[s].vector(j))));
    // X_t C - G X_s = 0, X_v is n_v x m_v stored row-major.
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t k = 0; k < ms; ++k) {
        Vec eq(u);
        for (std::size_t j = 0; j < mt; ++j)
          if (sgn(c(j, k)) != 0) eq[off[t] + i * mt + j] += c(j, k);
        for (std::size_t j = 0; j < ns; ++j)
          if (sgn(g(i, j)) != 0) eq[off[s] + j * ms + k] -= g(i, j);
        if (!is_zero(eq)) rows.push_back(std::move(eq));
      }
  }
  Mat k = kernel_basis(rows.empty() ? Mat(0, u) : Mat::from_rows(rows, u));
  std::vector<Mat> proj(r), inc(r);
  for (std::size_t v = 0; v < r; ++v) {
    proj[v] = em[v].select_rows(bm[v].pivots);  // coordinates of e_v x
    inc[v] = bn[v].basis.transpose();
  }
  std::vector<Mat> out;
  for (std::size_t row = 0; row < k.rows(); ++row) {
    Mat phi(n.dim(), m.dim());
    for (std::size_t v = 0; v < r; ++v) {
      if (bm[v].dim() == 0 || bn[v].dim() == 0) continue;
      Mat x(bn[v].dim(), bm[v].dim());
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = k(row, off[v] + i * x.cols() + j);
      phi += inc[v] * x * proj[v];
    }
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace

std::vector<Mat> hom_space(const Module& m, const Module& n) {
  require_compatible(m, n, "hom_space");
  if (m.dim() == 0 || n.dim() == 0) return {};
  Module lm = m.as_left(), ln = n.as_left();
  if (lm.algebra()->is_split_basic()) return hom_space_vertex(lm, ln);
  return hom_space_generic(lm, ln);
}

// ---------------------------------------------------------------- radical, top

Subspace radical_subspace(const Module& m) {
  const BasedAlgebra& a = *m.algebra();
  std::vector<Vec> cols;
  auto add_image = [&](const Vec& x) {
    Mat ax = m.act(x);
    for (std::size_t j = 0; j < ax.cols(); ++j) {
      Vec c = ax.col(j);
      if (!is_zero(c)) cols.push_back(std::move(c));
    }
  };
  if (a.is_split_basic()) {
    for (const auto& arr : a.arrows()) add_image(arr.element);
  } else {
    for (std::size_t k = 0; k < a.radical().dim(); ++k) add_image(a.radical().vector(k));
  }
  return span_vectors(cols, m.dim());
}

TopAndRadical top_and_radical(const Module& m) {
  Subspace r = radical_subspace(m);
  return TopAndRadical{submodule(m, r), quotient_module(m, r)};
}

std::vector<std::size_t> dimension_vector(const Module& m) {
  std::vector<std::size_t> out;
  for (const auto& e : m.algebra()->idempotents()) out.push_back(rank(m.act(e)));
  return out;
}

std::vector<std::size_t> top_multiplicities(const Module& m) {
  const BasedAlgebra& a = *m.algebra();
  Subspace r = radical_subspace(m);
  std::vector<std::size_t> out;
  for (const auto& e : a.idempotents()) {
    Mat ae = m.act(e);
    std::size_t whole = rank(ae);
    std::size_t in_rad = r.dim() == 0 ? 0 : rank(ae * r.basis.transpose());
    Subspace c = a.peirce(e, e);
    std::size_t residue = c.dim() - subspace_intersection(c, a.radical()).dim();
    out.push_back((whole - in_rad) / residue);
  }
  return out;
}

// ---------------------------------------------------------------- duality, restriction

Module dual_module(const Module& m) {
  std::vector<Mat> act;
  for (const auto& x : m.action()) act.push_back(x.transpose());
  return Module::make_unchecked(m.algebra(), m.side() == Side::Left ? Side::Right : Side::Left, m.dim(),
                                std::move(act));
}

Module restrict_scalars(const AlgebraHom& f, const Module& m) {
  if (!same_algebra(f.target, m.algebra())) throw Error("restrict_scalars: module is not over the target");
  std::vector<Mat> act;
  for (std::size_t b = 0; b < f.source->dim(); ++b) act.push_back(m.act(f.matrix.col(b)));
  return Module::make_unchecked(f.source, m.side(), m.dim(), std::move(act));
}

bool is_projective(const Module& m) {
  if (m.dim() == 0) return true;
  Module l = m.as_left();
  const AlgebraPtr& a = l.algebra();
  auto mult = top_multiplicities(l);
  std::size_t expected = 0;
  for (std::size_t v = 0; v < mult.size(); ++v)
    expected += mult[v] * a->peirce(a->unit(), a->idempotents()[v]).dim();
  return expected == l.dim();
}

bool is_injective(const Module& m) { return is_projective(dual_module(m)); }

std::optional<ModuleHom> find_module_isomorphism(const Module& m, const Module& n, std::uint64_t seed) {
  require_compatible(m, n, "find_module_isomorphism");
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return ModuleHom{m, n, Mat(0, 0)};
  if (m.algebra()->has_idempotents()) {
    Module lm = m.as_left(), ln = n.as_left();
    if (dimension_vector(lm) != dimension_vector(ln)) return std::nullopt;
  }
  auto h = hom_space(m, n);
  if (h.empty()) return std::nullopt;
  for (const auto& f : h)
    if (rank(f) == m.dim()) return ModuleHom{m, n, f};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 32; ++trial) {
    Mat f(n.dim(), m.dim());
    for (const auto& b : h) f += Rat(coeff(rng)) * b;
    if (rank(f) == m.dim()) return ModuleHom{m, n, f};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- tensor

namespace {

Mat complement_projection(const Subspace& s) {
  auto comp = complement_indices(s);
  Mat proj(comp.size(), s.ambient);
  for (std::size_t j = 0; j < s.ambient; ++j) {
    Vec r = s.reduce(unit_vec(s.ambient, j));
    for (std::size_t k = 0; k < comp.size(); ++k) proj(k, j) = r[comp[k]];
  }
  return proj;
}

TensorProduct tensor_generic(const Module& x, const Module& y) {
  const std::size_t m = x.dim(), n = y.dim(), u = m * n;
  const AlgebraPtr& a = x.algebra();
  std::vector<Vec> rels;
  for (const auto& g : a->generators()) {
    Mat rx = x.act(g), ly = y.act(g);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Vec r(u);
        for (std::size_t p2 = 0; p2 < m; ++p2)
          if (sgn(rx(p2, p)) != 0) r[p2 * n + q] += rx(p2, p);
        for (std::size_t q2 = 0; q2 < n; ++q2)
          if (sgn(ly(q2, q)) != 0) r[p * n + q2] -= ly(q2, q);
        if (!is_zero(r)) rels.push_back(std::move(r));
      }
  }
  Mat proj = complement_projection(span_vectors(rels, u));
  return TensorProduct{proj.rows(), proj};
}

TensorProduct tensor_vertex(const Module& x, const Module& y) {
  const BasedAlgebra& a = *y.algebra();
  const std::size_t r = a.vertex_count(), m = x.dim(), n = y.dim();
  std::vector<Subspace> bx(r), by(r);
  std::vector<Mat> wx(r), wy(r);
  std::vector<std::size_t> off(r + 1, 0);
  for (std::size_t v = 0; v < r; ++v) {
    Mat ex = x.act(a.idempotents()[v]), ey = y.act(a.idempotents()[v]);
    bx[v] = column_space(ex);
    by[v] = column_space(ey);
    wx[v] = ex.select_rows(bx[v].pivots);
    wy[v] = ey.select_rows(by[v].pivots);
    off[v + 1] = off[v] + bx[v].dim() * by[v].dim();
  }
  const std::size_t w = off[r];
  auto idx = [&](std::size_t v, std::size_t i, std::size_t j) { return off[v] + i * by[v].dim() + j; };
  Mat embed(w, m * n);
  for (std::size_t v = 0; v < r; ++v)
    for (std::size_t i = 0; i < bx[v].dim(); ++i)
      for (std::size_t p = 0; p < m; ++p) {
        if (sgn(wx[v](i, p)) == 0) continue;
        for (std::size_t j = 0; j < by[v].dim(); ++j)
          for (std::size_t q = 0; q < n; ++q)
            if (sgn(wy[v](j, q)) != 0) embed(idx(v, i, j), p * n + q) += wx[v](i, p) * wy[v](j, q);
      }
  std::vector<Vec> rels;
  for (const auto& arr : a.arrows()) {
    // Right action of the arrow on x maps x e_t into x e_s.
    const std::size_t s = arr.source, t = arr.target;
    Mat ax = x.act(arr.element), ay = y.act(arr.element);
    for (std::size_t i = 0; i < bx[t].dim(); ++i) {
      Vec xa = bx[s].coords(ax.apply(bx[t].vector(i)));
      for (std::size_t j = 0; j < by[s].dim(); ++j) {
        Vec ay_j = by[t].coords(ay.apply(by[s].vector(j)));
        Vec rel(w);
        for (std::size_t i2 = 0; i2 < xa.size(); ++i2)
          if (sgn(xa[i2]) != 0) rel[idx(s, i2, j)] += xa[i2];
        for (std::size_t j2 = 0; j2 < ay_j.size(); ++j2)
          if (sgn(ay_j[j2]) != 0) rel[idx(t, i, j2)] -= ay_j[j2];
        if (!is_zero(rel)) rels.push_back(std::move(rel));
      }
    }
  }
  Mat proj = complement_projection(span_vectors(rels, w));
  return TensorProduct{proj.rows(), proj * embed};
}

}  // namespace

TensorProduct tensor_over_algebra(const Module& right, const Module& left) {
  if (right.side() != Side::Right || left.side() != Side::Left)
    throw Error("tensor_over_algebra expects a right module and a left module");
  if (!same_algebra(right.algebra(), left.algebra())) throw Error("tensor_over_algebra: different algebras");
  if (right.dim() == 0 || left.dim() == 0) return TensorProduct{0, Mat(0, right.dim() * left.dim())};
  if (left.algebra()->is_split_basic()) return tensor_vertex(right, left);
  return tensor_generic(right, left);
}

bool is_ring_epimorphism(const AlgebraHom& f) {
  Module sr = restrict_scalars(f, regular_module(f.target, Side::Right));
  Module sl = restrict_scalars(f, regular_module(f.target, Side::Left));
  return tensor_over_algebra(sr, sl).dim == f.target->dim();
}

// ---------------------------------------------------------------- End

Vec EndomorphismAlgebra::coords(const Mat& f) const {
  Vec v = flatten(f);
  if (!span.contains(v)) throw Error("map is not an endomorphism of the module");
  return span.coords(v);
}

EndomorphismAlgebra endomorphism_algebra(const Module& m, std::uint64_t seed) {
  if (m.dim() == 0) throw Error("endomorphism algebra of the zero module");
  const std::size_t d = m.dim();
  std::vector<Vec> flat;
  for (const auto& h : hom_space(m, m)) flat.push_back(flatten(h));
  EndomorphismAlgebra out;
  out.span = span_vectors(flat, d * d);
  const std::size_t n = out.span.dim();
  for (std::size_t k = 0; k < n; ++k) out.basis.push_back(unflatten(out.span.vector(k), d, d));
  BasedAlgebra::Table t(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vec c = out.coords(out.basis[p] * out.basis[q]);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) t[p * n + q].push_back({k, c[k]});
    }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("f" + std::to_string(k + 1));
  AlgebraPtr bare = BasedAlgebra::make_bare(n, std::move(t), out.coords(Mat::identity(d)), labels);
  out.algebra = with_idempotents(bare, seed);
  out.split_basic = out.algebra->is_split_basic();
  return out;
}

CovariantCheck is_covariant_morphism(const ModuleHom& f) {
  const Module& y = f.source;
  const Module& x = f.target;
  CovariantCheck out;
  {
    std::vector<Vec> imgs;
    auto hxy = hom_space(x, y);
    for (const auto& h : hxy) imgs.push_back(flatten(f.matrix * h));
    out.injective = span_vectors(imgs, x.dim() * x.dim()).dim() == hxy.size();
  }
  std::vector<Vec> fyy, fyx;
  for (const auto& h : hom_space(y, y)) fyy.push_back(flatten(h));
  for (const auto& h : hom_space(y, x)) fyx.push_back(flatten(h));
  Subspace syy = span_vectors(fyy, y.dim() * y.dim());
  Subspace syx = span_vectors(fyx, x.dim() * y.dim());
  const std::size_t nc = syy.dim(), nb = syx.dim();
  if (nb == 0) {
    out.split = true;
    out.section = std::vector<Mat>{};
    return out;
  }
  std::vector<Mat> u, h;
  for (std::size_t c = 0; c < nc; ++c) u.push_back(unflatten(syy.vector(c), y.dim(), y.dim()));
  for (std::size_t b = 0; b < nb; ++b) h.push_back(unflatten(syx.vector(b), x.dim(), y.dim()));
  // Unknown S (nc x nb), s(h_b) = sum_c S_cb u_c.
  const std::size_t unk = nc * nb;
  auto var = [&](std::size_t c, std::size_t b) { return c * nb + b; };
  std::vector<Vec> rows;
  Vec rhs;
  const std::size_t ent = x.dim() * y.dim();
  std::vector<Vec> fu;
  for (std::size_t c = 0; c < nc; ++c) fu.push_back(flatten(f.matrix * u[c]));
  for (std::size_t b = 0; b < nb; ++b) {
    Vec hb = flatten(h[b]);
    for (std::size_t e = 0; e < ent; ++e) {
      Vec row(unk);
      for (std::size_t c = 0; c < nc; ++c) row[var(c, b)] = fu[c][e];
      rows.push_back(std::move(row));
      rhs.push_back(hb[e]);
    }
  }
  std::vector<std::vector<Vec>> mu(nc, std::vector<Vec>(nc));
  for (std::size_t c1 = 0; c1 < nc; ++c1)
    for (std::size_t c = 0; c < nc; ++c) mu[c1][c] = syy.coords(flatten(u[c1] * u[c]));
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t c = 0; c < nc; ++c) {
      Vec kappa = syx.coords(flatten(h[b] * u[c]));
      for (std::size_t c2 = 0; c2 < nc; ++c2) {
        Vec row(unk);
        for (std::size_t b2 = 0; b2 < nb; ++b2) row[var(c2, b2)] += kappa[b2];
        for (std::size_t c1 = 0; c1 < nc; ++c1) row[var(c1, b)] -= mu[c1][c][c2];
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
    }
  auto sol = solve_linear(Mat::from_rows(rows, unk), Mat::from_cols({rhs}, rows.size()));
  if (!sol) return out;
  out.split = true;
  std::vector<Mat> sec;
  for (std::size_t b = 0; b < nb; ++b) {
    Mat s(y.dim(), y.dim());
    for (std::size_t c = 0; c < nc; ++c) s += (*sol)(var(c, b), 0) * u[c];
    sec.push_back(std::move(s));
  }
  out.section = std::move(sec);
  return out;
}

Subspace factor_through_ideal(const EndomorphismAlgebra& end, const Module& x, const Module& y) {
  std::vector<Vec> gens;
  auto hxy = hom_space(x, y);
  auto hyx = hom_space(y, x);
  for (const auto& g : hyx)
    for (const auto& h : hxy) gens.push_back(end.coords(g * h));
  return span_vectors(gens, end.algebra->dim());
}

Subspace factor_through_ideal(const Module& x, const Module& y) {
  return factor_through_ideal(endomorphism_algebra(x), x, y);
}

// ---------------------------------------------------------------- random

Module random_module(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t max_dim) {
  ProjectiveCatalog cat(a);
  const std::size_t r = a->vertex_count();
  std::uniform_int_distribution<std::size_t> vert(0, r - 1);
  std::uniform_int_distribution<int> count(1, 2), coeff(-2, 2);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::size_t> pv, qv;
    int np = count(rng), nq = attempt < 12 ? count(rng) : 0;
    for (int i = 0; i < np; ++i) pv.push_back(vert(rng));
    for (int i = 0; i < nq; ++i) qv.push_back(vert(rng));
    std::sort(pv.begin(), pv.end());
    ProjectiveSum p = cat.sum(pv);
    if (p.module.dim() > max_dim + 6) continue;
    ProjectiveSum q = cat.sum(qv);
    std::vector<Vec> gens;
    for (auto w : qv) {
      Vec g(p.module.dim());
      for (std::size_t l = 0; l < pv.size(); ++l) {
        Subspace part = subspace_intersection(a->peirce(a->idempotents()[w], a->idempotents()[pv[l]]), a->radical());
        Vec x(a->dim());
        for (std::size_t k = 0; k < part.dim(); ++k) axpy(x, Rat(coeff(rng)), part.vector(k));
        g = add(g, p.embed(l, x));
      }
      gens.push_back(std::move(g));
    }
    Mat f = qv.empty() ? Mat(p.module.dim(), 0) : cat.map_from(q, p.module, gens);
    Module m = cokernel(ModuleHom{q.module, p.module, f}).module;
    if (m.dim() > 0 && m.dim() <= max_dim) return m;
  }
  return simple_module(a, vert(rng));
}

Module random_conjugate(const Module& m, std::mt19937_64& rng) {
  const std::size_t d = m.dim();
  std::uniform_int_distribution<int> coeff(-2, 2);
  Mat t = Mat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) t(i, j) = coeff(rng);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  t = Mat::identity(d).select_rows(perm) * t;
  Mat ti = *inverse(t);
  std::vector<Mat> act;
  for (const auto& x : m.action()) act.push_back(t * x * ti);
  return Module::make_unchecked(m.algebra(), m.side(), d, std::move(act));
}

}  // namespace findim
