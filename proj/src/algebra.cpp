#include "findim/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace findim {

namespace {

void canonicalize(std::vector<BasedAlgebra::Term>& terms) {
  std::map<std::size_t, Rat> acc;
  for (auto& t : terms) acc[t.index] += t.coeff;
  terms.clear();
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) terms.push_back({k, c});
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

// b_x * (sparse vector)
Vec times_sparse_right(const BasedAlgebra& a, const std::vector<BasedAlgebra::Term>& lhs, std::size_t k) {
  Vec out(a.dim());
  for (const auto& t : lhs)
    for (const auto& u : a.product(t.index, k)) out[u.index] += t.coeff * u.coeff;
  return out;
}

Vec times_sparse_left(const BasedAlgebra& a, std::size_t i, const std::vector<BasedAlgebra::Term>& rhs) {
  Vec out(a.dim());
  for (const auto& t : rhs)
    for (const auto& u : a.product(i, t.index)) out[u.index] += t.coeff * u.coeff;
  return out;
}

}  // namespace

AlgebraPtr BasedAlgebra::make(std::size_t dim, Table table, Vec unit, std::vector<Vec> idempotents,
                              std::vector<std::string> labels) {
  if (idempotents.empty()) throw Error("algebra needs at least one idempotent (use make_bare otherwise)");
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  a->dim_ = dim;
  a->table_ = std::move(table);
  a->unit_ = std::move(unit);
  a->idempotents_ = std::move(idempotents);
  a->labels_ = std::move(labels);
  a->validate(true);
  return a;
}

AlgebraPtr BasedAlgebra::make_bare(std::size_t dim, Table table, Vec unit, std::vector<std::string> labels) {
  std::shared_ptr<BasedAlgebra> a(new BasedAlgebra());
  a->dim_ = dim;
  a->table_ = std::move(table);
  a->unit_ = std::move(unit);
  a->labels_ = std::move(labels);
  a->validate(false);
  return a;
}

void BasedAlgebra::validate(bool check_idempotents) {
  if (dim_ == 0) throw Error("algebra of dimension 0 (zero ring) is not supported");
  if (table_.size() != dim_ * dim_) throw Error("multiplication table has wrong size");
  for (auto& terms : table_) {
    for (auto& t : terms)
      if (t.index >= dim_) throw Error("multiplication table index out of range");
    canonicalize(terms);
  }
  if (unit_.size() != dim_) throw Error("unit vector has wrong length");
  if (!labels_.empty() && labels_.size() != dim_) throw Error("label list has wrong length");

  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec l = times_sparse_right(*this, product(i, j), k);
        Vec r = times_sparse_left(*this, i, product(j, k));
        if (l != r) throw Error("multiplication is not associative at basis triple " + triple(i, j, k));
      }
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw Error("unit is not a two-sided identity (fails on basis element " + std::to_string(i) + ")");
  }

  compute_structure();

  if (!check_idempotents) return;
  Vec sum(dim_);
  for (std::size_t i = 0; i < idempotents_.size(); ++i) {
    if (idempotents_[i].size() != dim_) throw Error("idempotent has wrong length");
    sum = add(sum, idempotents_[i]);
    for (std::size_t j = 0; j < idempotents_.size(); ++j) {
      Vec p = multiply(idempotents_[i], idempotents_[j]);
      Vec want = i == j ? idempotents_[i] : Vec(dim_);
      if (p != want)
        throw Error("idempotents " + std::to_string(i) + "," + std::to_string(j) + " are not orthogonal idempotents");
    }
  }
  if (sum != unit_) throw Error("idempotents do not sum to the unit");
  std::vector<Subspace> pe(idempotents_.size() * idempotents_.size());
  split_basic_ = true;
  local_residues_ = true;
  for (std::size_t i = 0; i < idempotents_.size(); ++i)
    for (std::size_t j = 0; j < idempotents_.size(); ++j) {
      Subspace p = peirce(idempotents_[i], idempotents_[j]);
      std::size_t top = p.dim() - subspace_intersection(p, rad_).dim();
      if (i == j && top != 1) {
        split_basic_ = false;
        local_residues_ = false;
      }
      if (i != j && top != 0) split_basic_ = false;
      pe[i * idempotents_.size() + j] = std::move(p);
    }
  if (!split_basic_) return;
  // Arrows: e_t rad e_s modulo e_t rad^2 e_s.
  const std::size_t r = idempotents_.size();
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t s = 0; s < r; ++s) {
      Subspace x = subspace_intersection(pe[t * r + s], rad_);
      if (x.dim() == 0) continue;
      std::vector<Vec> low;
      for (std::size_t k = 0; k < rad2_.dim(); ++k)
        low.push_back(multiply(multiply(idempotents_[t], rad2_.vector(k)), idempotents_[s]));
      Subspace cur = span_vectors(low, dim_);
      for (std::size_t k = 0; k < x.dim(); ++k) {
        Vec v = x.vector(k);
        if (cur.contains(v)) continue;
        arrows_.push_back({s, t, v});
        cur = subspace_sum(cur, span_vectors({v}, dim_));
      }
    }
}

void BasedAlgebra::compute_structure() {
  // Trace form T_ij = tr(L_{b_i b_j}); its kernel is the radical.
  std::vector<Rat> tr(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t m = 0; m < dim_; ++m)
      for (const auto& t : product(k, m))
        if (t.index == m) tr[k] += t.coeff;
  Mat form(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) form(i, j) += t.coeff * tr[t.index];
  rad_ = null_space(form);
  std::vector<Vec> sq;
  for (std::size_t a = 0; a < rad_.dim(); ++a)
    for (std::size_t b = 0; b < rad_.dim(); ++b) sq.push_back(multiply(rad_.vector(a), rad_.vector(b)));
  rad2_ = span_vectors(sq, dim_);
}

Rat BasedAlgebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.index == k) return t.coeff;
  return 0;
}

Vec BasedAlgebra::multiply(const Vec& x, const Vec& y) const {
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rat c = x[i] * y[j];
      for (const auto& t : product(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

std::string BasedAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "b" + std::to_string(i);
}

std::vector<Vec> BasedAlgebra::generators() const {
  std::vector<Vec> g;
  if (split_basic_) {
    for (const auto& e : idempotents_) g.push_back(e);
    for (const auto& a : arrows_) g.push_back(a.element);
  } else {
    for (std::size_t i = 0; i < dim_; ++i) g.push_back(basis_vector(i));
  }
  return g;
}

Mat BasedAlgebra::left_mult(const Vec& x) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) m(t.index, j) += x[i] * t.coeff;
  }
  return m;
}

Mat BasedAlgebra::right_mult(const Vec& x) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& t : product(i, j)) m(t.index, i) += x[j] * t.coeff;
  }
  return m;
}

Subspace BasedAlgebra::peirce(const Vec& e, const Vec& f) const {
  return column_space(right_mult(f) * left_mult(e));
}

AlgebraPtr BasedAlgebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (auto p = opposite_.lock()) return p;
  Table t(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t[i * dim_ + j] = table_[j * dim_ + i];
  AlgebraPtr op = has_idempotents() ? make(dim_, std::move(t), unit_, idempotents_, labels_)
                                    : make_bare(dim_, std::move(t), unit_, labels_);
  {
    std::lock_guard<std::mutex> lock2(op->op_mutex_);
    op->opposite_ = weak_from_this();
  }
  opposite_strong_ = op;
  opposite_ = op;
  return op;
}

bool BasedAlgebra::same_table(const BasedAlgebra& o) const {
  if (dim_ != o.dim_ || unit_ != o.unit_ || idempotents_ != o.idempotents_) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& x = table_[i];
    const auto& y = o.table_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].index != y[k].index || x[k].coeff != y[k].coeff) return false;
  }
  return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && a->same_table(*b)); }

// ---------------------------------------------------------------- homs

AlgebraHom AlgebraHom::make(AlgebraPtr source, AlgebraPtr target, Mat matrix) {
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw Error("algebra hom matrix has wrong shape");
  AlgebraHom f{std::move(source), std::move(target), std::move(matrix)};
  if (f.apply(f.source->unit()) != f.target->unit()) throw Error("algebra hom does not preserve the unit");
  const std::size_t n = f.source->dim();
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = f.matrix.col(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs(f.target->dim());
      for (const auto& t : f.source->product(i, j)) axpy(lhs, t.coeff, img[t.index]);
      if (lhs != f.target->multiply(img[i], img[j]))
        throw Error("algebra hom is not multiplicative at basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  return f;
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& a) { return AlgebraHom{a, a, Mat::identity(a->dim())}; }

AlgebraHom compose(const AlgebraHom& f, const AlgebraHom& g) {
  if (!same_algebra(f.target, g.source)) throw Error("compose: algebras do not match");
  return AlgebraHom{f.source, g.target, g.matrix * f.matrix};
}

// ---------------------------------------------------------------- bimodules

Bimodule Bimodule::make(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                        std::vector<Mat> right_action) {
  if (left_action.size() != left->dim() || right_action.size() != right->dim())
    throw Error("bimodule: one action matrix per basis element is required");
  for (const auto& m : left_action)
    if (m.rows() != dim || m.cols() != dim) throw Error("bimodule: action matrix has wrong shape");
  for (const auto& m : right_action)
    if (m.rows() != dim || m.cols() != dim) throw Error("bimodule: action matrix has wrong shape");
  Bimodule b{std::move(left), std::move(right), dim, std::move(left_action), std::move(right_action)};
  const Mat id = Mat::identity(dim);
  if (b.left_of(b.left->unit()) != id) throw Error("bimodule: left unit does not act as identity");
  if (b.right_of(b.right->unit()) != id) throw Error("bimodule: right unit does not act as identity");
  const auto& S = *b.left;
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = 0; j < S.dim(); ++j) {
      Mat want(dim, dim);
      for (const auto& t : S.product(i, j)) want += t.coeff * b.left_action[t.index];
      if (b.left_action[i] * b.left_action[j] != want) throw Error("bimodule: left action violates the table");
    }
  const auto& T = *b.right;
  for (std::size_t i = 0; i < T.dim(); ++i)
    for (std::size_t j = 0; j < T.dim(); ++j) {
      Mat want(dim, dim);
      for (const auto& t : T.product(i, j)) want += t.coeff * b.right_action[t.index];
      if (b.right_action[j] * b.right_action[i] != want) throw Error("bimodule: right action violates the table");
    }
  for (const auto& l : b.left_action)
    for (const auto& r : b.right_action)
      if (l * r != r * l) throw Error("bimodule: left and right actions do not commute");
  return b;
}

Mat Bimodule::left_of(const Vec& s) const {
  Mat m(dim, dim);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (sgn(s[i]) != 0) m += s[i] * left_action[i];
  return m;
}

Mat Bimodule::right_of(const Vec& t) const {
  Mat m(dim, dim);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (sgn(t[i]) != 0) m += t[i] * right_action[i];
  return m;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Mat> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->left_mult(a->basis_vector(i)));
    r.push_back(a->right_mult(a->basis_vector(i)));
  }
  return Bimodule{a, a, a->dim(), std::move(l), std::move(r)};
}

Bimodule dual_bimodule(const AlgebraPtr& a) {
  // (s.f)(x) = f(x s), (f.t)(x) = f(t x) on the dual basis.
  std::vector<Mat> l, r;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    l.push_back(a->right_mult(a->basis_vector(i)).transpose());
    r.push_back(a->left_mult(a->basis_vector(i)).transpose());
  }
  return Bimodule{a, a, a->dim(), std::move(l), std::move(r)};
}

Bimodule zero_bimodule(const AlgebraPtr& s, const AlgebraPtr& t) {
  return Bimodule{s, t, 0, std::vector<Mat>(s->dim(), Mat(0, 0)), std::vector<Mat>(t->dim(), Mat(0, 0))};
}

namespace {

// Coefficient of e_i in x modulo the radical (character of the i-th simple).
Rat character(const BasedAlgebra& a, std::size_t i, const Vec& x) {
  const Vec& e = a.idempotents().at(i);
  Vec y = a.radical().reduce(a.multiply(a.multiply(e, x), e));
  Vec ee = a.radical().reduce(e);
  for (std::size_t k = 0; k < ee.size(); ++k)
    if (sgn(ee[k]) != 0) return y[k] / ee[k];
  throw Error("idempotent lies in the radical");
}

}  // namespace

Bimodule simple_bimodule(const AlgebraPtr& s, std::size_t i, const AlgebraPtr& t, std::size_t j) {
  if (!s->is_split_basic() || !t->is_split_basic()) throw Error("simple_bimodule needs split basic algebras");
  if (i >= s->vertex_count() || j >= t->vertex_count()) throw Error("simple_bimodule: vertex out of range");
  std::vector<Mat> l, r;
  for (std::size_t k = 0; k < s->dim(); ++k) {
    Mat m(1, 1);
    m(0, 0) = character(*s, i, s->basis_vector(k));
    l.push_back(m);
  }
  for (std::size_t k = 0; k < t->dim(); ++k) {
    Mat m(1, 1);
    m(0, 0) = character(*t, j, t->basis_vector(k));
    r.push_back(m);
  }
  return Bimodule::make(s, t, 1, std::move(l), std::move(r));
}

Bimodule restrict_bimodule(const Bimodule& m, const AlgebraHom& f, const AlgebraHom& g) {
  if (!same_algebra(f.target, m.left) || !same_algebra(g.target, m.right))
    throw Error("restrict_bimodule: maps do not land in the acting algebras");
  std::vector<Mat> l, r;
  for (std::size_t k = 0; k < f.source->dim(); ++k) l.push_back(m.left_of(f.matrix.col(k)));
  for (std::size_t k = 0; k < g.source->dim(); ++k) r.push_back(m.right_of(g.matrix.col(k)));
  return Bimodule{f.source, g.source, m.dim, std::move(l), std::move(r)};
}

// ---------------------------------------------------------------- structure

Subspace radical_algebra(const BasedAlgebra& a) { return a.radical(); }
bool is_split_basic(const BasedAlgebra& a) { return a.is_split_basic(); }
AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

namespace {

// Structure constants of a subspace closed under multiplication.
BasedAlgebra::Table restricted_table(const BasedAlgebra& a, const Subspace& s) {
  const std::size_t n = s.dim();
  BasedAlgebra::Table t(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vec prod = a.multiply(s.vector(p), s.vector(q));
      if (!s.contains(prod)) throw Error("subspace is not closed under multiplication");
      Vec c = s.coords(prod);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) t[p * n + q].push_back({k, c[k]});
    }
  return t;
}

std::vector<std::string> subspace_labels(const BasedAlgebra& a, const Subspace& s, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vec v = s.vector(k);
    std::size_t nz = 0, idx = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0) ++nz, idx = j;
    out.push_back(nz == 1 && v[idx] == 1 ? a.label(idx) : prefix + std::to_string(k));
  }
  return out;
}

}  // namespace

Corner corner(const AlgebraPtr& a, const Vec& e) {
  if (a->multiply(e, e) != e) throw Error("corner: element is not idempotent");
  if (is_zero(e)) throw Error("corner: zero idempotent gives the zero ring");
  Subspace s = a->peirce(e, e);
  auto table = restricted_table(*a, s);
  Vec unit = s.coords(e);
  std::vector<Vec> ids;
  Vec sum(a->dim());
  for (const auto& f : a->idempotents())
    if (s.contains(f)) {
      ids.push_back(s.coords(f));
      sum = add(sum, f);
    }
  auto labels = subspace_labels(*a, s, "c");
  AlgebraPtr c;
  if (!ids.empty() && sum == e) {
    c = BasedAlgebra::make(s.dim(), std::move(table), std::move(unit), std::move(ids), std::move(labels));
  } else {
    c = with_idempotents(BasedAlgebra::make_bare(s.dim(), std::move(table), std::move(unit), std::move(labels)));
  }
  Mat emb = s.basis.transpose();
  return Corner{c, emb};
}

Subspace ideal_closure(const BasedAlgebra& a, const std::vector<Vec>& generators) {
  Subspace cur = span_vectors(generators, a.dim());
  std::vector<Vec> frontier;
  for (std::size_t k = 0; k < cur.dim(); ++k) frontier.push_back(cur.vector(k));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec b = a.basis_vector(i);
        for (Vec w : {a.multiply(b, v), a.multiply(v, b)}) {
          if (cur.contains(w)) continue;
          cur = subspace_sum(cur, span_vectors({w}, a.dim()));
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return cur;
}

Subspace ideal_closure(const BasedAlgebra& a, const Subspace& generators) {
  return ideal_closure(a, generators.basis.row_list());
}

Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& ideal) {
  if (ideal.ambient != a->dim()) throw Error("quotient_algebra: ideal lives in the wrong space");
  if (ideal.contains(a->unit())) throw Error("quotient is zero ring");
  if (ideal_closure(*a, ideal).dim() != ideal.dim()) throw Error("quotient_algebra: subspace is not a two-sided ideal");
  auto comp = complement_indices(ideal);
  const std::size_t q = comp.size();
  Mat proj(q, a->dim());
  for (std::size_t j = 0; j < a->dim(); ++j) {
    Vec r = ideal.reduce(a->basis_vector(j));
    for (std::size_t k = 0; k < q; ++k) proj(k, j) = r[comp[k]];
  }
  BasedAlgebra::Table t(q * q);
  for (std::size_t p = 0; p < q; ++p)
    for (std::size_t s = 0; s < q; ++s) {
      Vec img(a->dim());
      for (const auto& term : a->product(comp[p], comp[s])) img[term.index] += term.coeff;
      Vec c = proj.apply(img);
      for (std::size_t k = 0; k < q; ++k)
        if (sgn(c[k]) != 0) t[p * q + s].push_back({k, c[k]});
    }
  std::vector<Vec> ids;
  for (const auto& e : a->idempotents()) {
    Vec c = proj.apply(e);
    if (!is_zero(c)) ids.push_back(c);
  }
  std::vector<std::string> labels;
  for (auto c : comp) labels.push_back(a->label(c));
  Vec unit = proj.apply(a->unit());
  AlgebraPtr b = ids.empty() ? with_idempotents(BasedAlgebra::make_bare(q, std::move(t), unit, labels))
                             : BasedAlgebra::make(q, std::move(t), unit, std::move(ids), labels);
  return Quotient{b, AlgebraHom::make(a, b, proj)};
}

AlgebraPtr triangular_matrix_algebra(const AlgebraPtr& s, const AlgebraPtr& t, const Bimodule& m) {
  if (!same_algebra(m.left, s) || !same_algebra(m.right, t))
    throw Error("triangular_matrix_algebra: bimodule is not an S-T-bimodule");
  const std::size_t ds = s->dim(), dm = m.dim, dt = t->dim(), n = ds + dm + dt;
  BasedAlgebra::Table tab(n * n);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      for (const auto& x : s->product(i, j)) tab[i * n + j].push_back(x);
  for (std::size_t i = 0; i < dt; ++i)
    for (std::size_t j = 0; j < dt; ++j)
      for (const auto& x : t->product(i, j)) tab[(ds + dm + i) * n + ds + dm + j].push_back({ds + dm + x.index, x.coeff});
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t k = 0; k < dm; ++k)
      for (std::size_t l = 0; l < dm; ++l)
        if (sgn(m.left_action[i](l, k)) != 0) tab[i * n + ds + k].push_back({ds + l, m.left_action[i](l, k)});
  for (std::size_t j = 0; j < dt; ++j)
    for (std::size_t k = 0; k < dm; ++k)
      for (std::size_t l = 0; l < dm; ++l)
        if (sgn(m.right_action[j](l, k)) != 0)
          tab[(ds + k) * n + ds + dm + j].push_back({ds + l, m.right_action[j](l, k)});
  Vec unit(n);
  for (std::size_t i = 0; i < ds; ++i) unit[i] = s->unit()[i];
  for (std::size_t i = 0; i < dt; ++i) unit[ds + dm + i] = t->unit()[i];
  std::vector<Vec> ids;
  for (const auto& e : s->idempotents()) {
    Vec v(n);
    for (std::size_t i = 0; i < ds; ++i) v[i] = e[i];
    ids.push_back(v);
  }
  for (const auto& e : t->idempotents()) {
    Vec v(n);
    for (std::size_t i = 0; i < dt; ++i) v[ds + dm + i] = e[i];
    ids.push_back(v);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ds; ++i) labels.push_back("s." + s->label(i));
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("m" + std::to_string(i + 1));
  for (std::size_t i = 0; i < dt; ++i) labels.push_back("t." + t->label(i));
  return BasedAlgebra::make(n, std::move(tab), std::move(unit), std::move(ids), std::move(labels));
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return triangular_matrix_algebra(a, b, zero_bimodule(a, b));
}

TrivialExtension trivial_extension(const AlgebraPtr& r, const Bimodule& m) {
  if (!same_algebra(m.left, r) || !same_algebra(m.right, r))
    throw Error("trivial_extension: bimodule is not an R-R-bimodule");
  const std::size_t dr = r->dim(), dm = m.dim, n = dr + dm;
  BasedAlgebra::Table tab(n * n);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t j = 0; j < dr; ++j)
      for (const auto& x : r->product(i, j)) tab[i * n + j].push_back(x);
  for (std::size_t i = 0; i < dr; ++i)
    for (std::size_t k = 0; k < dm; ++k)
      for (std::size_t l = 0; l < dm; ++l) {
        if (sgn(m.left_action[i](l, k)) != 0) tab[i * n + dr + k].push_back({dr + l, m.left_action[i](l, k)});
        if (sgn(m.right_action[i](l, k)) != 0) tab[(dr + k) * n + i].push_back({dr + l, m.right_action[i](l, k)});
      }
  Vec unit(n);
  for (std::size_t i = 0; i < dr; ++i) unit[i] = r->unit()[i];
  std::vector<Vec> ids;
  for (const auto& e : r->idempotents()) {
    Vec v(n);
    for (std::size_t i = 0; i < dr; ++i) v[i] = e[i];
    ids.push_back(v);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dr; ++i) labels.push_back(r->label(i));
  for (std::size_t i = 0; i < dm; ++i) labels.push_back("m" + std::to_string(i + 1));
  AlgebraPtr a = BasedAlgebra::make(n, std::move(tab), std::move(unit), std::move(ids), std::move(labels));
  Mat inj(n, dr), proj(dr, n);
  for (std::size_t i = 0; i < dr; ++i) inj(i, i) = 1, proj(i, i) = 1;
  return TrivialExtension{a, AlgebraHom::make(r, a, inj), AlgebraHom::make(a, r, proj)};
}

AlgebraPtr path_algebra_monomial(std::size_t vertices, const std::vector<QuiverArrow>& arrows,
                                 const std::vector<std::vector<std::size_t>>& relations,
                                 std::size_t nilpotency_cap) {
  if (vertices == 0) throw Error("quiver needs at least one vertex");
  for (const auto& a : arrows)
    if (a.source >= vertices || a.target >= vertices) throw Error("arrow endpoint out of range");
  for (const auto& rel : relations) {
    if (rel.size() < 2) throw Error("relations must be paths of length at least 2");
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k] >= arrows.size()) throw Error("relation uses an unknown arrow");
      if (k + 1 < rel.size() && arrows[rel[k]].target != arrows[rel[k + 1]].source)
        throw Error("relation is not a path");
    }
  }
  struct Path {
    std::size_t start;
    std::vector<std::size_t> arrows;
  };
  auto end_vertex = [&](const Path& p) { return p.arrows.empty() ? p.start : arrows[p.arrows.back()].target; };
  auto ends_in_relation = [&](const std::vector<std::size_t>& w) {
    for (const auto& rel : relations)
      if (rel.size() <= w.size() && std::equal(rel.begin(), rel.end(), w.end() - rel.size())) return true;
    return false;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < vertices; ++v) paths.push_back({v, {}});
  std::vector<std::size_t> frontier;
  for (std::size_t v = 0; v < vertices; ++v) frontier.push_back(v);
  const std::size_t limit = std::max(nilpotency_cap, vertices);
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto idx : frontier)
      for (std::size_t b = 0; b < arrows.size(); ++b) {
        if (arrows[b].source != end_vertex(paths[idx])) continue;
        Path p = paths[idx];
        p.arrows.push_back(b);
        if (ends_in_relation(p.arrows)) continue;
        if (p.arrows.size() >= limit) {
          std::string cyc;
          for (auto x : p.arrows) cyc += (cyc.empty() ? "" : ",") + arrows[x].name;
          throw Error("infinite-dimensional path algebra: path [" + cyc + "] contains a cycle with no relation");
        }
        paths.push_back(p);
        next.push_back(paths.size() - 1);
      }
    frontier = std::move(next);
  }
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].start, paths[i].arrows}] = i;
  const std::size_t n = paths.size();
  BasedAlgebra::Table tab(n * n);
  // p * q = "q then p".
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Path& p = paths[i];
      const Path& q = paths[j];
      if (end_vertex(q) != p.start) continue;
      std::vector<std::size_t> w = q.arrows;
      w.insert(w.end(), p.arrows.begin(), p.arrows.end());
      auto it = index.find({q.start, w});
      if (it != index.end()) tab[i * n + j].push_back({it->second, Rat(1)});
    }
  Vec unit(n);
  std::vector<Vec> ids;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertices; ++v) {
    unit[v] = 1;
    ids.push_back(unit_vec(n, v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Path& p = paths[i];
    if (p.arrows.empty()) {
      labels.push_back("e" + std::to_string(p.start + 1));
      continue;
    }
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += (s.empty() ? "" : "*") + arrows[*it].name;
    labels.push_back(s);
  }
  return BasedAlgebra::make(n, std::move(tab), std::move(unit), std::move(ids), std::move(labels));
}

Subalgebra subalgebra(const AlgebraPtr& a, const std::vector<Vec>& generators) {
  std::vector<Vec> gens = generators;
  gens.push_back(a->unit());
  Subspace cur = span_vectors(gens, a->dim());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> basis = cur.basis.row_list();
    for (const auto& x : basis)
      for (const auto& y : basis) {
        Vec p = a->multiply(x, y);
        if (cur.contains(p)) continue;
        cur = subspace_sum(cur, span_vectors({p}, a->dim()));
        grew = true;
      }
  }
  auto table = restricted_table(*a, cur);
  Vec unit = cur.coords(a->unit());
  std::vector<Vec> ids;
  Vec sum(a->dim());
  for (const auto& e : a->idempotents())
    if (cur.contains(e)) {
      ids.push_back(cur.coords(e));
      sum = add(sum, e);
    }
  auto labels = subspace_labels(*a, cur, "s");
  AlgebraPtr s;
  bool usable = !ids.empty() && sum == a->unit();
  if (usable) {
    try {
      s = BasedAlgebra::make(cur.dim(), table, unit, ids, labels);
    } catch (const Error&) {
      usable = false;  // declared idempotents are not primitive in the subalgebra
    }
  }
  if (!usable) s = with_idempotents(BasedAlgebra::make_bare(cur.dim(), std::move(table), std::move(unit), labels));
  return Subalgebra{s, AlgebraHom::make(s, a, cur.basis.transpose())};
}

}  // namespace findim
