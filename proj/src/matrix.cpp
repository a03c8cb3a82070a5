#include "findim/matrix.hpp"

#include <sstream>
#include <utility>

namespace findim {

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw Error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  if (sgn(c) == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r[i] = c * v[i];
  return r;
}

void axpy(Vec& y, const Rat& c, const Vec& x) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += c * x[i];
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Mat::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != c_) throw Error("set_row: length mismatch");
  for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != r_) throw Error("set_col: length mismatch");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(r_);
  for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (sgn((*this)(i, j)) != 0) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(idx.size(), c_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != c_) throw Error("apply: length mismatch");
  Vec out(r_);
  for (std::size_t j = 0; j < c_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < r_; ++i) {
      const Rat& a = (*this)(i, j);
      if (sgn(a) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (sgn(o.a_[i]) != 0) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw Error("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (sgn(o.a_[i]) != 0) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : a_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(const Rat& s, Mat a) { return a *= s; }
Mat operator-(Mat a) { return a *= Rat(-1); }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: shape mismatch");
  Mat c(a.rows(), b.cols());
  // Most operands are sparse (path-algebra actions), so skip zero entries.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  return c;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error("hstack: row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.reduced;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  Rat f;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && sgn(a(p, c)) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(p, j), a(r, j));
    if (a(r, c) != 1) {
      Rat inv = 1 / a(r, c);
      for (std::size_t j = c; j < C; ++j)
        if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < C; ++j)
      if (sgn(a(r, j)) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
      a(i, c) = 0;
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Mat& m) {
  // Rank via a row-echelon pass on the shorter side.
  return rref(m.rows() <= m.cols() ? m : m.transpose()).pivots.size();
}

Mat kernel_basis(const Mat& m) {
  Rref r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < C; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat k(free.size(), C);
  for (std::size_t t = 0; t < free.size(); ++t) {
    std::size_t f = free[t];
    k(t, f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (sgn(r.reduced(i, f)) != 0) k(t, r.pivots[i]) = -r.reduced(i, f);
  }
  return k;
}

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error("solve_linear: row count mismatch");
  const std::size_t n = a.cols();
  Rref r = rref(hstack(a, b));
  Mat x(n, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    std::size_t p = r.pivots[i];
    if (p >= n) return std::nullopt;  // pivot in the right-hand side
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = r.reduced(i, n + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Rref r = rref(hstack(m, Mat::identity(n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.reduced.block(0, n, n, n);
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.vector(i))) return false;
  return true;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    Rat c = v[pivots[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient; ++j)
      if (sgn(basis(k, j)) != 0) v[j] -= c * basis(k, j);
  }
  return v;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = v[pivots[k]];
  return c;
}

Subspace span_rows(const Mat& rows, std::size_t ambient) {
  if (rows.rows() == 0) return zero_subspace(ambient);
  if (rows.cols() != ambient) throw Error("span_rows: ambient mismatch");
  Rref r = rref(rows);
  Subspace s;
  s.ambient = ambient;
  s.basis = r.reduced.block(0, 0, r.pivots.size(), ambient);
  s.pivots = r.pivots;
  return s;
}

Subspace span_vectors(const std::vector<Vec>& vs, std::size_t ambient) {
  return span_rows(Mat::from_rows(vs, ambient), ambient);
}

Subspace column_space(const Mat& m) { return span_rows(m.transpose(), m.rows()); }

Subspace null_space(const Mat& m) { return span_rows(kernel_basis(m), m.cols()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("subspace_sum: ambient mismatch");
  if (b.dim() == 0) return a;
  if (a.dim() == 0) return b;
  return span_rows(vstack(a.basis, b.basis), a.ambient);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error("subspace_intersection: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return zero_subspace(a.ambient);
  // x A = y B  <=>  (x, -y) in the left kernel of [A; B].
  Mat stacked = vstack(a.basis, b.basis);
  Mat k = kernel_basis(stacked.transpose());
  Mat coeffs = k.block(0, 0, k.rows(), a.dim());
  return span_rows(coeffs * a.basis, a.ambient);
}

Subspace zero_subspace(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(0, ambient);
  return s;
}

Subspace full_subspace(std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots.push_back(i);
  return s;
}

std::vector<std::size_t> complement_indices(const Subspace& s) {
  std::vector<bool> piv(s.ambient, false);
  for (auto p : s.pivots) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < s.ambient; ++j)
    if (!piv[j]) out.push_back(j);
  return out;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace findim
