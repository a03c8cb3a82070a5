#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace findim {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "num/den", den omitted when it is 1.
std::string to_string(const Rat& q);
Rat parse_rat(const std::string& s);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
void axpy(Vec& y, const Rat& c, const Vec& x);  // y += c x

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  std::vector<Vec> row_list() const;

  Mat transpose() const;
  bool is_zero() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;

  Vec apply(const Vec& v) const;  // this * v

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& s, Mat a);
Mat operator-(Mat a);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
Mat kernel_basis(const Mat& m);  // rows v with m * v^T = 0
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& m);

// Subspaces of Q^n are stored as matrices whose rows are a basis in reduced
// row echelon form; coordinates of a member are read off at the pivots.
struct Subspace {
  std::size_t ambient = 0;
  Mat basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return pivots.size(); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Vec reduce(Vec v) const;         // remainder after clearing pivot columns
  Vec coords(const Vec& v) const;  // valid for members only
  Vec vector(std::size_t k) const { return basis.row(k); }
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace span_rows(const Mat& rows, std::size_t ambient);
Subspace span_vectors(const std::vector<Vec>& vs, std::size_t ambient);
Subspace column_space(const Mat& m);
Subspace null_space(const Mat& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
Subspace zero_subspace(std::size_t ambient);
Subspace full_subspace(std::size_t ambient);
// Standard basis indices completing s to the whole space (non-pivot columns).
std::vector<std::size_t> complement_indices(const Subspace& s);

std::string to_string(const Mat& m);

}  // namespace findim
