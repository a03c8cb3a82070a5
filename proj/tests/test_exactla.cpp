#include <gtest/gtest.h>

#include <random>

#include "findim/extnat.hpp"
#include "findim/matrix.hpp"

using namespace findim;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int range = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rat(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

// Low-rank matrices exercise the interesting pivots.
Mat random_low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_mat(rng, r, k, 3) * random_mat(rng, k, c, 3);
}

// Fraction-free Bareiss elimination on the integer matrix obtained by
// clearing denominators row by row.
std::size_t bareiss_rank(const Mat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < c; ++j) l = lcm(l, mpz_class(m(i, j).get_den()));
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t p = rank;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Mat from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec> vs;
  std::size_t c = 0;
  for (const auto& r : rows) {
    Vec v;
    for (int x : r) v.push_back(Rat(x));
    c = v.size();
    vs.push_back(v);
  }
  return Mat::from_rows(vs, c);
}

}  // namespace

TEST(Rat, SerializesNumOverDen) {
  EXPECT_EQ(to_string(Rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rat(7)), "7");
  EXPECT_EQ(to_string(parse_rat("4/2")), "2");
  EXPECT_EQ(parse_rat("-3/2"), Rat(-3, 2));
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("6/4").get_den(), 2);
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
}

TEST(Rref, Identity) {
  auto r = rref(Mat::identity(2));
  EXPECT_EQ(r.reduced, Mat::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOne) {
  auto r = rref(from_ints({{2, 4}, {1, 2}}));
  EXPECT_EQ(r.reduced, from_ints({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RankMatchesBareiss) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    Mat m = t % 2 ? random_mat(rng, 5, 7) : random_low_rank(rng, 5, 7, 1 + t % 4);
    auto r = rref(m);
    EXPECT_EQ(r.pivots.size(), bareiss_rank(m));
    EXPECT_EQ(rank(m), bareiss_rank(m));
    for (std::size_t k = 1; k < r.pivots.size(); ++k) EXPECT_LT(r.pivots[k - 1], r.pivots[k]);
  }
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_low_rank(rng, 4, 6, 1 + t % 3);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.pivots, twice.pivots);
  }
}

TEST(Rref, RankOfTranspose) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_low_rank(rng, 6, 4, 1 + t % 4);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Kernel, IdentityHasNone) { EXPECT_EQ(kernel_basis(Mat::identity(3)).rows(), 0u); }

TEST(Kernel, ZeroMatrix) {
  Mat k = kernel_basis(Mat(3, 3));
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(rank(k), 3u);
}

TEST(Kernel, RowSum) {
  Mat k = kernel_basis(from_ints({{1, 1}}));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_TRUE(span_rows(k, 2).contains(Vec{Rat(1), Rat(-1)}));
}

TEST(Kernel, AnnihilatedAndComplete) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_low_rank(rng, 4, 7, 1 + t % 4);
    Mat k = kernel_basis(m);
    EXPECT_EQ(k.rows() + rank(m), m.cols());
    EXPECT_EQ(rank(k), k.rows());
    if (k.rows()) EXPECT_TRUE((m * k.transpose()).is_zero());
  }
}

TEST(Solve, IdentityReturnsRhs) {
  std::mt19937_64 rng(15);
  Mat b = random_mat(rng, 3, 2);
  auto x = solve_linear(Mat::identity(3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Solve, Inconsistent) { EXPECT_FALSE(solve_linear(from_ints({{1}, {1}}), from_ints({{0}, {1}}))); }

TEST(Solve, DimensionMismatchThrows) { EXPECT_THROW(solve_linear(Mat(2, 2), Mat(3, 1)), Error); }

TEST(Solve, ConsistentResidualZero) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 30; ++t) {
    Mat a = random_low_rank(rng, 5, 4, 1 + t % 4);
    Mat x0 = random_mat(rng, 4, 2);
    Mat b = a * x0;
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_TRUE((a * *x - b).is_zero());
  }
}

TEST(Subspace, SumAndIntersection) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Subspace u = span_rows(random_low_rank(rng, 3, 6, 2), 6);
    Subspace w = span_rows(random_low_rank(rng, 3, 6, 3), 6);
    Subspace s = subspace_sum(u, w), i = subspace_intersection(u, w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(w.contains(i));
  }
}

TEST(ExtNat, Arithmetic) {
  auto f = ExtNat::finite;
  EXPECT_EQ(f(2) + f(3), f(5));
  EXPECT_EQ(f(2) + ExtNat::infinite(), ExtNat::infinite());
  EXPECT_EQ(ExtNat::unknown(4) + f(1), ExtNat::unknown(5));
  EXPECT_EQ(ExtNat::unknown(4) + ExtNat::unknown(2), ExtNat::unknown(6));
  EXPECT_EQ(max(f(2), f(5)), f(5));
  EXPECT_EQ(max(f(2), ExtNat::infinite()), ExtNat::infinite());
  EXPECT_EQ(min(f(2), ExtNat::infinite()), f(2));
  const std::vector<ExtNat> vals = {f(0), f(3), ExtNat::infinite(), ExtNat::unknown(2)};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      EXPECT_EQ(a + b, b + a);
      for (const auto& c : vals) EXPECT_EQ((a + b) + c, a + (b + c));
    }
}

TEST(ExtNat, Comparisons) {
  auto f = ExtNat::finite;
  EXPECT_EQ(le(f(1), f(2)), Tri::True);
  EXPECT_EQ(le(f(3), f(2)), Tri::False);
  EXPECT_EQ(le(f(3), ExtNat::infinite()), Tri::True);
  EXPECT_EQ(le(ExtNat::infinite(), f(3)), Tri::False);
  EXPECT_EQ(le(f(5), ExtNat::unknown(3)), Tri::Undetermined);
  EXPECT_EQ(le(ExtNat::unknown(3), f(5)), Tri::Undetermined);
  EXPECT_EQ(le(ExtNat::unknown(3), f(2)), Tri::False);
}

TEST(ExtNat, ParseRoundTrip) {
  for (const auto& v : {ExtNat::finite(0), ExtNat::finite(7), ExtNat::infinite(), ExtNat::unknown(24)})
    EXPECT_EQ(ExtNat::parse(v.str()), v);
}

TEST(Bracket, SoundComparison) {
  EXPECT_EQ(le(Bracket::exact(1), Bracket::exact(1)), Tri::True);
  EXPECT_EQ(le(Bracket::between(0, 2), Bracket::exact(3)), Tri::True);
  EXPECT_EQ(le(Bracket::between(0, 2), Bracket::exact(1)), Tri::Undetermined);
  EXPECT_EQ(le(Bracket::exact(3), Bracket::between(0, 2)), Tri::False);
  EXPECT_EQ(le(Bracket::exact(3), Bracket::at_least(1)), Tri::Undetermined);
  EXPECT_EQ(le(Bracket::exact(3), Bracket::infinite()), Tri::True);
  Bracket sum = Bracket::exact(1) + Bracket::between(0, 2);
  EXPECT_EQ(sum.lo, 1);
  EXPECT_EQ(sum.hi, 3);
  EXPECT_FALSE(sum.hi_inf);
}
