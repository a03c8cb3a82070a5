#include <algorithm>
#include <numeric>
#include <random>

#include "findim/algebra.hpp"

namespace findim {

namespace {

// Monic minimal polynomial of x inside the corner with unit e (coefficients
// low degree first).
std::vector<Rat> minimal_polynomial(const BasedAlgebra& a, const Vec& e, const Vec& x) {
  std::vector<Vec> powers{e};
  while (true) {
    Vec next = a.multiply(powers.back(), x);
    Mat m = Mat::from_cols(powers, a.dim());
    auto sol = solve_linear(m, Mat::from_cols({next}, a.dim()));
    if (sol) {
      std::vector<Rat> poly(powers.size() + 1);
      for (std::size_t k = 0; k < powers.size(); ++k) poly[k] = -(*sol)(k, 0);
      poly.back() = 1;
      return poly;
    }
    powers.push_back(next);
  }
}

std::vector<mpz_class> divisors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Rat> rational_roots(const std::vector<Rat>& poly) {
  mpz_class l = 1;
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : poly) {
    Rat v = c * l;
    z.push_back(v.get_num());
  }
  std::vector<Rat> roots;
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  if (shift + 1 >= z.size()) return roots;
  auto ps = divisors(z[shift]);
  auto qs = divisors(z.back());
  auto eval = [&](const Rat& t) {
    Rat v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = v * t + poly[k];
    return v;
  };
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int s : {1, -1}) {
        Rat t(mpz_class(p * s), q);
        t.canonicalize();
        if (std::find(roots.begin(), roots.end(), t) != roots.end()) continue;
        if (sgn(eval(t)) == 0) roots.push_back(t);
      }
  return roots;
}

struct Split {
  Vec first, second;
};

// Fitting decomposition of the corner C = eAe along y -> y (x - λe).
std::optional<Split> fitting_split(const BasedAlgebra& a, const Subspace& c, const Vec& e, const Vec& x,
                                   const Rat& lambda) {
  const std::size_t n = c.dim();
  Vec shifted = sub(x, scale(lambda, e));
  Mat psi(n, n);
  for (std::size_t k = 0; k < n; ++k) psi.set_col(k, c.coords(a.multiply(c.vector(k), shifted)));
  Mat p = psi;
  for (std::size_t k = 1; k < n; ++k) p = p * psi;
  Subspace ker = null_space(p);
  Subspace im = column_space(p);
  if (ker.dim() == 0 || im.dim() == 0) return std::nullopt;
  Mat both = hstack(ker.basis.transpose(), im.basis.transpose());
  auto sol = solve_linear(both, Mat::from_cols({c.coords(e)}, n));
  if (!sol) throw Error("internal: Fitting decomposition is not a direct sum");
  Vec k1(n);
  for (std::size_t i = 0; i < ker.dim(); ++i) axpy(k1, (*sol)(i, 0), ker.vector(i));
  Vec first(a.dim());
  for (std::size_t i = 0; i < n; ++i) axpy(first, k1[i], c.vector(i));
  return Split{first, sub(e, first)};
}

std::size_t residue_dim(const BasedAlgebra& a, const Subspace& corner_space) {
  return corner_space.dim() - subspace_intersection(corner_space, a.radical()).dim();
}

}  // namespace

std::vector<Vec> decompose_idempotents(const BasedAlgebra& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> todo{a.unit()}, done;
  const int budget = 96;
  while (!todo.empty()) {
    Vec e = todo.back();
    todo.pop_back();
    Subspace c = a.peirce(e, e);
    std::size_t r = residue_dim(a, c);
    if (r == 1) {
      done.push_back(e);
      continue;
    }
    std::optional<Split> split;
    for (int attempt = 0; attempt < budget && !split; ++attempt) {
      Vec x(a.dim());
      if (attempt < static_cast<int>(c.dim())) {
        x = c.vector(attempt);
      } else {
        std::uniform_int_distribution<int> coeff(-2, 2);
        std::uniform_int_distribution<int> keep(0, 2);
        for (std::size_t k = 0; k < c.dim(); ++k)
          if (keep(rng) == 0) axpy(x, Rat(coeff(rng)), c.vector(k));
      }
      for (const auto& lambda : rational_roots(minimal_polynomial(a, e, x))) {
        split = fitting_split(a, c, e, x, lambda);
        if (split) break;
      }
    }
    if (!split) throw Error("non-split; extend scalars out of scope");
    todo.push_back(split->second);
    todo.push_back(split->first);
  }
  // Deterministic order: by position of the first nonzero coefficient.
  std::stable_sort(done.begin(), done.end(), [](const Vec& x, const Vec& y) {
    auto first = [](const Vec& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return i;
      return v.size();
    };
    return first(x) < first(y);
  });
  return done;
}

AlgebraPtr with_idempotents(const AlgebraPtr& a, std::uint64_t seed) {
  return BasedAlgebra::make(a->dim(), a->table(), a->unit(), decompose_idempotents(*a, seed), a->labels());
}

BasicReduction basic_algebra(const AlgebraPtr& a) {
  const auto& ids = a->idempotents();
  const std::size_t r = ids.size();
  if (r == 0) throw Error("basic_algebra needs an idempotent system");
  std::vector<std::size_t> cls(r);
  std::iota(cls.begin(), cls.end(), 0);
  auto iso = [&](std::size_t i, std::size_t j) {
    Subspace x = a->peirce(ids[i], ids[j]);
    Subspace y = a->peirce(ids[j], ids[i]);
    for (std::size_t p = 0; p < x.dim(); ++p)
      for (std::size_t q = 0; q < y.dim(); ++q)
        if (!a->radical().contains(a->multiply(x.vector(p), y.vector(q)))) return true;
    return false;
  };
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (cls[i] == i && iso(i, j)) {
        cls[j] = i;
        break;
      }
  BasicReduction out;
  out.idempotent = Vec(a->dim());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < r; ++i)
    if (cls[i] == i) {
      reps.push_back(i);
      out.idempotent = add(out.idempotent, ids[i]);
    }
  for (auto rep : reps) out.multiplicities.push_back(std::count(cls.begin(), cls.end(), rep));
  if (reps.size() == r) {
    out.algebra = a;
    return out;
  }
  out.algebra = corner(a, out.idempotent).algebra;
  return out;
}

}  // namespace findim
