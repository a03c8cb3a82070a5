#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "findim/resolution.hpp"

namespace findim {

// Cohomologically indexed: d^n : X^n -> X^{n+1}.  terms[k] sits in degree lo+k.
struct BoundedComplex {
  AlgebraPtr algebra;
  Side side = Side::Left;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<Mat> diffs;  // diffs[k] : terms[k] -> terms[k+1]

  static BoundedComplex make(AlgebraPtr a, Side side, int lo, std::vector<Module> terms, std::vector<Mat> diffs);
  static BoundedComplex zero(AlgebraPtr a, Side side);
  static BoundedComplex concentrated(const Module& m, int degree);

  bool is_zero_complex() const;
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  Module term(int n) const;
  Mat diff(int n) const;  // d^n, zero outside the stored range
};

struct ChainMap {
  BoundedComplex source;
  BoundedComplex target;
  int lo = 0;
  std::vector<Mat> maps;  // maps[k] : source.term(lo+k) -> target.term(lo+k)

  static ChainMap make(BoundedComplex source, BoundedComplex target, int lo, std::vector<Mat> maps);  // checked
  static ChainMap identity(const BoundedComplex& c);
  static ChainMap zero(const BoundedComplex& source, const BoundedComplex& target);
  Mat component(int n) const;
};

Module cohomology(const BoundedComplex& c, int n);
std::size_t cohomology_dim(const BoundedComplex& c, int n);

struct SupInf {
  bool acyclic = true;  // then sup = -inf and inf = +inf by convention
  int sup = 0;
  int inf = 0;
  std::string str() const;
};
SupInf sup_inf(const BoundedComplex& c);

long euler_characteristic(const BoundedComplex& c);

// X[k]^n = X^{n+k}, d_{X[k]} = (-1)^k d_X.
BoundedComplex shift(const BoundedComplex& c, int k);
// Cone(f)^n = Y^n ⊕ X^{n+1} with differential [[d_Y, f], [0, -d_X]].
BoundedComplex cone(const ChainMap& f);
BoundedComplex direct_sum(const BoundedComplex& x, const BoundedComplex& y);
// D(X)^n = D(X^{-n}).
BoundedComplex dual_complex(const BoundedComplex& c);

enum class Truncate { Below, Above };  // Below drops degrees < at, Above drops degrees > at
BoundedComplex brutal_truncate(const BoundedComplex& c, int at, Truncate side);

// h^n : X^n -> Y^{n-1} with f = d h + h d, indexed from source.lo.
std::optional<std::vector<Mat>> is_null_homotopic(const ChainMap& f);
bool is_contractible(const BoundedComplex& c);

std::vector<ChainMap> chain_map_space(const BoundedComplex& x, const BoundedComplex& y);

bool all_terms_projective(const BoundedComplex& c);
bool all_terms_injective(const BoundedComplex& c);

// Minimal projective resolution of m placed in degrees [-pd, 0]; absent when
// pd(m) is not a known finite number within cap.
std::optional<BoundedComplex> projective_normalize(const Module& m, std::size_t cap = kDefaultCap);

struct Normalized {
  std::optional<BoundedComplex> complex;
  std::string diagnostic;
};
// Bounded complex of projectives quasi-isomorphic to c (minimal: every
// differential lands in the radical).
Normalized projective_normalize(const BoundedComplex& c, std::size_t cap = kDefaultCap);
// Split off contractible summands of a complex of projectives.
BoundedComplex minimize_projective_complex(const BoundedComplex& c);

ExtNat homological_width(const BoundedComplex& c, std::size_t cap = kDefaultCap);
ExtNat homological_cowidth(const BoundedComplex& c, std::size_t cap = kDefaultCap);

// Complexes built from random pieces, for tests and the harness.
BoundedComplex random_projective_complex(const AlgebraPtr& a, std::mt19937_64& rng, int lo, std::size_t cap);
BoundedComplex random_contractible_complex(const AlgebraPtr& a, std::mt19937_64& rng, int lo, int hi);
// Termwise random change of basis; an isomorphic complex.
BoundedComplex random_conjugate(const BoundedComplex& c, std::mt19937_64& rng);

}  // namespace findim
