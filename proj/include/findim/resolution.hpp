#pragma once

#include <cstdint>
#include <vector>

#include "findim/extnat.hpp"
#include "findim/module.hpp"

namespace findim {

constexpr std::size_t kDefaultCap = 24;

struct ProjectiveCover {
  ProjectiveSum projective;
  std::vector<Vec> generators;  // images of the summand generators, in m
  Mat map;                      // projective -> m, surjective
};

// Minimal projective cover of a left module over an algebra with an
// idempotent system.
ProjectiveCover projective_cover(const ProjectiveCatalog& cat, const Module& m);
ProjectiveCover projective_cover(const Module& m);

// Minimal projective resolution  ... -> P_1 -> P_0 -> M -> 0  of a left
// module (right modules are resolved as left modules over the opposite).
struct Resolution {
  Module module;
  std::vector<ProjectiveSum> terms;      // P_0 .. P_k
  std::vector<Mat> differentials;        // d_j : P_j -> P_{j-1}, stored at j-1
  std::vector<Module> syzygies;          // Ω^0 = M, Ω^1, ..., Ω^{k+1}
  std::vector<Mat> syzygy_inclusions;    // Ω^{j+1} -> P_j
  Mat augmentation;                      // P_0 -> M
  ExtNat pd;
  bool periodic = false;                 // some Ω^q ≅ Ω^p with p < q was certified
  std::size_t period_start = 0, period_end = 0;

  std::size_t length() const { return terms.size(); }
  // Component of d_j(generator l of P_j) in summand l' of P_{j-1}, an element
  // of e_{v_l} A e_{v_l'}.
  Vec component(std::size_t j, std::size_t l, std::size_t lp) const;
};

// At most `steps` projective covers are taken.  pd is exact when a syzygy
// vanishes, inf when a syzygy repeats up to isomorphism, else unknown(>=steps).
Resolution minimal_resolution(const Module& m, std::size_t steps = kDefaultCap, bool detect_periodic = true);

ExtNat projective_dimension(const Module& m, std::size_t cap = kDefaultCap);
ExtNat injective_dimension(const Module& m, std::size_t cap = kDefaultCap);

// dim Tor_i^A(x, y) for i = 0..max_i; x a right and y a left module.
std::vector<ExtNat> tor_dims(const Module& x, const Module& y, std::size_t max_i, std::size_t cap = kDefaultCap);
// dim Ext^i_A(m, n) for i = 0..max_i; both on the same side.
std::vector<ExtNat> ext_dims(const Module& m, const Module& n, std::size_t max_i, std::size_t cap = kDefaultCap);

}  // namespace findim
