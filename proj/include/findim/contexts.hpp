#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findim/complex.hpp"
#include "findim/homdim.hpp"

namespace findim {

// 0 -> R -(λ,μ)-> S ⊕ T -(·m, -m·)-> M -> 0
struct ExactContext {
  AlgebraHom lambda;  // R -> S
  AlgebraHom mu;      // R -> T
  Bimodule m;         // S-T-bimodule
  Vec element;
};

struct ExactContextCheck {
  std::size_t rank_in = 0;   // rank of r -> (λr, μr)
  std::size_t rank_out = 0;  // rank of (s, t) -> s m - m t
  bool injective = false;
  bool complex = false;  // composite vanishes
  bool middle_exact = false;
  bool surjective = false;
  bool exact() const { return injective && complex && middle_exact && surjective; }
};
ExactContextCheck check_exact_context(const ExactContext& ctx);
// S ⊗_R T -> M, s ⊗ t -> s m t, is an isomorphism.
bool check_exact_pair(const ExactContext& ctx);

// T ⊠_R S on the space T ⊗_R S with (t⊗s)(t'⊗s') = t t'' ⊗ s' + t ⊗ s'' s'
// whenever s m t' = s'' m + m t''.  Throws unless ctx is exact.
AlgebraPtr nc_tensor_product(const ExactContext& ctx);

// Context of a ring extension S ⊆ R: (S -> R, S -> R', Hom_S(R, R/S), π)
// with R' = End_S(R/S) acting on the right.
struct RingExtensionContext {
  ExactContext ctx;
  AlgebraPtr r_prime;
  Module quotient_right;  // (R/S)_S
  Module hom_right;       // Hom_S(R, R/S)_S
  Module r_left;          // _S R
};
RingExtensionContext ring_extension_context(const AlgebraHom& inclusion);

// Context of two ideals: S = R/I1, T = R/I2, M = R/(I1+I2), m = 1.
ExactContext milnor_context(const AlgebraPtr& r, const Subspace& i1, const Subspace& i2);

// Ideal generated by the listed idempotents.
Subspace idempotent_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& vertices);

// Section of a surjective linear map (right inverse).
Mat section(const Mat& p);

Module right_regular_restricted(const AlgebraHom& f);  // S as a right R-module
Module left_regular_restricted(const AlgebraHom& f);   // S as a left R-module

enum class Homological { Certified, UpToCap, Not };
std::string to_string(Homological h);
struct HomologicalVerdict {
  Homological status = Homological::Not;
  std::vector<ExtNat> tor;  // dim Tor_i^R(S, S), i = 0..
  ExtNat pd_left;           // pd of _R S
  std::size_t first_nonzero = 0;
  bool is_homological() const { return status == Homological::Certified; }
};
// Throws when f is not a ring epimorphism.
HomologicalVerdict is_homological_epimorphism(const AlgebraHom& f, std::size_t cap = kDefaultCap);

struct CoproductQuotient {
  AlgebraPtr algebra;  // R/(I1+I2), built as (R/I1)/(image of I2)
  AlgebraHom from_r;
};
// Throws unless I1 ∩ I2 = 0.
CoproductQuotient nc_tensor_quotient_case(const AlgebraPtr& r, const Subspace& i1, const Subspace& i2);

struct CoproductTrivialExtension {
  AlgebraPtr algebra;          // S ⋉ M
  AlgebraPtr source;           // R ⋉ M (M restricted along λ)
  AlgebraHom rho;              // S -> S ⋉ M
  AlgebraHom lambda_tilde;     // R ⋉ M -> S ⋉ M
  AlgebraHom mu;               // R -> R ⋉ M
  bool commutes = false;       // ρ λ = λ̃ μ
};
// Throws when λ is not a ring epimorphism.
CoproductTrivialExtension nc_tensor_trivial_extension_case(const AlgebraHom& lambda, const Bimodule& m);

struct StratifyingData {
  AlgebraPtr algebra;
  Vec idempotent;
  std::optional<Corner> corner;  // absent for e = 0
  std::optional<Quotient> quotient;  // R -> R/ReR, absent when ReR = R
  Subspace ideal;                // ReR
  Module ideal_module;           // _R ReR
  Module quotient_module;        // _R R/ReR
  Module re;                     // _R Re
  ExtNat pd_ideal;
  ExtNat pd_quotient;
  ExtNat pd_re;
  ExtNat pd_re_right;            // Re as a right eRe-module
  bool ring_epi = false;
  std::optional<HomologicalVerdict> homological;
  ExtNat w_i;      // w(i_* R/ReR) = pd _R R/ReR
  ExtNat w_j;      // w(j_! eRe) = w(Re)
  ExtNat w_istar;  // w(i^* R) over R/ReR
  ExtNat cw_j;     // cw(j^! D(R)) = id of e D(R) over eRe
};
StratifyingData stratifying_recollement_data(const AlgebraPtr& r, const Vec& e, std::size_t cap = kDefaultCap);

// inf{n : H^n(F ⊗^L X) != 0} over a sample, for F a bimodule; the
// cohomology sits in degrees -i with H^{-i} = Tor_i(F, X).
struct FunctorEstimate {
  bool empty = true;        // no nonzero value seen: +inf sentinel
  long inf = 0;
  bool truncated = false;   // some Tor stayed unknown within the depth
  std::string str() const;  // labelled as an estimate
};
FunctorEstimate functor_inf_estimate(const Bimodule& f, const std::vector<Module>& sample, std::size_t max_i,
                                     std::size_t cap = kDefaultCap);

// End(x) modulo the maps factoring through y.
AlgebraPtr relative_end_quotient(const Module& x, const Module& y, std::uint64_t seed = 0);

// Sub-bimodule/ideal helpers used by the harness.
Module ideal_as_left_module(const AlgebraPtr& a, const Subspace& ideal);
Module ideal_as_right_module(const AlgebraPtr& a, const Subspace& ideal);
Module quotient_as_left_module(const AlgebraPtr& a, const Subspace& ideal);
Module quotient_as_right_module(const AlgebraPtr& a, const Subspace& ideal);

struct LemmaAddConditions {
  Tri cond3 = Tri::Undetermined;  // I ⊗_R S -> J iso and Tor_j(I, S) = 0, j >= 1
  Tri cond4 = Tri::Undetermined;  // Tor_j(R/I, S) = 0, j >= 1
  bool certified = false;         // both decided from terminating resolutions
};
LemmaAddConditions lemma_add_conditions(const AlgebraHom& lambda, const Subspace& ideal, std::size_t cap = kDefaultCap);

}  // namespace findim
