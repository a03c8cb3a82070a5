#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findim/matrix.hpp"

namespace findim {

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

// An arrow is an element a = e_target · a · e_source of rad A spanning a
// complement of rad^2 inside e_target (rad A) e_source.  For a left module,
// a maps e_source M into e_target M.
struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Vec element;
};

// Finite-dimensional unital associative algebra over Q given by structure
// constants b_i b_j = sum_k c[i][j][k] b_k, stored sparsely.
class BasedAlgebra : public std::enable_shared_from_this<BasedAlgebra> {
 public:
  struct Term {
    std::size_t index;
    Rat coeff;
  };
  using Table = std::vector<std::vector<Term>>;  // indexed by i * dim + j

  // Validates associativity, the unit and (if given) the idempotent system.
  static AlgebraPtr make(std::size_t dim, Table table, Vec unit, std::vector<Vec> idempotents,
                         std::vector<std::string> labels = {});
  // Same without an idempotent system; only decompose_idempotents and
  // structural queries are meaningful on such an algebra.
  static AlgebraPtr make_bare(std::size_t dim, Table table, Vec unit, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Table& table() const { return table_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Rat coeff(std::size_t i, std::size_t j, std::size_t k) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t i) const { return unit_vec(dim_, i); }

  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& idempotents() const { return idempotents_; }
  bool has_idempotents() const { return !idempotents_.empty(); }
  std::size_t vertex_count() const { return idempotents_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  // Jacobson radical as a subspace (kernel of the trace form).
  const Subspace& radical() const { return rad_; }
  const Subspace& radical_square() const { return rad2_; }
  bool is_split_basic() const { return split_basic_; }
  bool is_local() const { return idempotents_.size() == 1 && split_basic_; }
  // Every e_i (A/rad A) e_i is one-dimensional: the e_i are primitive and
  // A e_i are the indecomposable projectives (basic or not).
  bool has_split_idempotents() const { return local_residues_; }
  // Only meaningful for split basic algebras.
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Generators for module computations: idempotents and arrows when split
  // basic, otherwise every basis element.
  std::vector<Vec> generators() const;

  // Matrices of y -> x y and y -> y x on column coefficient vectors.
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  // e_i A e_j.
  Subspace peirce(const Vec& e, const Vec& f) const;

  AlgebraPtr opposite() const;
  bool same_table(const BasedAlgebra& o) const;

 private:
  BasedAlgebra() = default;
  void validate(bool check_idempotents);
  void compute_structure();

  std::size_t dim_ = 0;
  Table table_;
  Vec unit_;
  std::vector<Vec> idempotents_;
  std::vector<std::string> labels_;
  Subspace rad_, rad2_;
  bool split_basic_ = false;
  bool local_residues_ = false;
  std::vector<Arrow> arrows_;

  mutable std::mutex op_mutex_;
  mutable std::weak_ptr<const BasedAlgebra> opposite_;
  mutable std::shared_ptr<const BasedAlgebra> opposite_strong_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Linear map between algebras, stored as a (target dim) x (source dim)
// matrix acting on coefficient columns.
struct AlgebraHom {
  AlgebraPtr source;
  AlgebraPtr target;
  Mat matrix;

  static AlgebraHom make(AlgebraPtr source, AlgebraPtr target, Mat matrix);  // checked
  static AlgebraHom identity(const AlgebraPtr& a);
  Vec apply(const Vec& x) const { return matrix.apply(x); }
  bool is_surjective() const { return rank(matrix) == target->dim(); }
  bool is_injective() const { return rank(matrix) == source->dim(); }
};

// g ∘ f.
AlgebraHom compose(const AlgebraHom& f, const AlgebraHom& g);

// S-T-bimodule: left_action[s] and right_action[t] act on column vectors.
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  std::vector<Mat> left_action;
  std::vector<Mat> right_action;

  static Bimodule make(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_action,
                       std::vector<Mat> right_action);  // checked
  Mat left_of(const Vec& s) const;
  Mat right_of(const Vec& t) const;
};

Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule dual_bimodule(const AlgebraPtr& a);
Bimodule zero_bimodule(const AlgebraPtr& s, const AlgebraPtr& t);
// One-dimensional bimodule on which S acts through its i-th simple and T
// through its j-th simple.
Bimodule simple_bimodule(const AlgebraPtr& s, std::size_t i, const AlgebraPtr& t, std::size_t j);
// Restrict the actions along f: S' -> S (left) and g: T' -> T (right).
Bimodule restrict_bimodule(const Bimodule& m, const AlgebraHom& f, const AlgebraHom& g);

// --- structural operations ---

Subspace radical_algebra(const BasedAlgebra& a);
bool is_split_basic(const BasedAlgebra& a);
AlgebraPtr opposite(const AlgebraPtr& a);

struct Corner {
  AlgebraPtr algebra;
  Mat embedding;  // a.dim x corner.dim, columns are the corner basis in a
};
Corner corner(const AlgebraPtr& a, const Vec& e);

Subspace ideal_closure(const BasedAlgebra& a, const std::vector<Vec>& generators);
Subspace ideal_closure(const BasedAlgebra& a, const Subspace& generators);

struct Quotient {
  AlgebraPtr algebra;
  AlgebraHom projection;
};
Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& ideal);

AlgebraPtr triangular_matrix_algebra(const AlgebraPtr& s, const AlgebraPtr& t, const Bimodule& m);
AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct TrivialExtension {
  AlgebraPtr algebra;
  AlgebraHom injection;   // R -> R⋉M
  AlgebraHom projection;  // R⋉M -> R
};
TrivialExtension trivial_extension(const AlgebraPtr& r, const Bimodule& m);

struct QuiverArrow {
  std::size_t source;
  std::size_t target;
  std::string name;
};
// Relations are arrow index sequences in traversal order (first arrow first).
AlgebraPtr path_algebra_monomial(std::size_t vertices, const std::vector<QuiverArrow>& arrows,
                                 const std::vector<std::vector<std::size_t>>& relations,
                                 std::size_t nilpotency_cap);

struct Subalgebra {
  AlgebraPtr algebra;
  AlgebraHom inclusion;
};
// Unital subalgebra generated by the given elements.
Subalgebra subalgebra(const AlgebraPtr& a, const std::vector<Vec>& generators);

bool is_ring_epimorphism(const AlgebraHom& f);

// Complete set of orthogonal primitive idempotents (Fitting splitting).
std::vector<Vec> decompose_idempotents(const BasedAlgebra& a, std::uint64_t seed = 0);
// Copy of a with the idempotents computed by decompose_idempotents.
AlgebraPtr with_idempotents(const AlgebraPtr& a, std::uint64_t seed = 0);

struct BasicReduction {
  AlgebraPtr algebra;      // basic corner εAε, Morita equivalent to a
  Vec idempotent;          // ε
  std::vector<std::size_t> multiplicities;  // per retained idempotent
};
BasicReduction basic_algebra(const AlgebraPtr& a);

// Bounded search for an algebra isomorphism a -> b; absent means "not found".
std::optional<AlgebraHom> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b, std::uint64_t seed = 0);

// Preset catalog.
AlgebraPtr preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace findim
