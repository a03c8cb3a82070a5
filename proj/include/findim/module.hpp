#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/extnat.hpp"

namespace findim {

enum class Side { Left, Right };

std::string to_string(Side s);

// Finite-dimensional module: one action matrix per algebra basis element,
// acting on column vectors.  Left: A_{b_i} A_{b_j} = A_{b_i b_j}.
// Right (v -> v b): A_{b_j} A_{b_i} = A_{b_i b_j}.  Cheap to copy.
class Module {
 public:
  Module() = default;
  static Module make(AlgebraPtr a, Side side, std::size_t dim, std::vector<Mat> action);  // checked
  static Module make_unchecked(AlgebraPtr a, Side side, std::size_t dim, std::vector<Mat> action);
  static Module zero(AlgebraPtr a, Side side);

  const AlgebraPtr& algebra() const { return d_->algebra; }
  Side side() const { return d_->side; }
  std::size_t dim() const { return d_->dim; }
  bool is_zero() const { return d_->dim == 0; }
  const std::vector<Mat>& action() const { return d_->action; }
  const Mat& action(std::size_t i) const { return d_->action[i]; }
  Mat act(const Vec& x) const;

  // The same matrices viewed as a left module (over A^op for right modules).
  Module as_left() const;
  Module as_right() const;

 private:
  struct Data {
    AlgebraPtr algebra;
    Side side;
    std::size_t dim;
    std::vector<Mat> action;
  };
  std::shared_ptr<const Data> d_;
};

bool compatible(const Module& m, const Module& n);

struct ModuleHom {
  Module source;
  Module target;
  Mat matrix;  // target.dim x source.dim

  static ModuleHom make(Module source, Module target, Mat matrix);  // checked
  static ModuleHom identity(const Module& m);
};

bool is_module_hom(const Module& m, const Module& n, const Mat& f);

Module regular_module(const AlgebraPtr& a, Side side = Side::Left);
Module simple_module(const AlgebraPtr& a, std::size_t vertex, Side side = Side::Left);
// D(e_i A), the injective envelope of the i-th simple (left module).
Module injective_module(const AlgebraPtr& a, std::size_t vertex);

struct ProjectiveIndecomposable {
  std::size_t vertex;
  Subspace basis;  // A e_v inside A, rref rows
  Module module;   // left module
};
std::vector<ProjectiveIndecomposable> projective_indecomposables(const AlgebraPtr& a);

// Direct sum of left projectives A e_{v_1} ⊕ ... with summand bookkeeping.
struct ProjectiveSum {
  AlgebraPtr algebra;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> offsets;
  std::vector<Subspace> bases;  // A e_v inside A, per summand
  Module module;

  std::size_t summands() const { return vertices.size(); }
  // Generator e_v of summand l, in module coordinates.
  Vec generator(std::size_t l) const;
  // Module coordinates of the element x ∈ A e_v placed in summand l.
  Vec embed(std::size_t l, const Vec& x) const;
  // Component of a module element in summand l, as an element of A.
  Vec component(std::size_t l, const Vec& coords) const;
};

class ProjectiveCatalog {
 public:
  explicit ProjectiveCatalog(const AlgebraPtr& a);
  const AlgebraPtr& algebra() const { return a_; }
  const ProjectiveIndecomposable& at(std::size_t v) const { return p_[v]; }
  ProjectiveSum sum(const std::vector<std::size_t>& vertices) const;
  // Matrix of the module map ⊕ A e_{v_l} -> target sending e_{v_l} to gens[l].
  Mat map_from(const ProjectiveSum& p, const Module& target, const std::vector<Vec>& gens) const;

 private:
  AlgebraPtr a_;
  std::vector<ProjectiveIndecomposable> p_;
};

struct DirectSum {
  Module module;
  std::vector<Mat> injections;
  std::vector<Mat> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);

struct Submodule {
  Module module;
  Subspace space;
  ModuleHom inclusion;
};
struct QuotientModule {
  Module module;
  Subspace killed;
  ModuleHom projection;
  // Preimage with zeros off the complement coordinates.
  Vec lift(const Vec& q) const;
};

Submodule submodule(const Module& m, const Subspace& s);
// Submodule generated by the given vectors.
Submodule generated_submodule(const Module& m, const std::vector<Vec>& gens);
QuotientModule quotient_module(const Module& m, const Subspace& s);
Submodule kernel(const ModuleHom& f);
Submodule image(const ModuleHom& f);
QuotientModule cokernel(const ModuleHom& f);

std::vector<Mat> hom_space(const Module& m, const Module& n);

Subspace radical_subspace(const Module& m);
struct TopAndRadical {
  Submodule radical;
  QuotientModule top;
};
TopAndRadical top_and_radical(const Module& m);
std::vector<std::size_t> dimension_vector(const Module& m);
std::vector<std::size_t> top_multiplicities(const Module& m);

Module dual_module(const Module& m);
Module restrict_scalars(const AlgebraHom& f, const Module& m);

bool is_projective(const Module& m);
bool is_injective(const Module& m);
std::optional<ModuleHom> find_module_isomorphism(const Module& m, const Module& n, std::uint64_t seed = 0);

struct TensorProduct {
  std::size_t dim = 0;
  Mat quotient_map;  // dim x (m.dim * n.dim); column i*n.dim+j is x_i ⊗ y_j
};
TensorProduct tensor_over_algebra(const Module& right, const Module& left);

struct EndomorphismAlgebra {
  AlgebraPtr algebra;      // multiplication = composition (f*g = f∘g)
  std::vector<Mat> basis;  // basis maps, in the algebra's basis order
  Subspace span;           // flattened (row-major) basis maps
  bool split_basic = false;
  Vec coords(const Mat& f) const;
};
EndomorphismAlgebra endomorphism_algebra(const Module& m, std::uint64_t seed = 0);

struct CovariantCheck {
  bool injective = false;
  bool split = false;
  bool covariant() const { return injective && split; }
  std::optional<std::vector<Mat>> section;  // images of the Hom(Y,X) basis
};
CovariantCheck is_covariant_morphism(const ModuleHom& f);

// Ideal of End(x) of maps factoring through y, in end.algebra coordinates.
Subspace factor_through_ideal(const EndomorphismAlgebra& end, const Module& x, const Module& y);
Subspace factor_through_ideal(const Module& x, const Module& y);

// Random finitely presented module: cokernel of a random map between sums
// of indecomposable projectives, total dimension at most max_dim.
Module random_module(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t max_dim);
// Isomorphic copy under a random change of basis.
Module random_conjugate(const Module& m, std::mt19937_64& rng);

}  // namespace findim
