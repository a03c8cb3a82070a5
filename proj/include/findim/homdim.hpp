#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "findim/resolution.hpp"

namespace findim {

enum class DimensionMethod { ExactList, Search, Formula };
std::string to_string(DimensionMethod m);

struct DimensionReport {
  ExtNat value;
  DimensionMethod method = DimensionMethod::Formula;
  std::vector<std::string> witnesses;  // one line per module consulted
  std::size_t undetermined = 0;        // modules whose pd stayed unknown within cap
};

// Largest finite pd among the listed modules.
DimensionReport findim_from_module_list(const AlgebraPtr& a, const std::vector<Module>& modules,
                                        std::size_t cap = kDefaultCap);

bool is_uniserial(const Module& m);
bool is_nakayama(const AlgebraPtr& a);
// All indecomposables P_i / rad^t P_i of a Nakayama algebra.
std::vector<Module> nakayama_indecomposables(const AlgebraPtr& a);

// Lower bound for fd(a) from simples and random finitely presented modules.
DimensionReport findim_search_lower_bound(const AlgebraPtr& a, std::size_t budget, std::size_t size_cap,
                                          std::uint64_t seed, std::size_t cap = kDefaultCap);

// Max pd of the simple modules.
ExtNat global_dimension(const AlgebraPtr& a, std::size_t cap = kDefaultCap);

struct FindimBracket {
  Bracket value;
  std::string method;  // "zero-ring", "local", "global", "nakayama", "search"
  std::vector<std::string> witnesses;
};
// fd(a) as an interval: exact for local algebras, finite global dimension
// and Nakayama algebras; otherwise [search lower bound, inf].
FindimBracket finitistic_dimension(const AlgebraPtr& a, std::size_t cap = kDefaultCap, std::uint64_t seed = 0);

// The algebra every dimension routine works on: idempotents computed if
// missing, reduced to the basic corner if not basic.
AlgebraPtr dimension_model(const AlgebraPtr& a);

struct BoundFormula {
  std::string id;
  std::string lhs;                  // quantity bounded above
  std::string rhs;                  // formula text
  std::vector<std::string> inputs;  // named inputs of the rhs
};
const std::vector<BoundFormula>& bound_formulas();
const BoundFormula& bound_formula(const std::string& id);  // throws on unknown id

// Right-hand side of the bound over ExtNat / Bracket arithmetic.
ExtNat evaluate_bound(const std::string& id, const std::map<std::string, ExtNat>& inputs);
Bracket evaluate_bound(const std::string& id, const std::map<std::string, Bracket>& inputs);

}  // namespace findim
