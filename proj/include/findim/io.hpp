#pragma once

#include <string>

#include "json.hpp"

#include "findim/complex.hpp"
#include "findim/homdim.hpp"

namespace findim {

using Json = nlohmann::json;

// Algebra file:
//   {"dim": n, "labels": [...], "unit": ["1", "0", ...],
//    "idempotents": [[...], ...],            (optional)
//    "table": [[i, j, k, "c"], ...]}         b_i b_j contains c b_k
Json algebra_to_json(const BasedAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j);
// Preset name, or path to an algebra file.
AlgebraPtr load_algebra(const std::string& spec);

// Module file: {"side": "left"|"right", "dim": d, "action": [matrix per basis element]}
// with a matrix written as a list of rows of rational strings.
Json module_to_json(const Module& m);
Module module_from_json(const AlgebraPtr& a, const Json& j);
// "S<i>", "P<i>", "I<i>" (1-based vertex), "A" (regular), "DA" (dual of the
// right regular module), or a module file path.
Module load_module(const AlgebraPtr& a, const std::string& spec);

// Complex file: {"side": ..., "lo": n, "terms": [module...], "diffs": [matrix...]}
Json complex_to_json(const BoundedComplex& c);
BoundedComplex complex_from_json(const AlgebraPtr& a, const Json& j);
BoundedComplex load_complex(const AlgebraPtr& a, const std::string& spec);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, std::size_t n);

Json extnat_to_json(const ExtNat& v);  // number, "inf" or ">=k"
Json bracket_to_json(const Bracket& b);
Json report_to_json(const DimensionReport& r);

Json read_json_file(const std::string& path);

}  // namespace findim
