#include <functional>
#include <map>

#include "findim/algebra.hpp"

namespace findim {

namespace {

AlgebraPtr make_ut2() {
  // Basis e11, e12, e22 multiplied as composition of maps written on the
  // right: x*y is "x then y", i.e. the matrix product y·x.  Then
  // e12 = e22 * e12 * e11 is an arrow from vertex 1 (e11) to vertex 2 (e22).
  const std::size_t n = 3;
  BasedAlgebra::Table t(n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { t[i * n + j].push_back({k, Rat(1)}); };
  set(0, 0, 0);  // e11 e11 = e11
  set(1, 0, 1);  // e12 e11 = e12
  set(2, 1, 1);  // e22 e12 = e12
  set(2, 2, 2);  // e22 e22 = e22
  return BasedAlgebra::make(n, std::move(t), {1, 0, 1}, {{1, 0, 0}, {0, 0, 1}}, {"e11", "e12", "e22"});
}

const std::map<std::string, std::function<AlgebraPtr()>>& catalog() {
  static const std::map<std::string, std::function<AlgebraPtr()>> c = {
      {"k", [] { return path_algebra_monomial(1, {}, {}, 2); }},
      {"A2", [] { return path_algebra_monomial(2, {{0, 1, "a"}}, {}, 2); }},
      {"dual", [] { return path_algebra_monomial(1, {{0, 0, "x"}}, {{0, 0}}, 2); }},
      {"nak3", [] { return path_algebra_monomial(1, {{0, 0, "x"}}, {{0, 0, 0}}, 3); }},
      {"ut2", make_ut2},
      {"kronecker-trunc", [] { return path_algebra_monomial(2, {{0, 1, "a"}, {0, 1, "b"}}, {}, 2); }},
      {"k2", [] { return path_algebra_monomial(2, {}, {}, 2); }},
      {"k3", [] { return path_algebra_monomial(3, {}, {}, 2); }},
      {"A3", [] { return path_algebra_monomial(3, {{0, 1, "a"}, {1, 2, "b"}}, {}, 3); }},
      {"A3-rad2", [] { return path_algebra_monomial(3, {{0, 1, "a"}, {1, 2, "b"}}, {{0, 1}}, 3); }},
      {"cyc2", [] { return path_algebra_monomial(2, {{0, 1, "a"}, {1, 0, "b"}}, {{0, 1}, {1, 0}}, 2); }},
      {"cyc2-3", [] { return path_algebra_monomial(2, {{0, 1, "a"}, {1, 0, "b"}}, {{0, 1, 0}, {1, 0, 1}}, 3); }},
  };
  return c;
}

}  // namespace

AlgebraPtr preset(const std::string& name) {
  const auto& c = catalog();
  auto it = c.find(name);
  if (it == c.end()) throw Error("unknown preset: " + name);
  return it->second();
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : catalog()) out.push_back(k);
  return out;
}

}  // namespace findim
