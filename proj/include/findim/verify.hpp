#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "findim/contexts.hpp"
#include "findim/io.hpp"

namespace findim {

enum class HypStatus { Holds, Fails, Undetermined };
std::string to_string(HypStatus s);

struct Hypothesis {
  std::string name;
  HypStatus status = HypStatus::Undetermined;
  std::string detail;
};

// A companion inequality of the same statement (e.g. the lower bound).
struct Comparison {
  std::string text;
  Bracket lhs, rhs;
  Tri holds = Tri::Undetermined;
};

// rejected: some hypothesis is decided false, so the statement does not apply.
enum class Verdict { Verified, Violated, Undetermined, Rejected };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string bound_id;
  std::string instance;
  std::string lhs_name;
  std::string rhs_formula;
  std::vector<Hypothesis> hypotheses;
  std::map<std::string, Bracket> inputs;
  Bracket lhs, rhs;
  Tri holds = Tri::Undetermined;
  std::vector<Comparison> extra;
  Verdict verdict = Verdict::Undetermined;
  std::vector<std::string> witnesses;
  std::vector<std::string> undetermined;  // quantities or hypotheses left open
  bool equality() const { return lhs.is_exact() && rhs.is_exact() && lhs.lo == rhs.lo && !lhs.lo_inf; }
};

// Slots name algebras (preset, file, or "X*Y" for a product), ideals
// ("0", "rad", "all", "e1+e3"), idempotents ("e2", "e1+e2", "0", "1"),
// bimodules ("0", "k", "s<i>-<j>", "A", "DA") and modules (see load_module).
struct Instance {
  std::string bound_id;
  std::map<std::string, std::string> slots;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 0;
  std::string name() const;
};

// Slots a bound reads, with defaults where one exists ("" = required).
const std::map<std::string, std::string>& bound_slots(const std::string& bound_id);

VerificationReport verify_inequality(const Instance& in);

Instance instance_from_json(const Json& j);
Json report_to_json(const VerificationReport& r);
std::string format_report(const VerificationReport& r);

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultCap;
  std::vector<VerificationReport> rows;
  std::size_t count(Verdict v) const;
};
std::vector<Instance> suite_instances(std::uint64_t seed, std::size_t cap);
SuiteReport report_suite(std::uint64_t seed, std::size_t cap = kDefaultCap);
Json suite_to_json(const SuiteReport& s);
std::string format_suite(const SuiteReport& s);

// Slot parsers, exposed for the CLI and tests.
AlgebraPtr parse_algebra_spec(const std::string& spec);
Subspace parse_ideal_spec(const AlgebraPtr& a, const std::string& spec);
Vec parse_idempotent_spec(const AlgebraPtr& a, const std::string& spec);
Bimodule parse_bimodule_spec(const AlgebraPtr& s, const AlgebraPtr& t, const std::string& spec);

}  // namespace findim
