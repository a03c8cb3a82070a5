#pragma once

#include <cstdint>
#include <string>

namespace findim {

// N ∪ {∞} ∪ {unknown(≥k)}.  unknown(k) means "some value ≥ k, possibly ∞".
class ExtNat {
 public:
  enum class Kind { Finite, Infinite, Unknown };

  ExtNat() = default;
  static ExtNat finite(std::int64_t n) { return ExtNat(Kind::Finite, n); }
  static ExtNat infinite() { return ExtNat(Kind::Infinite, 0); }
  static ExtNat unknown(std::int64_t at_least) { return ExtNat(Kind::Unknown, at_least); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  // Finite value, or the lower bound of an unknown.
  std::int64_t value() const { return n_; }

  bool operator==(const ExtNat& o) const { return kind_ == o.kind_ && (kind_ == Kind::Infinite || n_ == o.n_); }
  bool operator!=(const ExtNat& o) const { return !(*this == o); }

  std::string str() const;  // "3", "inf", ">=24"
  static ExtNat parse(const std::string& s);

 private:
  ExtNat(Kind k, std::int64_t n) : kind_(k), n_(n) {}
  Kind kind_ = Kind::Finite;
  std::int64_t n_ = 0;
};

ExtNat operator+(const ExtNat& a, const ExtNat& b);
ExtNat operator+(const ExtNat& a, std::int64_t k);
ExtNat max(const ExtNat& a, const ExtNat& b);
ExtNat min(const ExtNat& a, const ExtNat& b);

enum class Tri { False, True, Undetermined };
std::string to_string(Tri t);

// Sound comparison: True/False only when every value compatible with the
// operands agrees.
Tri le(const ExtNat& a, const ExtNat& b);

// Closed interval [lo, hi] of N ∪ {∞}; hi = ∞ also encodes "no upper bound".
struct Bracket {
  std::int64_t lo = 0;
  bool lo_inf = false;
  std::int64_t hi = 0;
  bool hi_inf = false;

  static Bracket exact(std::int64_t n) { return {n, false, n, false}; }
  static Bracket at_least(std::int64_t n) { return {n, false, 0, true}; }
  static Bracket between(std::int64_t lo, std::int64_t hi) { return {lo, false, hi, false}; }
  static Bracket infinite() { return {0, true, 0, true}; }
  static Bracket of(const ExtNat& v);

  bool is_exact() const { return lo_inf == hi_inf && (lo_inf || lo == hi); }
  std::string str() const;
};

Bracket operator+(const Bracket& a, const Bracket& b);
Bracket operator+(const Bracket& a, std::int64_t k);
Bracket max(const Bracket& a, const Bracket& b);
// |a - b| for finite-valued brackets.
Bracket abs_diff(const Bracket& a, const Bracket& b);
Tri le(const Bracket& a, const Bracket& b);

}  // namespace findim
