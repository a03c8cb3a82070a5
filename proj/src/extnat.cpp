#include "findim/extnat.hpp"

#include <algorithm>

#include "findim/matrix.hpp"

namespace findim {

std::string ExtNat::str() const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(n_);
    case Kind::Infinite: return "inf";
    case Kind::Unknown: return ">=" + std::to_string(n_);
  }
  return "?";
}

ExtNat ExtNat::parse(const std::string& s) {
  if (s == "inf") return infinite();
  try {
    if (s.rfind(">=", 0) == 0) return unknown(std::stoll(s.substr(2)));
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size() && v >= 0) return finite(v);
  } catch (const std::exception&) {
  }
  throw Error("malformed extended natural: " + s);
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtNat::infinite();
  if (a.is_unknown() || b.is_unknown()) return ExtNat::unknown(a.value() + b.value());
  return ExtNat::finite(a.value() + b.value());
}

ExtNat operator+(const ExtNat& a, std::int64_t k) { return a + ExtNat::finite(k); }

ExtNat max(const ExtNat& a, const ExtNat& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtNat::infinite();
  std::int64_t v = std::max(a.value(), b.value());
  if (a.is_unknown() || b.is_unknown()) return ExtNat::unknown(v);
  return ExtNat::finite(v);
}

ExtNat min(const ExtNat& a, const ExtNat& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  if (a.is_finite() && b.is_finite()) return ExtNat::finite(std::min(a.value(), b.value()));
  if (a.is_finite() && a.value() <= b.value()) return a;
  if (b.is_finite() && b.value() <= a.value()) return b;
  return ExtNat::unknown(std::min(a.value(), b.value()));
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Undetermined: return "undetermined";
  }
  return "?";
}

Tri le(const ExtNat& a, const ExtNat& b) { return le(Bracket::of(a), Bracket::of(b)); }

Bracket Bracket::of(const ExtNat& v) {
  if (v.is_finite()) return exact(v.value());
  if (v.is_infinite()) return infinite();
  return at_least(v.value());
}

std::string Bracket::str() const {
  auto s = [](std::int64_t v, bool inf) { return inf ? std::string("inf") : std::to_string(v); };
  if (is_exact()) return s(lo, lo_inf);
  return "[" + s(lo, lo_inf) + ", " + s(hi, hi_inf) + "]";
}

Bracket operator+(const Bracket& a, const Bracket& b) {
  Bracket r;
  r.lo_inf = a.lo_inf || b.lo_inf;
  r.lo = r.lo_inf ? 0 : a.lo + b.lo;
  r.hi_inf = a.hi_inf || b.hi_inf;
  r.hi = r.hi_inf ? 0 : a.hi + b.hi;
  return r;
}

Bracket operator+(const Bracket& a, std::int64_t k) { return a + Bracket::exact(k); }

Bracket max(const Bracket& a, const Bracket& b) {
  Bracket r;
  r.lo_inf = a.lo_inf || b.lo_inf;
  r.lo = r.lo_inf ? 0 : std::max(a.lo, b.lo);
  r.hi_inf = a.hi_inf || b.hi_inf;
  r.hi = r.hi_inf ? 0 : std::max(a.hi, b.hi);
  return r;
}

Bracket abs_diff(const Bracket& a, const Bracket& b) {
  if (a.lo_inf || b.lo_inf) return Bracket::infinite();
  Bracket r;
  std::int64_t lo = 0;
  if (!b.hi_inf) lo = std::max(lo, a.lo - b.hi);
  if (!a.hi_inf) lo = std::max(lo, b.lo - a.hi);
  r.lo = lo;
  r.hi_inf = a.hi_inf || b.hi_inf;
  r.hi = r.hi_inf ? 0 : std::max(a.hi - b.lo, b.hi - a.lo);
  return r;
}

Tri le(const Bracket& a, const Bracket& b) {
  // a ≤ b for every choice iff a.hi ≤ b.lo.
  bool always = !a.hi_inf && (b.lo_inf || a.hi <= b.lo);
  if (a.hi_inf && b.lo_inf) always = true;
  if (always) return Tri::True;
  // a > b for every choice iff a.lo > b.hi.
  bool never = !b.hi_inf && (a.lo_inf || a.lo > b.hi);
  if (never) return Tri::False;
  return Tri::Undetermined;
}

}  // namespace findim
