#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Arbitrary-precision integer. All lattice data (rays, characters, divisor
/// coefficients) is exact; no floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, used for vertex coordinates and rank
/// computations over Q.
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Base error carrying a machine-readable kind (surfaced by the CLI as
/// {"error": kind, "detail": what()}).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/// A cokernel that should have been free has torsion (e.g. a non-smooth fan's
/// class group, or a lattice map that is not surjective).
class TorsionCokernelError : public Error {
public:
  explicit TorsionCokernelError(const std::string& msg)
      : Error("TorsionCokernel", msg) {}
};

/// minimal_integer_solutions was handed a region that is not closed under
/// adding the positive orthant.
class NotMonotoneError : public Error {
public:
  explicit NotMonotoneError(const std::string& msg)
      : Error("NotMonotone", msg) {}
};

/// A cone whose generators are linearly dependent (the cell complex and the
/// smoothness machinery require simplicial cones).
class NotSimplicialError : public Error {
public:
  explicit NotSimplicialError(const std::string& msg)
      : Error("NotSimplicial", msg) {}
};

/// The subset scan over ray patterns is capped to keep runs interactive.
class TooManyRaysError : public Error {
public:
  explicit TooManyRaysError(const std::string& msg)
      : Error("TooManyRays", msg) {}
};

/// A degree pattern with nonvanishing cohomology has an unbounded solution
/// region; this signals a fan that is not complete.
class UnboundedContributionError : public Error {
public:
  explicit UnboundedContributionError(const std::string& msg)
      : Error("UnboundedContribution", msg) {}
};

/// A cone reference is malformed (bad ray index, duplicate rays, not a face
/// of any maximal cone, ...).
class InvalidConeError : public Error {
public:
  explicit InvalidConeError(const std::string& msg)
      : Error("InvalidCone", msg) {}
};

/// Malformed user input (JSON shape, dimension mismatch, unknown fixture).
class InvalidInputError : public Error {
public:
  explicit InvalidInputError(const std::string& msg)
      : Error("InvalidInput", msg) {}
};

/// Floor of a rational (denominators are kept positive by cpp_rational).
inline Int rat_floor(const Rat& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int r = num % den;
  if (r < 0) r += den;
  return (num - r) / den;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integral(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// Componentwise minimum.
inline IntVec comp_min(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

/// a <= b componentwise (domination order on exponent vectors).
inline bool dominates_leq(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool all_nonneg(const IntVec& a) {
  for (const auto& x : a)
    if (x < 0) return false;
  return true;
}

inline bool is_zero(const IntVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline IntVec zero_vec(size_t n) { return IntVec(n, Int(0)); }

/// gcd of all entries (nonnegative; 0 for the zero vector).
inline Int content(const IntVec& a) {
  Int g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  return g;
}

/// Divide out the content so the first nonzero entry stays positive-agnostic;
/// used to canonicalize ray generators (primitive vector on the same ray).
inline IntVec primitive(const IntVec& a) {
  Int g = content(a);
  if (g == 0) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

}  // namespace toric
