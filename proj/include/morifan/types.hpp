#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace morifan {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary-precision; no floating point is used anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

enum class Errc {
  NonPointed,
  NonInjectiveBasis,
  DimensionMismatch,
  NotEffective,
  ZeroClass,
  NonIntegral,
  ResourceLimit,
  Parse,
  Validation,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised when a cone would contain a line; carries a direction of the line.
class NonPointedError : public Error {
 public:
  NonPointedError(const std::string& msg, IntVec witness)
      : Error(Errc::NonPointed, msg), witness_(std::move(witness)) {}
  const IntVec& witness() const { return witness_; }

 private:
  IntVec witness_;
};

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Rat dot(const RatVec& a, const RatVec& b);

RatVec to_rat(const IntVec& v);
IntVec to_int(const RatVec& v);  // throws Errc::NonIntegral on non-integer entries
bool is_integral(const RatVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

// Scale to integer entries with gcd 1, keeping direction. Zero stays zero.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);
// Same, but flips sign so the first nonzero entry is positive (for
// orientation-free covectors such as hyperplane normals).
IntVec primitive_signed(const IntVec& v);

IntVec negate(const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

int lex_compare(const IntVec& a, const IntVec& b);

std::string to_string(const Rat& q);    // canonical "p/q", q > 0, gcd(p,q) = 1
std::string to_string(const IntVec& v);
Rat parse_rat(const std::string& s);    // accepts "p" and "p/q"

}  // namespace morifan
