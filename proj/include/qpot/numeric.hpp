#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qpot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

std::string int_to_string(const Int& n);
std::string rat_to_string(const Rat& q);

// Parses "p", "-p" or "p/q" with q > 0 after normalization. Throws Error("MalformedSpec").
Rat rat_from_string(const std::string& s);

}  // namespace qpot
