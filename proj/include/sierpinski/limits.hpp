#pragma once

// The continuous limit of the m=3 family: the inverse of the limit
// numbering eta on the attractor and the limit boundary-length function
// lambda. All arithmetic is exact rational.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sierpinski {

using Rational = boost::multiprecision::cpp_rational;

struct EtaPoint {
  std::array<Rational, 3> y{};  // barycentric coordinates, summing to 1
  std::vector<int> preperiod;   // base-3 digits before the repeating block
  std::vector<int> period;      // repeating block (never empty)
};

// Expands a in base 3 and places weight 2^-i on coordinate d_i. Triadic
// points use the representation with an infinite tail of twos (the finite
// one would name a different point of the attractor); 0 expands to all
// zeros and 1 to all twos.
EtaPoint eta_inverse(const Rational& a);

struct LambdaValue {
  bool countably_infinite = false;
  std::uint64_t value = 0;  // meaningful only when finite
};

// Limit boundary length at a (in [0,1]): the profile value at ell/3^n when
// a is triadic, countably infinite otherwise.
LambdaValue lambda_value(const Rational& a);

// lambda at ell/3^n directly, 0 <= ell <= 3^n.
std::uint64_t lambda_triadic(std::uint64_t ell, int n);

std::string rational_string(const Rational& r);  // "p/q", or "p" when integral
std::string point_string(const EtaPoint& p);     // "y0,y1,y2"

}  // namespace sierpinski
