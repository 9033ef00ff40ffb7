#include "sierpinski/limits.hpp"

#include <map>
#include <stdexcept>

#include "sierpinski/eip.hpp"

namespace sierpinski {

using boost::multiprecision::cpp_int;

EtaPoint eta_inverse(const Rational& a) {
  if (a < 0 || a > 1) throw std::domain_error("eta_inverse needs a in [0,1]");
  EtaPoint pt;
  cpp_int p = numerator(a);
  cpp_int q = denominator(a);
  if (p == q) {
    pt.period = {2};
  } else {
    std::vector<int> digits;
    std::map<cpp_int, int> seen;  // remainder -> index of the digit it produces
    cpp_int r = p;
    for (;;) {
      if (r == 0) {
        // Terminating expansion: the point is named by the infinite
        // representation, so lower the last digit and append twos.
        if (digits.empty()) {
          pt.period = {0};
        } else {
          digits.back() -= 1;
          pt.preperiod = std::move(digits);
          pt.period = {2};
        }
        break;
      }
      auto [it, fresh] = seen.emplace(r, static_cast<int>(digits.size()));
      if (!fresh) {
        int start = it->second;
        pt.preperiod.assign(digits.begin(), digits.begin() + start);
        pt.period.assign(digits.begin() + start, digits.end());
        break;
      }
      r *= 3;
      cpp_int d = r / q;
      r -= d * q;
      digits.push_back(static_cast<int>(d));
    }
  }

  int P = static_cast<int>(pt.preperiod.size());
  int L = static_cast<int>(pt.period.size());
  for (int i = 1; i <= P; ++i)
    pt.y[pt.preperiod[i - 1]] += Rational(1, cpp_int(1) << i);
  // The tail contributes its one-block sum scaled by the geometric series.
  Rational tail(cpp_int(1) << L, (cpp_int(1) << L) - 1);
  for (int i = 1; i <= L; ++i)
    pt.y[pt.period[i - 1]] += Rational(1, cpp_int(1) << (P + i)) * tail;
  return pt;
}

LambdaValue lambda_value(const Rational& a) {
  if (a < 0 || a > 1) throw std::domain_error("lambda needs a in [0,1]");
  cpp_int p = numerator(a);
  cpp_int q = denominator(a);
  if (p == 0 || p == q) return {false, 0};
  int n = 0;
  while (q % 3 == 0) {
    q /= 3;
    ++n;
  }
  if (q != 1) return {true, 0};
  return {false, profile_closed_form(n, 3, static_cast<std::uint64_t>(p))};
}

std::uint64_t lambda_triadic(std::uint64_t ell, int n) {
  std::uint64_t full = pow_checked(3, n);
  if (ell > full) throw std::out_of_range("ell exceeds 3^n");
  if (ell == 0 || ell == full) return 0;
  return profile_closed_form(n, 3, ell);
}

std::string rational_string(const Rational& r) {
  return r.str();
}

std::string point_string(const EtaPoint& p) {
  return rational_string(p.y[0]) + "," + rational_string(p.y[1]) + "," +
         rational_string(p.y[2]);
}

}  // namespace sierpinski
