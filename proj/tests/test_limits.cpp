#include <doctest.h>

#include <stdexcept>

#include "sierpinski/eip.hpp"
#include "sierpinski/graphs.hpp"
#include "sierpinski/limits.hpp"

using namespace sierpinski;

TEST_CASE("the three exact inverse values") {
  EtaPoint a = eta_inverse(Rational(1, 3));
  CHECK(a.y[0] == Rational(1, 2));
  CHECK(a.y[1] == 0);
  CHECK(a.y[2] == Rational(1, 2));

  EtaPoint b = eta_inverse(Rational(1, 2));
  CHECK(b.y[0] == 0);
  CHECK(b.y[1] == 1);
  CHECK(b.y[2] == 0);

  EtaPoint c = eta_inverse(Rational(1, 6));
  CHECK(c.y[0] == Rational(1, 2));
  CHECK(c.y[1] == Rational(1, 2));
  CHECK(c.y[2] == 0);
}

TEST_CASE("endpoints map to the extreme corners") {
  EtaPoint zero = eta_inverse(Rational(0));
  CHECK(zero.y[0] == 1);
  CHECK(zero.y[1] == 0);
  CHECK(zero.y[2] == 0);
  EtaPoint one = eta_inverse(Rational(1));
  CHECK(one.y[2] == 1);
}

TEST_CASE("coordinates always sum to one") {
  for (int q = 2; q <= 13; ++q)
    for (int p = 0; p <= q; ++p) {
      EtaPoint pt = eta_inverse(Rational(p, q));
      CHECK(pt.y[0] + pt.y[1] + pt.y[2] == 1);
    }
}

TEST_CASE("triadic points use the infinite representation") {
  EtaPoint pt = eta_inverse(Rational(1, 9));
  // 1/9 = 0.01 base 3, rewritten as 0.00222...
  CHECK(pt.preperiod == std::vector<int>{0, 0});
  CHECK(pt.period == std::vector<int>{2});
  CHECK(pt.y[0] == Rational(3, 4));
  CHECK(pt.y[2] == Rational(1, 4));
}

TEST_CASE("lambda agrees with the profile at triadic rationals") {
  for (int n = 1; n <= 5; ++n) {
    auto prof = profile_recursive_m3(n);
    for (std::uint64_t ell = 0; ell < prof.size(); ++ell) {
      CHECK(lambda_triadic(ell, n) == prof[ell]);
      LambdaValue v = lambda_value(Rational(ell, pow_checked(3, n)));
      CHECK_FALSE(v.countably_infinite);
      CHECK(v.value == prof[ell]);
    }
  }
}

TEST_CASE("lambda is countably infinite off the triadic grid") {
  CHECK(lambda_value(Rational(1, 2)).countably_infinite);
  CHECK(lambda_value(Rational(2, 7)).countably_infinite);
  CHECK(lambda_value(Rational(5, 6)).countably_infinite);
  CHECK_FALSE(lambda_value(Rational(0)).countably_infinite);
  CHECK(lambda_value(Rational(1)).value == 0);
  CHECK_THROWS_AS(lambda_value(Rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(lambda_triadic(10, 2), std::out_of_range);
}

TEST_CASE("truncations converge to the scaled embedding of the Lex word") {
  // At a = ell/3^n the first n digits of the infinite expansion are the
  // digits of ell-1, so eta_inverse differs from the scaled embedding of
  // that word by at most 2^-n in every coordinate.
  for (int n = 1; n <= 10; ++n) {
    WordSpace ws(n, 3);
    std::uint64_t full = pow_checked(3, n);
    for (std::uint64_t ell : {std::uint64_t{1}, full / 2, full - 1, full}) {
      if (ell == 0) continue;
      EtaPoint pt = eta_inverse(Rational(ell, full));
      auto y = embed(ws, static_cast<Code>(ell - 1));
      Rational tol(1, std::uint64_t{1} << n);
      for (int j = 0; j < 3; ++j) {
        Rational scaled(y[j], std::uint64_t{1} << n);
        Rational diff = pt.y[j] - scaled;
        if (diff < 0) diff = -diff;
        CHECK(diff <= tol);
      }
    }
  }
}

TEST_CASE("rendering rationals and points") {
  CHECK(rational_string(Rational(1, 2)) == "1/2");
  CHECK(rational_string(Rational(3)) == "3");
  CHECK(point_string(eta_inverse(Rational(1, 3))) == "1/2,0,1/2");
}
