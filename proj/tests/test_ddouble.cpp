#include <doctest.h>

#include <cmath>

#include "heun/ddouble.hpp"

using heun::DDouble;

TEST_CASE("ddouble arithmetic keeps sub-double residue") {
  const DDouble a(1.0, 1e-20);
  const DDouble b = a - DDouble(1.0);
  CHECK(b.to_double() == doctest::Approx(1e-20).epsilon(1e-12));

  // (1 + eps) * (1 - eps) = 1 - eps^2 exactly representable in dd
  const double eps = std::ldexp(1.0, -40);
  const DDouble p = (DDouble(1.0) + DDouble(eps)) * (DDouble(1.0) - DDouble(eps));
  const DDouble expect = DDouble(1.0) - DDouble(eps) * DDouble(eps);
  CHECK((p - expect).to_double() == 0.0);
}

TEST_CASE("ddouble division and sqrt round-trip") {
  const DDouble x(7.0);
  const DDouble y(11.0);
  const DDouble q = x / y;
  const DDouble back = q * y - x;
  CHECK(std::abs(back.to_double()) < 1e-30);

  const DDouble r = heun::sqrt(DDouble(2.0));
  const DDouble diff = r * r - DDouble(2.0);
  CHECK(std::abs(diff.to_double()) < 1e-30);
}

TEST_CASE("ddouble comparisons and abs") {
  CHECK(DDouble(1.0, -1e-20) < DDouble(1.0));
  CHECK(DDouble(1.0) < DDouble(1.0, 1e-20));
  CHECK(heun::abs(DDouble(-3.5)).to_double() == 3.5);
  CHECK(heun::abs(DDouble(0.0, -1e-25)).to_double() == doctest::Approx(1e-25).epsilon(1e-10));
}

TEST_CASE("ddouble resolves cancellation that double cannot") {
  // (1e16 + pi) - 1e16 in double loses pi's tail
  const DDouble big(1e16);
  const DDouble pi(M_PI);
  const DDouble out = (big + pi) - big;
  CHECK(std::abs((out - pi).to_double()) < 1e-25);
}
