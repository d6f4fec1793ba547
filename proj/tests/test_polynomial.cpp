#include <doctest.h>

#include <random>

#include "heun/polynomial.hpp"

using heun::DDouble;
using heun::VecX;

TEST_CASE("eval with derivatives: x^2 - 1 at 2, constants, x^3 at -1") {
  VecX<double> p(3);
  p << -1, 0, 1;
  auto v = heun::poly_eval012(p, 2.0);
  CHECK(v[0] == 3.0);
  CHECK(v[1] == 4.0);
  CHECK(v[2] == 2.0);

  VecX<double> c(1);
  c << 5;
  v = heun::poly_eval012(c, 17.25);
  CHECK(v[0] == 5.0);
  CHECK(v[1] == 0.0);
  CHECK(v[2] == 0.0);

  VecX<double> cube = VecX<double>::Zero(4);
  cube[3] = 1;
  v = heun::poly_eval012(cube, -1.0);
  CHECK(v[0] == -1.0);
  CHECK(v[1] == 3.0);
  CHECK(v[2] == -6.0);
}

TEST_CASE("from_roots then evaluate vanishes at the roots") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + int(rng() % 12);
    VecX<DDouble> roots(k);
    for (int i = 0; i < k; ++i) roots[i] = DDouble(u(rng));
    const VecX<DDouble> c = heun::poly_from_roots(roots);
    CHECK(c[k].to_double() == 1.0);
    for (int i = 0; i < k; ++i) {
      const double v = heun::poly_eval(c, roots[i]).to_double();
      CHECK(std::abs(v) < 1e-28);
    }
  }
}

TEST_CASE("remainder: (x^2 - 1) mod (x - 1) vanishes") {
  VecX<double> a(3), b(2);
  a << -1, 0, 1;
  b << -1, 1;
  const VecX<double> r = heun::poly_rem(a, b);
  CHECK(heun::poly_degree(r) <= 0);
  CHECK(std::abs(r[0]) < 1e-15);
}

TEST_CASE("derivative coefficients") {
  VecX<double> p(4);
  p << 1, 2, 3, 4;  // 1 + 2x + 3x^2 + 4x^3
  const VecX<double> d = heun::poly_derivative(p);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2.0);
  CHECK(d[1] == 6.0);
  CHECK(d[2] == 12.0);
}
