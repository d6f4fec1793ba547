#include <doctest.h>

#include <random>

#include "heun/system.hpp"
#include "testutil.hpp"

using heun::ErrorCode;
using heun::LameSystem;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const heun::Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("validate_system accepts the reference systems and rejects junk") {
  const LameSystem s = heun::testing::figure1_system();
  CHECK(s.alpha[0] == -1.0);
  CHECK(s.alpha[2] == 2.0);

  CHECK(code_of([] {
          heun::validate_system(Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 1, 1));
        }) == ErrorCode::DuplicateAbscissa);
  CHECK(code_of([] {
          heun::validate_system(Eigen::Vector3d(-1, 0, 1), Eigen::Vector3d(1, -2, 1));
        }) == ErrorCode::NonpositiveCharge);

  // unsorted input comes back sorted with charges riding along
  const LameSystem t =
      heun::validate_system(Eigen::Vector3d(2, -1, 0), Eigen::Vector3d(9, 1, 4));
  CHECK(t.alpha[0] == -1.0);
  CHECK(t.rho[0] == 1.0);
  CHECK(t.rho[2] == 9.0);
}

TEST_CASE("mu: reference values") {
  const LameSystem f = heun::testing::figure1_system();
  CHECK(heun::mu(f, 6) == doctest::Approx(50.0).epsilon(1e-15));
  CHECK(heun::mu(f, 0) == 0.0);
  const LameSystem s =
      heun::validate_system(Eigen::Vector3d(-1, 0, 1), Eigen::Vector3d(1, 1, 1));
  CHECK(heun::mu(s, 1) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("A and B coefficient expansions hit the abscissas exactly") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const LameSystem s = heun::testing::random_system(rng);
    const auto a = heun::cubic_coeffs<double>(s);
    const auto b = heun::drift_coeffs<double>(s);
    for (int i = 0; i < 3; ++i) {
      const double av = heun::poly_eval(a, s.alpha[i]);
      double scale = 0.0;
      for (int j = 0; j < 4; ++j) scale += std::abs(a[j] * std::pow(s.alpha[i], j));
      CHECK(std::abs(av) <= 1e-12 * (1.0 + scale));

      double expect = s.rho[i];
      for (int m = 0; m < 3; ++m)
        if (m != i) expect *= s.alpha[i] - s.alpha[m];
      const double bv = heun::poly_eval(b, s.alpha[i]);
      CHECK(bv == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("canonical rescale: reference map, identity case, round trip") {
  const auto [csys, map] = heun::canonical_rescale(heun::testing::figure1_system());
  CHECK(csys.alpha[0] == -1.0);
  CHECK(csys.alpha[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(csys.alpha[2] == 1.0);
  CHECK(map.scale == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(map.offset == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(heun::mu(csys, 6) == heun::mu(heun::testing::figure1_system(), 6));

  const auto [ssys, smap] = heun::canonical_rescale(heun::testing::symmetric_system());
  CHECK(smap.is_identity());
  CHECK(ssys.alpha[1] == 0.0);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 100; ++t) {
    const double x = u(rng);
    CHECK(map.inverse(map(x)) == doctest::Approx(x).epsilon(1e-15));
  }
}
