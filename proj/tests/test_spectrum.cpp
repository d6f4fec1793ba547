#include <doctest.h>

#include <cmath>
#include <random>

#include "heun/spectrum.hpp"
#include "testutil.hpp"

using heun::DDouble;
using heun::LameSystem;
using heun::VecX;

TEST_CASE("k=1 closed form: nu are the roots of B") {
  const LameSystem sys = heun::testing::figure1_system();
  const auto spec = heun::van_vleck_spectrum(sys, 1);
  const double s601 = std::sqrt(601.0);
  const double nu1 = (11.0 - s601) / 20.0;
  const double nu2 = (11.0 + s601) / 20.0;
  REQUIRE(spec.nus.size() == 2);
  CHECK(spec.nu_original(0) == doctest::Approx(nu1).epsilon(1e-14));
  CHECK(spec.nu_original(1) == doctest::Approx(nu2).epsilon(1e-14));
  CHECK(spec.mu == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("banded operator matches the reference polynomial expansion") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const LameSystem sys = heun::testing::random_system(rng);
    const int k = 1 + int(rng() % 24);
    const auto M = heun::build_operator_matrix<double>(sys, k);
    VecX<double> c(k + 1);
    for (int i = 0; i <= k; ++i) c[i] = u(rng);

    const VecX<double> ref = heun::testing::apply_operator_reference<double>(sys, k, c);
    const Eigen::VectorXd via_matrix = M * c;
    REQUIRE(ref.size() == k + 2);
    // top coefficient cancels identically: mu_k is forced by the degree
    CHECK(std::abs(ref[k + 1]) <= 1e-12 * ref.cwiseAbs().maxCoeff());
    for (int i = 0; i <= k; ++i)
      CHECK(via_matrix[i] ==
            doctest::Approx(ref[i]).epsilon(1e-12).scale(ref.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("operator applied to x^k drops to degree k") {
  const LameSystem sys = heun::testing::figure1_system();
  const int k = 9;
  VecX<double> c = VecX<double>::Zero(k + 1);
  c[k] = 1.0;
  const auto ref = heun::testing::apply_operator_reference<double>(sys, k, c);
  CHECK(std::abs(ref[k + 1]) <= 1e-13 * ref.cwiseAbs().maxCoeff());
}

TEST_CASE("spectrum counts, containment, distinctness for a degree sweep") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const LameSystem sys = heun::testing::random_system(rng);
    for (int k : {1, 2, 3, 5, 9, 17, 33}) {
      const auto spec = heun::van_vleck_spectrum(sys, k);
      REQUIRE(spec.nus.size() == k + 1);
      const auto nus = spec.nus_original();
      CHECK(nus[0] > sys.alpha[0]);
      CHECK(nus[k] < sys.alpha[2]);
      for (int i = 0; i < k; ++i) CHECK(nus[i] < nus[i + 1]);
      for (int j = 0; j <= k; ++j) CHECK(spec.coeffs(k, j).to_double() == 1.0);
    }
  }
}

TEST_CASE("symmetric system: spectrum is antisymmetric") {
  const LameSystem sys = heun::testing::symmetric_system();
  for (int k : {2, 5, 8}) {
    const auto spec = heun::van_vleck_spectrum(sys, k);
    for (int i = 0; i <= k; ++i)
      CHECK(spec.nus[i] == doctest::Approx(-spec.nus[k - i]).epsilon(0.0).scale(1e-10));
  }
}

TEST_CASE("ODE residual stays inside the scaled bound") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 3; ++trial) {
    const LameSystem sys = heun::testing::random_system(rng);
    for (int k : {1, 4, 16, 40, 64}) {
      const auto spec = heun::van_vleck_spectrum(sys, k);
      const auto coeffs = spec.coeffs_double();
      for (int j = 0; j <= k; ++j) {
        const double r =
            heun::ode_residual_scaled(spec.canonical, k, spec.nus[j], coeffs.col(j));
        CHECK(r <= 1e-9 * double(k) * double(k));
      }
    }
  }
}

TEST_CASE("nu from zeros closes the loop") {
  const LameSystem sys = heun::testing::figure1_system();
  const double s601 = std::sqrt(601.0);
  Eigen::VectorXd z(1);
  z << (11.0 + s601) / 20.0;
  CHECK(heun::van_vleck_from_zeros(z, sys) ==
        doctest::Approx((11.0 - s601) / 20.0).epsilon(1e-14));
}

TEST_CASE("errors: k=0 and k too large") {
  const LameSystem sys = heun::testing::figure1_system();
  CHECK_THROWS_AS(heun::van_vleck_spectrum(sys, 0), heun::Error);
  CHECK_THROWS_AS(heun::build_operator(sys, 0), heun::Error);
  CHECK_THROWS_AS(heun::van_vleck_spectrum(sys, 300), heun::Error);
}

TEST_CASE("hessenberg band solve agrees with dense LU") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 24;
  heun::MatX<DDouble> M = heun::MatX<DDouble>::Zero(n, n);
  Eigen::MatrixXd Md = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = std::max(0, r - 1); c <= std::min(n - 1, r + 2); ++c) {
      const double v = u(rng);
      M(r, c) = DDouble(v);
      Md(r, c) = v;
    }
  VecX<DDouble> rhs(n);
  Eigen::VectorXd rhsd(n);
  for (int i = 0; i < n; ++i) {
    const double v = u(rng);
    rhs[i] = DDouble(v);
    rhsd[i] = v;
  }
  const double sigma = 0.37;
  const auto x = heun::hessenberg_shifted_solve(M, DDouble(sigma), rhs);
  const Eigen::VectorXd xd =
      (Md - sigma * Eigen::MatrixXd::Identity(n, n)).partialPivLu().solve(rhsd);
  for (int i = 0; i < n; ++i)
    CHECK(x[i].to_double() == doctest::Approx(xd[i]).epsilon(1e-9));
}
