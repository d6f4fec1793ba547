#pragma once

#include <random>

#include "heun/polynomial.hpp"
#include "heun/system.hpp"

namespace heun::testing {

inline LameSystem figure1_system() {
  return validate_system(Eigen::Vector3d(-1.0, 0.0, 2.0), Eigen::Vector3d(1.0, 2.0, 1.0 / 3.0));
}

inline LameSystem symmetric_system() {
  return validate_system(Eigen::Vector3d(-1.0, 0.0, 1.0), Eigen::Vector3d(1.0, 2.0, 1.0));
}

// abscissas in [-2.5, 2.5] separated by at least 0.35, charges in [0.25, 3]
inline LameSystem random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(-2.5, 2.5);
  std::uniform_real_distribution<double> ur(0.25, 3.0);
  Eigen::Vector3d a;
  for (;;) {
    for (int i = 0; i < 3; ++i) a[i] = ua(rng);
    std::sort(a.data(), a.data() + 3);
    if (a[1] - a[0] >= 0.35 && a[2] - a[1] >= 0.35) break;
  }
  Eigen::Vector3d r;
  for (int i = 0; i < 3; ++i) r[i] = ur(rng);
  return validate_system(a, r);
}

// coefficients of A S'' + B S' - mu_k x S via plain polynomial arithmetic;
// independent of the banded-matrix route
template <typename S>
VecX<S> apply_operator_reference(const LameSystem& sys, int k, const VecX<S>& coeffs) {
  const VecX<S> a = cubic_coeffs<S>(sys);
  const VecX<S> b = drift_coeffs<S>(sys);
  const S muk(mu(sys, k));
  const VecX<S> d1 = poly_derivative(coeffs);
  const VecX<S> d2 = poly_derivative(d1);
  VecX<S> term1 = poly_mul(a, d2);
  VecX<S> term2 = poly_mul(b, d1);
  VecX<S> xs = VecX<S>::Zero(coeffs.size() + 1);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) xs[i + 1] = coeffs[i];
  const Eigen::Index n = std::max({term1.size(), term2.size(), xs.size()});
  VecX<S> out = VecX<S>::Zero(n);
  for (Eigen::Index i = 0; i < term1.size(); ++i) out[i] += term1[i];
  for (Eigen::Index i = 0; i < term2.size(); ++i) out[i] += term2[i];
  for (Eigen::Index i = 0; i < xs.size(); ++i) out[i] -= muk * xs[i];
  return out;
}

}  // namespace heun::testing
