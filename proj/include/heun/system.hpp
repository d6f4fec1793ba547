#pragma once

// Problem instance: three ordered abscissas carrying positive charges, the
// cubic A(x) = prod (x - alpha_j), the quadratic drift B(x) = sum_l rho_l
// A(x)/(x - alpha_l), the coupling mu_k, and the affine conditioning map.

#include <algorithm>
#include <array>
#include <utility>

#include <Eigen/Core>

#include "heun/errors.hpp"
#include "heun/polynomial.hpp"

namespace heun {

struct LameSystem {
  Eigen::Vector3d alpha;  // strictly increasing
  Eigen::Vector3d rho;    // positive
};

inline LameSystem validate_system(const Eigen::Vector3d& alphas, const Eigen::Vector3d& rhos) {
  std::array<std::pair<double, double>, 3> pairs{
      {{alphas[0], rhos[0]}, {alphas[1], rhos[1]}, {alphas[2], rhos[2]}}};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LameSystem sys;
  for (int i = 0; i < 3; ++i) {
    sys.alpha[i] = pairs[i].first;
    sys.rho[i] = pairs[i].second;
  }
  if (sys.alpha[0] == sys.alpha[1] || sys.alpha[1] == sys.alpha[2])
    raise(ErrorCode::DuplicateAbscissa, "abscissas must be distinct");
  for (int i = 0; i < 3; ++i)
    if (!(sys.rho[i] > 0.0)) raise(ErrorCode::NonpositiveCharge, "charges must be positive");
  return sys;
}

// coupling constant for degree k: k (k - 1 + rho1 + rho2 + rho3)
inline double mu(const LameSystem& sys, int k) {
  if (k < 0) raise(ErrorCode::InvalidArgument, "degree must be nonnegative");
  return double(k) * (double(k - 1) + sys.rho.sum());
}

// ascending coefficients of A(x), leading coefficient 1
template <typename S>
VecX<S> cubic_coeffs(const LameSystem& sys) {
  const S a1(sys.alpha[0]), a2(sys.alpha[1]), a3(sys.alpha[2]);
  VecX<S> c(4);
  c[3] = S(1);
  c[2] = -(a1 + a2 + a3);
  c[1] = a1 * a2 + a1 * a3 + a2 * a3;
  c[0] = -(a1 * a2 * a3);
  return c;
}

// ascending coefficients of B(x) = sum_l rho_l prod_{m != l} (x - alpha_m)
template <typename S>
VecX<S> drift_coeffs(const LameSystem& sys) {
  const S a1(sys.alpha[0]), a2(sys.alpha[1]), a3(sys.alpha[2]);
  const S r1(sys.rho[0]), r2(sys.rho[1]), r3(sys.rho[2]);
  VecX<S> c(3);
  c[2] = r1 + r2 + r3;
  c[1] = -(r1 * (a2 + a3) + r2 * (a1 + a3) + r3 * (a1 + a2));
  c[0] = r1 * a2 * a3 + r2 * a1 * a3 + r3 * a1 * a2;
  return c;
}

// x -> scale * x + offset
struct AffineMap {
  double scale = 1.0;
  double offset = 0.0;

  double operator()(double x) const { return scale * x + offset; }
  double inverse(double x) const { return (x - offset) / scale; }
  DDouble operator()(const DDouble& x) const { return DDouble(scale) * x + DDouble(offset); }
  DDouble inverse(const DDouble& x) const { return (x - DDouble(offset)) / DDouble(scale); }
  bool is_identity() const { return scale == 1.0 && offset == 0.0; }
};

// Map sending (alpha1, alpha3) onto (-1, +1); charges are untouched and the
// middle abscissa rides along. mu_k is invariant.
inline std::pair<LameSystem, AffineMap> canonical_rescale(const LameSystem& sys) {
  if (sys.alpha[0] == -1.0 && sys.alpha[2] == 1.0)
    return {sys, AffineMap{}};
  AffineMap m;
  m.scale = 2.0 / (sys.alpha[2] - sys.alpha[0]);
  m.offset = -(sys.alpha[0] + sys.alpha[2]) / (sys.alpha[2] - sys.alpha[0]);
  LameSystem out = sys;
  out.alpha[0] = -1.0;
  out.alpha[1] = m(sys.alpha[1]);
  out.alpha[2] = 1.0;
  return {out, m};
}

// Transport a system through an arbitrary affine map (test harness utility;
// a negative scale reverses the ordering, so revalidate).
inline LameSystem mapped_system(const LameSystem& sys, const AffineMap& m) {
  Eigen::Vector3d a;
  for (int i = 0; i < 3; ++i) a[i] = m(sys.alpha[i]);
  return validate_system(a, sys.rho);
}

}  // namespace heun
