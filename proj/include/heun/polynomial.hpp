#pragma once

// Dense polynomials as Eigen vectors of coefficients in ascending powers.
// Free functions templated on the scalar so double and DDouble share one
// implementation.

#include <array>
#include <cstddef>

#include <Eigen/Core>

#include "heun/ddouble.hpp"
#include "heun/errors.hpp"

namespace heun {

template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Eigen::Index;

inline double abs(double x) { return std::abs(x); }  // scalar-generic alongside abs(DDouble)

template <typename S>
Index poly_degree(const VecX<S>& c) {
  for (Index i = c.size() - 1; i >= 0; --i)
    if (!(c[i] == S(0))) return i;
  return -1;  // zero polynomial
}

template <typename S>
S poly_eval(const VecX<S>& c, const S& x) {
  if (c.size() == 0) return S(0);
  S p = c[c.size() - 1];
  for (Index i = c.size() - 2; i >= 0; --i) p = p * x + c[i];
  return p;
}

// value, first and second derivative in one Horner pass
template <typename S>
std::array<S, 3> poly_eval012(const VecX<S>& c, const S& x) {
  if (c.size() == 0) return {S(0), S(0), S(0)};
  S p = c[c.size() - 1];
  S dp = S(0);
  S ddp = S(0);
  for (Index i = c.size() - 2; i >= 0; --i) {
    ddp = ddp * x + dp;
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp, S(2) * ddp};
}

template <typename S>
VecX<S> poly_derivative(const VecX<S>& c) {
  if (c.size() <= 1) return VecX<S>::Zero(1);
  VecX<S> d(c.size() - 1);
  for (Index i = 1; i < c.size(); ++i) d[i - 1] = S(double(i)) * c[i];
  return d;
}

template <typename S>
VecX<S> poly_mul(const VecX<S>& a, const VecX<S>& b) {
  VecX<S> r = VecX<S>::Zero(a.size() + b.size() - 1);
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// monic polynomial with the given roots
template <typename S>
VecX<S> poly_from_roots(const VecX<S>& roots) {
  VecX<S> c = VecX<S>::Zero(roots.size() + 1);
  c[0] = S(1);
  Index deg = 0;
  for (Index i = 0; i < roots.size(); ++i) {
    // multiply by (x - r): shift up and subtract r * previous
    for (Index j = deg + 1; j >= 1; --j) c[j] = c[j - 1] - roots[i] * c[j];
    c[0] = -roots[i] * c[0];
    ++deg;
  }
  return c;
}

// remainder of a mod b (degrees from actual leading terms); quotient discarded
template <typename S>
VecX<S> poly_rem(VecX<S> a, const VecX<S>& b) {
  const Index db = poly_degree(b);
  if (db < 0) raise(ErrorCode::InvalidArgument, "polynomial remainder by zero");
  Index da = poly_degree(a);
  const S lead = b[db];
  while (da >= db) {
    const S f = a[da] / lead;
    for (Index i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a[da] = S(0);  // force exact cancellation of the leading term
    --da;
    while (da >= 0 && a[da] == S(0)) --da;
  }
  if (da < 0) return VecX<S>::Zero(1);
  return a.head(da + 1).eval();
}

template <typename S>
S poly_max_abs_coeff(const VecX<S>& c) {
  S m(0);
  for (Index i = 0; i < c.size(); ++i) {
    const S a = abs(c[i]);
    if (m < a) m = a;
  }
  return m;
}

inline VecX<DDouble> to_ddouble(const VecX<double>& c) {
  VecX<DDouble> r(c.size());
  for (Index i = 0; i < c.size(); ++i) r[i] = DDouble(c[i]);
  return r;
}

inline VecX<double> to_double(const VecX<DDouble>& c) {
  VecX<double> r(c.size());
  for (Index i = 0; i < c.size(); ++i) r[i] = c[i].to_double();
  return r;
}

}  // namespace heun
