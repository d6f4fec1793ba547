#pragma once

// Double-double scalar: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving ~31 decimal digits. Used where monomial-basis coefficient work
// outruns double precision (eigenvector refinement, Sturm chains, root
// polishing). Algorithms are the classical Dekker/Knuth error-free
// transformations; products use std::fma.

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

#include <Eigen/Core>

namespace heun {

namespace detail {

struct TwoSum {
  double s;
  double e;
};

inline TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| (or a == 0)
inline TwoSum quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoSum two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

class DDouble {
 public:
  DDouble() = default;
  DDouble(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design
  DDouble(int x) : hi_(x), lo_(0.0) {}     // NOLINT
  DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  double hi() const { return hi_; }
  double lo() const { return lo_; }
  double to_double() const { return hi_ + lo_; }

  DDouble operator-() const { return {-hi_, -lo_}; }

  friend DDouble operator+(const DDouble& a, const DDouble& b) {
    auto s = detail::two_sum(a.hi_, b.hi_);
    auto t = detail::two_sum(a.lo_, b.lo_);
    s.e += t.s;
    s = detail::quick_two_sum(s.s, s.e);
    s.e += t.e;
    s = detail::quick_two_sum(s.s, s.e);
    return {s.s, s.e};
  }
  friend DDouble operator-(const DDouble& a, const DDouble& b) { return a + (-b); }
  friend DDouble operator*(const DDouble& a, const DDouble& b) {
    auto p = detail::two_prod(a.hi_, b.hi_);
    p.e += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = detail::quick_two_sum(p.s, p.e);
    return {p.s, p.e};
  }
  friend DDouble operator/(const DDouble& a, const DDouble& b) {
    const double q1 = a.hi_ / b.hi_;
    DDouble r = a - DDouble(q1) * b;
    const double q2 = r.hi_ / b.hi_;
    r = r - DDouble(q2) * b;
    const double q3 = r.hi_ / b.hi_;
    auto s = detail::quick_two_sum(q1, q2);
    s.e += q3;
    s = detail::quick_two_sum(s.s, s.e);
    return {s.s, s.e};
  }

  DDouble& operator+=(const DDouble& b) { return *this = *this + b; }
  DDouble& operator-=(const DDouble& b) { return *this = *this - b; }
  DDouble& operator*=(const DDouble& b) { return *this = *this * b; }
  DDouble& operator/=(const DDouble& b) { return *this = *this / b; }

  friend bool operator==(const DDouble& a, const DDouble& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend bool operator!=(const DDouble& a, const DDouble& b) { return !(a == b); }
  friend bool operator<(const DDouble& a, const DDouble& b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const DDouble& a, const DDouble& b) { return b < a; }
  friend bool operator<=(const DDouble& a, const DDouble& b) { return !(b < a); }
  friend bool operator>=(const DDouble& a, const DDouble& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const DDouble& x) {
    return os << x.to_double();
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DDouble abs(const DDouble& x) {
  return (x.hi() < 0.0 || (x.hi() == 0.0 && x.lo() < 0.0)) ? -x : x;
}

inline DDouble sqrt(const DDouble& a) {
  if (a.hi() == 0.0 && a.lo() == 0.0) return DDouble(0.0);
  const double x = 1.0 / std::sqrt(a.hi());
  const double ax = a.hi() * x;
  const DDouble err = a - DDouble(ax) * DDouble(ax);
  auto s = detail::quick_two_sum(ax, err.hi() * (x * 0.5));
  return {s.s, s.e};
}

inline bool isfinite(const DDouble& x) { return std::isfinite(x.hi()); }
inline double to_double(const DDouble& x) { return x.to_double(); }

}  // namespace heun

namespace std {

template <>
struct numeric_limits<heun::DDouble> {
  static constexpr bool is_specialized = true;
  static constexpr bool is_signed = true;
  static constexpr bool is_integer = false;
  static constexpr bool is_exact = false;
  static constexpr int digits = 104;
  static constexpr int digits10 = 31;
  static constexpr int radix = 2;
  static heun::DDouble epsilon() { return {0x1p-104, 0.0}; }
  static heun::DDouble round_error() { return {0.5, 0.0}; }
  static heun::DDouble min() { return {std::numeric_limits<double>::min(), 0.0}; }
  static heun::DDouble max() { return {std::numeric_limits<double>::max(), 0.0}; }
  static heun::DDouble lowest() { return {-std::numeric_limits<double>::max(), 0.0}; }
  static heun::DDouble quiet_NaN() { return {std::numeric_limits<double>::quiet_NaN(), 0.0}; }
  static heun::DDouble infinity() { return {std::numeric_limits<double>::infinity(), 0.0}; }
};

}  // namespace std

namespace Eigen {

template <>
struct NumTraits<heun::DDouble> : GenericNumTraits<heun::DDouble> {
  typedef heun::DDouble Real;
  typedef heun::DDouble NonInteger;
  typedef heun::DDouble Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 12
  };
  static inline Real epsilon() { return std::numeric_limits<heun::DDouble>::epsilon(); }
  static inline Real dummy_precision() { return {1e-28, 0.0}; }
  static inline Real highest() { return std::numeric_limits<heun::DDouble>::max(); }
  static inline Real lowest() { return std::numeric_limits<heun::DDouble>::lowest(); }
  static inline int digits10() { return std::numeric_limits<heun::DDouble>::digits10; }
};

}  // namespace Eigen
