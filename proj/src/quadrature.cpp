#include "heun/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace heun {

namespace {

struct ReferenceRule {
  Eigen::VectorXd nodes;    // on (-1, 1)
  Eigen::VectorXd weights;  // for weight (1+t)^p (1-t)^q
};

// monic Jacobi recurrence for weight (1-t)^A (1+t)^B on (-1,1); here A = q, B = p
ReferenceRule build_reference(double p, double q, int n) {
  const double A = q, B = p;
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      diag[i] = (B - A) / (A + B + 2.0);
    else {
      const double t = 2.0 * i + A + B;
      diag[i] = (B * B - A * A) / (t * (t + 2.0));
    }
  }
  for (int i = 1; i < n; ++i) {
    double e;
    if (i == 1)
      e = 4.0 * (A + 1.0) * (B + 1.0) / ((A + B + 2.0) * (A + B + 2.0) * (A + B + 3.0));
    else {
      const double t = 2.0 * i + A + B;
      e = 4.0 * i * (i + A) * (i + B) * (i + A + B) / (t * t * (t + 1.0) * (t - 1.0));
    }
    off[i - 1] = std::sqrt(e);
  }
  const double mass =
      std::pow(2.0, A + B + 1.0) *
      std::exp(std::lgamma(A + 1.0) + std::lgamma(B + 1.0) - std::lgamma(A + B + 2.0));

  ReferenceRule rule;
  if (n == 1) {
    rule.nodes = Eigen::VectorXd::Constant(1, diag[0]);
    rule.weights = Eigen::VectorXd::Constant(1, mass);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    raise(ErrorCode::NoConvergence, "Jacobi recurrence eigenproblem failed");
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double q1 = es.eigenvectors()(0, i);
    rule.weights[i] = mass * q1 * q1;
  }
  return rule;
}

const ReferenceRule& cached_reference(double p, double q, int n) {
  static std::map<std::tuple<double, double, int>, ReferenceRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(p, q, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_reference(p, q, n)).first;
  return it->second;
}

}  // namespace

JacobiRule jacobi_rule(double a, double b, double p, double q, int n) {
  if (!(p > -1.0) || !(q > -1.0))
    raise(ErrorCode::BadExponent, "Jacobi exponents must exceed -1");
  if (n < 1) raise(ErrorCode::InvalidArgument, "rule needs at least one node");
  if (!(a < b)) raise(ErrorCode::InvalidArgument, "interval must satisfy a < b");

  const ReferenceRule& ref = cached_reference(p, q, n);
  JacobiRule rule;
  rule.a = a;
  rule.b = b;
  rule.p = p;
  rule.q = q;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double wscale = std::pow(half, p + q + 1.0);
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * ref.nodes[i];
    rule.weights[i] = wscale * ref.weights[i];
  }
  return rule;
}

double integrate_singular(const std::function<double(double)>& f_smooth, double a, double b,
                          double p, double q, int n) {
  const JacobiRule rule = jacobi_rule(a, b, p, q, n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += rule.weights[i] * f_smooth(rule.nodes[i]);
  return s;
}

double integrate_adaptive(const std::function<double(double)>& f_smooth, double a, double b,
                          double p, double q, int n0, double rel, double abs_floor, int n_max) {
  int n = n0;
  double prev = integrate_singular(f_smooth, a, b, p, q, n);
  while (n < n_max) {
    n *= 2;
    const double cur = integrate_singular(f_smooth, a, b, p, q, n);
    if (std::abs(cur - prev) <= rel * std::abs(cur) + abs_floor) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace heun
