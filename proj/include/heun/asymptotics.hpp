#pragma once

// Limit densities of Van Vleck and Stieltjes zeros, the theta <-> nu
// correspondence, the critical proportion theta_c, and empirical-vs-limit
// comparison by Kolmogorov-Smirnov distance. Only the abscissas enter; the
// charges drop out in the limit.
//
//   rho_V(x) = (1/2pi) int ds / sqrt|A(s)(x-s)| over the opposite subinterval
//   rho_S(x) = (1/pi) sqrt|(nu-x)/A(x)| off the interval I bounded by
//              alpha2 and nu, 0 on I
//   (1/pi) int_{alpha1}^{min(alpha2,nu)} sqrt|(nu-x)/A(x)| dx = theta
//
// Radicands are taken as absolute values and their positivity on the
// integration domain is asserted. Integrals factor endpoint singularities
// into Gauss-Jacobi weights; when a singular partner sits just outside the
// integration range (x or nu near alpha2) that pair is absorbed by the
// substitution s - alpha2 = u sinh^2(psi), which turns the integrand smooth.

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "heun/errors.hpp"
#include "heun/quadrature.hpp"
#include "heun/system.hpp"

namespace heun {

double theta_c(const LameSystem& sys);

double rho_V(const LameSystem& sys, double x);

double rho_S(const LameSystem& sys, double nu, double x);

double theta_from_nu(const LameSystem& sys, double nu);

double nu_from_theta(const LameSystem& sys, double theta);

// j_k = ceil(k theta + 1), clamped to [1, k+1]
int jk_sequence(double theta, int k);

class DensityModel {
 public:
  enum class Kind { VanVleck, Stieltjes };

  static DensityModel van_vleck(const LameSystem& sys);
  static DensityModel stieltjes(const LameSystem& sys, double nu);

  double pdf(double x) const;
  double cdf(double x) const;
  double mass() const { return mass_; }
  Kind kind() const { return kind_; }
  double nu() const { return nu_; }
  const LameSystem& system() const { return sys_; }
  std::vector<std::pair<double, double>> support() const;

 private:
  struct Component {
    double c = 0.0, d = 0.0;
    double base = 0.0;             // model mass strictly below c
    std::vector<double> cum;       // cumulative mass at tau_i = i/N
    std::vector<double> slope;     // monotone cubic slopes in tau
  };

  DensityModel(Kind kind, const LameSystem& sys, double nu);
  void build_tables();

  Kind kind_;
  LameSystem sys_;
  double nu_ = 0.0;
  double mass_ = 0.0;
  std::vector<Component> comps_;
};

double ks_distance(const Eigen::VectorXd& samples, const DensityModel& model);

}  // namespace heun
