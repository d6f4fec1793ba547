#pragma once

// Gauss-Jacobi rules for weights (x-a)^p (b-x)^q, p,q > -1, built from the
// symmetric tridiagonal recurrence eigenproblem (Golub-Welsch). Reference
// rules on (-1,1) are cached per (p,q,n) and mapped affinely on request.

#include <functional>

#include <Eigen/Core>

#include "heun/errors.hpp"

namespace heun {

struct JacobiRule {
  double a = -1.0, b = 1.0;
  double p = 0.0, q = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

JacobiRule jacobi_rule(double a, double b, double p, double q, int n);

// integral of (x-a)^p (b-x)^q f(x) over (a,b); f is the smooth factor only
double integrate_singular(const std::function<double(double)>& f_smooth, double a, double b,
                          double p, double q, int n);

// node-doubling until |I_{2n} - I_n| <= rel |I_{2n}| + abs_floor (n capped)
double integrate_adaptive(const std::function<double(double)>& f_smooth, double a, double b,
                          double p, double q, int n0 = 64, double rel = 1e-11,
                          double abs_floor = 0.0, int n_max = 2048);

}  // namespace heun
