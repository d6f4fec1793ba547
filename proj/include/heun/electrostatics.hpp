#pragma once

// Independent route to the Stieltjes zeros: k unit charges in the field of
// the three fixed charges, in a logarithmic potential. At a zero set of a
// Stieltjes polynomial the force on every charge vanishes:
//   F_i = sum_{j != i} 2/(x_i - x_j) + sum_l rho_l/(x_i - alpha_l) = 0,
// which is the ODE evaluated at a zero of S. The energy
//   W = -sum_{i<j} 2 log|x_i - x_j| - sum_i sum_l rho_l log|x_i - alpha_l|
// has gradient -F and is strictly convex on each ordered sector, so damped
// Newton with box constraints finds the unique sector equilibrium.

#include <Eigen/Core>

#include "heun/errors.hpp"
#include "heun/system.hpp"

namespace heun {

struct ChargeConfiguration {
  Eigen::VectorXd positions;  // sorted, in (alpha1, alpha3) \ {alpha2}
  int sector = 0;             // number of positions in (alpha1, alpha2)
};

Eigen::VectorXd equilibrium_residual(const ChargeConfiguration& config, const LameSystem& sys);

double energy(const ChargeConfiguration& config, const LameSystem& sys);

Eigen::MatrixXd energy_hessian(const ChargeConfiguration& config, const LameSystem& sys);

struct SectorSolveOptions {
  int max_iterations = 200;
  double tolerance = 0.0;  // 0: pick from the problem scale
};

ChargeConfiguration solve_sector(const LameSystem& sys, int k, int m,
                                 const SectorSolveOptions& opts = {});

}  // namespace heun
