#pragma once

// Numerical counterparts of the orthogonality analysis: the two-variable
// product weight
//   mu(x1,x2) = prod_j prod_k |x_k - alpha_j|^{rho_j - 1} (x2 - x1)
// on (alpha1,alpha2) x (alpha2,alpha3) annihilates products of Stieltjes
// polynomials of different degrees, while no single-variable three-term
// recurrence p_n = (x - a_n) p_{n-1} - b_n p_{n-2} fits any Stieltjes
// sequence. The fit is least squares in coefficient space, which is
// measure-free: if no (a, b) zeroes the polynomial identity, no measure can.

#include <vector>

#include <Eigen/Core>

#include "heun/errors.hpp"
#include "heun/system.hpp"
#include "heun/zeros.hpp"

namespace heun {

struct RecurrenceFit {
  int n = 0;
  double a_n = 0.0;
  double b_n = 0.0;
  double residual_norm = 0.0;  // Euclidean norm of S_n - (x - a_n) S_{n-1} + b_n S_{n-2}
};

// integral of S^(n)(x1) S^(n)(x2) S^(m)(x1) S^(m)(x2) mu(x1,x2) over the
// rectangle, by tensor Gauss-Jacobi with n_nodes points per direction
double product_orthogonality_integral(const LameSystem& sys, const StieltjesSolution& sol_n,
                                      const StieltjesSolution& sol_m, int n_nodes = 128);

// same, on raw monic coefficient vectors in the system frame
double product_orthogonality_integral_coeffs(const LameSystem& sys, const Eigen::VectorXd& pn,
                                             const Eigen::VectorXd& pm, int n_nodes = 128);

// least-squares (a, b) for seq[n] ~ (x - a) seq[n-1] - b seq[n-2]
RecurrenceFit recurrence_fit(const std::vector<Eigen::VectorXd>& seq, int n);

// monic Chebyshev sequence on (-1,1): control case with an exact recurrence
std::vector<Eigen::VectorXd> chebyshev_monic_sequence(int n_max);

// monic Stieltjes sequence S_0 = 1, S_k = S_{j_k}^{(k)} with j_k = ceil(k theta + 1)
std::vector<Eigen::VectorXd> stieltjes_sequence(const LameSystem& sys, double theta, int n_max);

struct OrthogonalityReport {
  double theta = 0.0;
  std::vector<RecurrenceFit> fits;            // n = 2..N
  Eigen::MatrixXd normalized_integrals;       // |I(n,m)| / sqrt(I(n,n) I(m,m)), 1-based degrees
  double max_offdiagonal = 0.0;
  double max_residual = 0.0;
};

OrthogonalityReport orthogonality_report(const LameSystem& sys, double theta, int n_max);

}  // namespace heun
