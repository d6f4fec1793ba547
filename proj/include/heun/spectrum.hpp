#pragma once

// Degree-k polynomial solutions: the k+1 Van Vleck zeros nu_1 < ... < nu_{k+1}
// and one monic coefficient vector per nu. The operator
//   T[S] = A S'' + B S' - mu_k x S
// acts on ascending monomial coefficients as a banded matrix with one
// subdiagonal and two superdiagonals; T[S] = -mu_k nu S is the eigenproblem.
// Eigenvalues are computed from an equivalent symmetrized tridiagonal form
// (monomials shifted to powers of x - alpha_2), eigenvectors by inverse
// iteration on the banded operator in double-double arithmetic.

#include <vector>

#include <Eigen/Core>

#include "heun/ddouble.hpp"
#include "heun/errors.hpp"
#include "heun/polynomial.hpp"
#include "heun/system.hpp"

namespace heun {

inline constexpr int kMaxSpectrumDegree = 256;

struct BandedOperator {
  Eigen::Index order = 0;  // k+1
  Eigen::MatrixXd m;       // dense storage; entries outside the band are zero
};

template <typename S>
MatX<S> build_operator_matrix(const LameSystem& sys, int k) {
  if (k < 1) raise(ErrorCode::DegreeZero, "operator needs degree k >= 1");
  const VecX<S> a = cubic_coeffs<S>(sys);
  const VecX<S> b = drift_coeffs<S>(sys);
  const S muk(mu(sys, k));
  const Eigen::Index n = k + 1;
  MatX<S> M = MatX<S>::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const S rr(double(r));
    if (r >= 1) M(r, r - 1) = S(double(r - 1)) * (S(double(r - 2)) + b[2]) - muk;
    M(r, r) = rr * S(double(r - 1)) * a[2] + rr * b[1];
    if (r + 1 < n) M(r, r + 1) = S(double(r + 1)) * (rr * a[1] + b[0]);
    if (r + 2 < n) M(r, r + 2) = S(double(r + 2)) * S(double(r + 1)) * a[0];
  }
  return M;
}

inline BandedOperator build_operator(const LameSystem& sys, int k) {
  return BandedOperator{k + 1, build_operator_matrix<double>(sys, k)};
}

struct VanVleckSpectrum {
  int k = 0;
  double mu = 0.0;
  LameSystem system;            // original frame
  LameSystem canonical;         // alpha mapped onto (-1, alpha2', +1)
  AffineMap to_canonical;       // original -> canonical
  Eigen::VectorXd nus;          // canonical frame, strictly increasing
  std::vector<DDouble> nus_dd;  // same values at working precision
  MatX<DDouble> coeffs;         // column j: monic ascending coefficients of S_{j+1}, canonical frame

  double nu_original(Eigen::Index j) const { return to_canonical.inverse(nus[j]); }
  Eigen::VectorXd nus_original() const {
    Eigen::VectorXd out(nus.size());
    for (Eigen::Index j = 0; j < nus.size(); ++j) out[j] = nu_original(j);
    return out;
  }
  Eigen::MatrixXd coeffs_double() const {
    Eigen::MatrixXd out(coeffs.rows(), coeffs.cols());
    for (Eigen::Index c = 0; c < coeffs.cols(); ++c)
      for (Eigen::Index r = 0; r < coeffs.rows(); ++r) out(r, c) = coeffs(r, c).to_double();
    return out;
  }
};

VanVleckSpectrum van_vleck_spectrum(const LameSystem& sys, int k);

// nu forced by the top coefficient row once the zeros (hence c_{k-1}) are
// known; zeros are in the same frame as the given system.
double van_vleck_from_zeros(const Eigen::VectorXd& zeros, const LameSystem& sys);

// max over 64 Chebyshev points of |A S'' + B S' - mu (x - nu) S| / (1 + max|S|),
// everything in the frame of the given system
double ode_residual_scaled(const LameSystem& sys, int k, double nu, const Eigen::VectorXd& coeffs);

// Solve (M - sigma I) x = rhs for banded upper-Hessenberg M (band as built
// above) by adjacent-row pivoting; double-double throughout.
VecX<DDouble> hessenberg_shifted_solve(const MatX<DDouble>& M, const DDouble& sigma,
                                       const VecX<DDouble>& rhs);

}  // namespace heun
