#pragma once

// Real zeros of Stieltjes polynomials with certified per-interval counts.
// Isolation is by Sturm-sequence sign counts under recursive bisection, each
// bracket polished by safeguarded Newton. Chains are normalized at every
// Euclidean step and run in double-double: monomial coefficients of
// polynomials with all zeros in (-1,1) lose ~k bits to cancellation, which
// exhausts plain double near degree 50.

#include <vector>

#include <Eigen/Core>

#include "heun/ddouble.hpp"
#include "heun/errors.hpp"
#include "heun/polynomial.hpp"
#include "heun/spectrum.hpp"
#include "heun/system.hpp"

namespace heun {

class SturmChain {
 public:
  explicit SturmChain(const VecX<DDouble>& coeffs);

  int sign_changes(const DDouble& x) const;
  // number of roots in the open interval (a, b); endpoints must not be roots
  int count_open(const DDouble& a, const DDouble& b) const;
  const std::vector<VecX<DDouble>>& sequence() const { return seq_; }

 private:
  std::vector<VecX<DDouble>> seq_;
};

// all real zeros of a monic degree-k polynomial known to have k simple roots
// in (lo, hi); throws CountMismatch when the Sturm count disagrees
VecX<DDouble> isolate_zeros_certified(const VecX<DDouble>& coeffs, double lo, double hi);

// spec surface: zeros of an eigenvector polynomial over (alpha1, alpha3)
Eigen::VectorXd isolate_zeros(const Eigen::VectorXd& coeffs, const LameSystem& sys);

struct StieltjesSolution {
  int k = 0;
  int j = 0;  // 1-based label, ordered by nu
  double nu = 0.0;
  Eigen::VectorXd coeffs;  // monic, ascending, original frame
  Eigen::VectorXd zeros;   // sorted, original frame
  int left_count = 0;      // zeros in (alpha1, alpha2)
  int right_count = 0;     // zeros in (alpha2, alpha3)
  LameSystem system;
};

// pair each nu with its zeros and certify the count and gap facts:
// left count j-1, right count k-j+1, and no zeros between alpha2 and nu
std::vector<StieltjesSolution> label_solutions(const VanVleckSpectrum& spec);

}  // namespace heun
