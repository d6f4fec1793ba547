#pragma once

// Executable strict-inequality predicates for the counting and interlacing
// facts, with witnesses. Two values closer than 1e3 ulps of the local scale
// count as equal, which makes a predicate fail rather than silently pass:
// the statements are strict, so collapse signals numerical error upstream.

#include <string>
#include <vector>

#include "heun/spectrum.hpp"
#include "heun/system.hpp"
#include "heun/zeros.hpp"

namespace heun {

struct InterlacingReport {
  std::string claim;
  int k = -1;
  int j = -1;
  int i = -1;
  bool holds = false;
  double min_margin_ulps = 0.0;   // smallest strict margin encountered, in ulps
  std::vector<double> witnesses;  // the ordered values the verdict hinges on
  std::string note;
};

// margin of b > a in ulps of the local scale; negative when out of order
double strict_margin_ulps(double a, double b, double scale_floor = 1e-3);

// left count j-1, right count k-j+1, and no zeros between alpha2 and nu
InterlacingReport check_zero_counts(const StieltjesSolution& sol);

// same degree, adjacent labels: merged zeros alternate starting with S_{j+1}
InterlacingReport check_same_degree(const StieltjesSolution& a, const StieltjesSolution& b);

// degrees k and k+1: interlace iff i = j or i = j+1; checks both directions
InterlacingReport check_cross_degree(const StieltjesSolution& sol_k,
                                     const StieltjesSolution& sol_k1);

// alpha1 < nu_1^(k+1) < nu_1^(k) < nu_2^(k+1) < ... < nu_{k+1}^(k) < nu_{k+2}^(k+1) < alpha3
InterlacingReport check_van_vleck_chain(const VanVleckSpectrum& spec_k,
                                        const VanVleckSpectrum& spec_k1);

// nu_hat_i = (mu_{k+1} nu_i^(k+1) - mu_k nu_j^(k)) / (mu_{k+1} - mu_k);
// alpha1 < nu_hat_j < alpha2 and alpha2 < nu_hat_{j+1} < alpha3
InterlacingReport check_nu_hat_bounds(const VanVleckSpectrum& spec_k,
                                      const VanVleckSpectrum& spec_k1, int j);

// d/dx[ J (S_b' S_a - S_b S_a') ] = Q S_a S_b with J = prod |x-alpha_l|^rho_l
// and Q = (nu_a - nu_b) J / A, tested by finite differences on a grid that
// avoids the singular points; also checks sign(Q) on both subintervals
InterlacingReport check_wronskian_identity(const StieltjesSolution& a,
                                           const StieltjesSolution& b, const LameSystem& sys);

// l > j: between two zeros of S_j in (alpha1, alpha2) lies a zero of S_l;
// between two zeros of S_l in (alpha2, alpha3) lies a zero of S_j
InterlacingReport check_zero_nesting(const StieltjesSolution& sol_j,
                                     const StieltjesSolution& sol_l);

}  // namespace heun
