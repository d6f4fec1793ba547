#include "heun/orthogonality.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "heun/asymptotics.hpp"
#include "heun/quadrature.hpp"
#include "heun/spectrum.hpp"

namespace heun {

double product_orthogonality_integral_coeffs(const LameSystem& sys, const Eigen::VectorXd& pn,
                                             const Eigen::VectorXd& pm, int n_nodes) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  const double r1 = sys.rho[0], r2 = sys.rho[1], r3 = sys.rho[2];

  // x1 on (a1,a2): weight (x1-a1)^{r1-1} (a2-x1)^{r2-1}, smooth |x1-a3|^{r3-1}
  // x2 on (a2,a3): weight (x2-a2)^{r2-1} (a3-x2)^{r3-1}, smooth |x2-a1|^{r1-1}
  // the (x2 - x1) factor splits the tensor sum into two rank-one pieces
  const JacobiRule rule1 = jacobi_rule(a1, a2, r1 - 1.0, r2 - 1.0, n_nodes);
  const JacobiRule rule2 = jacobi_rule(a2, a3, r2 - 1.0, r3 - 1.0, n_nodes);

  double su = 0.0, sux = 0.0, sv = 0.0, svx = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double x = rule1.nodes[i];
    const double g = poly_eval(to_ddouble(pn), DDouble(x)).to_double() *
                     poly_eval(to_ddouble(pm), DDouble(x)).to_double() *
                     std::pow(a3 - x, r3 - 1.0);
    const double t = rule1.weights[i] * g;
    su += t;
    sux += t * x;
  }
  for (int i = 0; i < n_nodes; ++i) {
    const double x = rule2.nodes[i];
    const double g = poly_eval(to_ddouble(pn), DDouble(x)).to_double() *
                     poly_eval(to_ddouble(pm), DDouble(x)).to_double() *
                     std::pow(x - a1, r1 - 1.0);
    const double t = rule2.weights[i] * g;
    sv += t;
    svx += t * x;
  }
  return su * svx - sux * sv;
}

double product_orthogonality_integral(const LameSystem& sys, const StieltjesSolution& sol_n,
                                      const StieltjesSolution& sol_m, int n_nodes) {
  return product_orthogonality_integral_coeffs(sys, sol_n.coeffs, sol_m.coeffs, n_nodes);
}

RecurrenceFit recurrence_fit(const std::vector<Eigen::VectorXd>& seq, int n) {
  if (n < 2 || size_t(n) >= seq.size())
    raise(ErrorCode::ShortSequence, "fit at n needs entries n-2, n-1, n");
  for (int d = n - 2; d <= n; ++d) {
    const auto& p = seq[d];
    if (p.size() != d + 1 || p[d] != 1.0)
      raise(ErrorCode::ShortSequence, "sequence entries must be monic of full degree");
  }
  const Eigen::VectorXd& pn = seq[n];
  const Eigen::VectorXd& p1 = seq[n - 1];
  const Eigen::VectorXd& p2 = seq[n - 2];

  // residual(a, b) = pn - x p1 + a p1 + b p2, linear least squares in (a, b)
  Eigen::VectorXd t = Eigen::VectorXd::Zero(n + 1);
  for (int i = 0; i <= n - 1; ++i) t[i + 1] = p1[i];  // x * p1
  Eigen::VectorXd rhs = t - pn;
  Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(n + 1, 2);
  cols.col(0).head(n) = p1;
  cols.col(1).head(n - 1) = p2;
  const Eigen::Vector2d ab = cols.colPivHouseholderQr().solve(rhs);

  RecurrenceFit fit;
  fit.n = n;
  fit.a_n = ab[0];
  fit.b_n = ab[1];
  fit.residual_norm = (pn - t + ab[0] * cols.col(0) + ab[1] * cols.col(1)).norm();
  return fit;
}

std::vector<Eigen::VectorXd> chebyshev_monic_sequence(int n_max) {
  std::vector<Eigen::VectorXd> seq;
  seq.push_back(Eigen::VectorXd::Ones(1));
  if (n_max >= 1) {
    Eigen::VectorXd p1 = Eigen::VectorXd::Zero(2);
    p1[1] = 1.0;
    seq.push_back(p1);
  }
  for (int n = 2; n <= n_max; ++n) {
    const double bn = (n == 2) ? 0.5 : 0.25;
    Eigen::VectorXd p = Eigen::VectorXd::Zero(n + 1);
    for (int i = 0; i < n; ++i) p[i + 1] += seq[n - 1][i];  // x * t_{n-1}
    for (int i = 0; i <= n - 2; ++i) p[i] -= bn * seq[n - 2][i];
    seq.push_back(p);
  }
  return seq;
}

std::vector<Eigen::VectorXd> stieltjes_sequence(const LameSystem& sys, double theta, int n_max) {
  std::vector<Eigen::VectorXd> seq;
  seq.push_back(Eigen::VectorXd::Ones(1));
  for (int k = 1; k <= n_max; ++k) {
    const int jk = jk_sequence(theta, k);
    const VanVleckSpectrum spec = van_vleck_spectrum(sys, k);
    const auto sols = label_solutions(spec);
    seq.push_back(sols[jk - 1].coeffs);
  }
  return seq;
}

OrthogonalityReport orthogonality_report(const LameSystem& sys, double theta, int n_max) {
  if (n_max < 4) raise(ErrorCode::ShortSequence, "report needs N >= 4");
  OrthogonalityReport rep;
  rep.theta = theta;
  const auto seq = stieltjes_sequence(sys, theta, n_max);

  for (int n = 2; n <= n_max; ++n) {
    rep.fits.push_back(recurrence_fit(seq, n));
    rep.max_residual = std::max(rep.max_residual, rep.fits.back().residual_norm);
  }

  rep.normalized_integrals = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  Eigen::VectorXd diag(n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    diag[n] = product_orthogonality_integral_coeffs(sys, seq[n], seq[n], 128);
  for (int n = 1; n <= n_max; ++n)
    for (int m = n + 1; m <= n_max; ++m) {
      const double inm = product_orthogonality_integral_coeffs(sys, seq[n], seq[m], 128);
      const double norm = std::abs(inm) / std::sqrt(diag[n] * diag[m]);
      rep.normalized_integrals(n, m) = norm;
      rep.max_offdiagonal = std::max(rep.max_offdiagonal, norm);
    }
  return rep;
}

}  // namespace heun
