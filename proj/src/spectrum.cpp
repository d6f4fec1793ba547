#include "heun/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace heun {

namespace {

// Tridiagonal form of the operator in the basis t^r, t = x - alpha2. The
// cubic loses its constant term there, which removes the second
// superdiagonal; sub- and superdiagonal entries have a fixed sign pattern
// (sub < 0, super < 0 for r < k), so a diagonal similarity makes the matrix
// symmetric and the Van Vleck spectrum is that of a real symmetric
// tridiagonal: L c = -mu (nu - alpha2) c.
struct ShiftedTridiagonal {
  Eigen::VectorXd sub;   // L(r, r-1), r = 1..k
  Eigen::VectorXd diag;  // L(r, r)
  Eigen::VectorXd sup;   // L(r, r+1), r = 0..k-1
};

ShiftedTridiagonal shifted_tridiagonal(const LameSystem& sys, int k) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  const double r1 = sys.rho[0], r2 = sys.rho[1], r3 = sys.rho[2];
  const double e1 = a2 - a1, e3 = a3 - a2;
  const double b2 = r1 + r2 + r3;
  const double muk = mu(sys, k);
  const double at2 = e1 - e3;                                          // t^2 coeff of A(t + a2)
  const double bt1 = r1 * (a2 - a3) + r2 * (2 * a2 - a1 - a3) + r3 * (a2 - a1);  // B'(a2)
  const int n = k + 1;
  ShiftedTridiagonal t;
  t.sub.resize(n - 1);
  t.diag.resize(n);
  t.sup.resize(n - 1);
  for (int r = 0; r < n; ++r) {
    t.diag[r] = double(r) * double(r - 1) * at2 + double(r) * bt1;
    if (r >= 1) t.sub[r - 1] = double(r - 1) * (double(r - 2) + b2) - muk;
    if (r + 1 < n) t.sup[r] = -double(r + 1) * (double(r) + r2) * e1 * e3;
  }
  return t;
}

Eigen::VectorXd symmetric_tridiagonal_eigenvalues(const ShiftedTridiagonal& t) {
  const Eigen::Index n = t.diag.size();
  Eigen::VectorXd off(n - 1);
  for (Eigen::Index r = 0; r + 1 < n; ++r) {
    const double prod = t.sub[r] * t.sup[r];
    if (!(prod > 0.0))
      raise(ErrorCode::SpectrumNotReal, "tridiagonal symmetrization lost positivity");
    off[r] = std::sqrt(prod);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(t.diag, off, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    raise(ErrorCode::SpectrumNotReal, "tridiagonal eigenvalue iteration failed");
  return es.eigenvalues();
}

struct RefinedPair {
  DDouble nu;
  VecX<DDouble> coeffs;  // monic
};

// Inverse iteration on the banded operator at fixed degree; sigma = -mu nu.
// The last matrix row reads sigma off a converged vector exactly, so each
// pass updates the shift from it.
RefinedPair refine_eigenpair(const MatX<DDouble>& M, const DDouble& mu_k, double nu0) {
  const Eigen::Index n = M.rows();
  const Eigen::Index k = n - 1;
  DDouble sigma = -(mu_k * DDouble(nu0));
  VecX<DDouble> v = VecX<DDouble>::Constant(n, DDouble(1.0));
  DDouble sigma_prev = sigma;
  for (int pass = 0; pass < 4; ++pass) {
    VecX<DDouble> w = hessenberg_shifted_solve(M, sigma, v);
    DDouble wmax(0.0);
    for (Eigen::Index r = 0; r < n; ++r) {
      const DDouble a = abs(w[r]);
      if (wmax < a) wmax = a;
    }
    if (!(wmax > DDouble(0.0)))
      raise(ErrorCode::SpectrumNotReal, "inverse iteration produced a zero vector");
    for (Eigen::Index r = 0; r < n; ++r) w[r] = w[r] / wmax;
    if (abs(w[k]) > DDouble(1e-8)) {
      DDouble num = M(k, k - 1) * w[k - 1] + M(k, k) * w[k];
      sigma_prev = sigma;
      sigma = num / w[k];
    }
    v = w;
    const DDouble dsig = abs(sigma - sigma_prev);
    if (pass > 0 && dsig.to_double() <= 1e-28 * (1.0 + std::abs(sigma.to_double()))) break;
  }
  RefinedPair out;
  out.nu = -(sigma / mu_k);
  out.coeffs = v;
  const DDouble ck = v[k];
  if (ck == DDouble(0.0))
    raise(ErrorCode::SpectrumNotReal, "eigenvector has vanishing leading coefficient");
  for (Eigen::Index r = 0; r < n; ++r) out.coeffs[r] = v[r] / ck;
  out.coeffs[k] = DDouble(1.0);
  return out;
}

}  // namespace

VecX<DDouble> hessenberg_shifted_solve(const MatX<DDouble>& M, const DDouble& sigma,
                                       const VecX<DDouble>& rhs) {
  const Eigen::Index n = M.rows();
  MatX<DDouble> W = M;
  for (Eigen::Index r = 0; r < n; ++r) W(r, r) -= sigma;
  VecX<DDouble> b = rhs;
  // column bounds: row r holds entries in [r-1, ub[r]]
  std::vector<Eigen::Index> ub(n);
  for (Eigen::Index r = 0; r < n; ++r) ub[r] = std::min(n - 1, r + 2);

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (abs(W(i + 1, i)) > abs(W(i, i))) {
      const Eigen::Index hi = std::max(ub[i], ub[i + 1]);
      for (Eigen::Index c = i; c <= hi; ++c) std::swap(W(i, c), W(i + 1, c));
      std::swap(b[i], b[i + 1]);
      ub[i] = hi;
      ub[i + 1] = std::max(ub[i + 1], hi);
    }
    DDouble piv = W(i, i);
    if (piv == DDouble(0.0)) piv = DDouble(std::numeric_limits<double>::min());
    const DDouble f = W(i + 1, i) / piv;
    if (!(f == DDouble(0.0))) {
      for (Eigen::Index c = i + 1; c <= ub[i]; ++c) W(i + 1, c) -= f * W(i, c);
      ub[i + 1] = std::max(ub[i + 1], ub[i]);
      b[i + 1] -= f * b[i];
    }
    W(i + 1, i) = DDouble(0.0);
  }

  VecX<DDouble> x = VecX<DDouble>::Zero(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    DDouble s = b[r];
    for (Eigen::Index c = r + 1; c <= ub[r]; ++c) s -= W(r, c) * x[c];
    DDouble piv = W(r, r);
    if (piv == DDouble(0.0)) piv = DDouble(std::numeric_limits<double>::min());
    x[r] = s / piv;
  }
  return x;
}

VanVleckSpectrum van_vleck_spectrum(const LameSystem& sys, int k) {
  if (k < 1) raise(ErrorCode::DegreeZero, "spectrum needs degree k >= 1");
  if (k > kMaxSpectrumDegree)
    raise(ErrorCode::DegreeTooLarge, "degree exceeds the supported range (256)");

  VanVleckSpectrum spec;
  spec.k = k;
  spec.system = sys;
  auto [csys, map] = canonical_rescale(sys);
  spec.canonical = csys;
  spec.to_canonical = map;
  spec.mu = mu(sys, k);

  const auto tri = shifted_tridiagonal(csys, k);
  const Eigen::VectorXd lambdas = symmetric_tridiagonal_eigenvalues(tri);
  const int n = k + 1;
  Eigen::VectorXd nus0(n);
  for (int i = 0; i < n; ++i) nus0[i] = csys.alpha[1] - lambdas[i] / spec.mu;
  std::sort(nus0.data(), nus0.data() + n);

  const MatX<DDouble> M = build_operator_matrix<DDouble>(csys, k);
  const DDouble mu_dd = DDouble(double(k)) * (DDouble(double(k - 1)) + (DDouble(csys.rho[0]) + DDouble(csys.rho[1]) + DDouble(csys.rho[2])));

  spec.nus.resize(n);
  spec.nus_dd.resize(n);
  spec.coeffs.resize(n, n);
  for (int j = 0; j < n; ++j) {
    RefinedPair pair = refine_eigenpair(M, mu_dd, nus0[j]);
    spec.nus[j] = pair.nu.to_double();
    spec.nus_dd[j] = pair.nu;
    spec.coeffs.col(j) = pair.coeffs;
  }

  for (int j = 0; j + 1 < n; ++j)
    if (!(spec.nus[j] < spec.nus[j + 1]))
      raise(ErrorCode::SpectrumNotReal, "Van Vleck zeros failed strict ordering");
  if (!(spec.nus[0] > csys.alpha[0] && spec.nus[n - 1] < csys.alpha[2]))
    raise(ErrorCode::SpectrumNotReal, "Van Vleck zeros escaped (alpha1, alpha3)");
  return spec;
}

double van_vleck_from_zeros(const Eigen::VectorXd& zeros, const LameSystem& sys) {
  const int k = int(zeros.size());
  if (k < 1) raise(ErrorCode::DegreeZero, "need at least one zero");
  const VecX<DDouble> a = cubic_coeffs<DDouble>(sys);
  const VecX<DDouble> b = drift_coeffs<DDouble>(sys);
  const DDouble muk(mu(sys, k));
  DDouble ckm1(0.0);
  for (int i = 0; i < k; ++i) ckm1 -= DDouble(zeros[i]);
  const DDouble sub = DDouble(double(k - 1)) * (DDouble(double(k - 2)) + b[2]) - muk;
  const DDouble diag = DDouble(double(k)) * DDouble(double(k - 1)) * a[2] + DDouble(double(k)) * b[1];
  return (-(sub * ckm1 + diag) / muk).to_double();
}

double ode_residual_scaled(const LameSystem& sys, int k, double nu,
                           const Eigen::VectorXd& coeffs) {
  const VecX<DDouble> c = to_ddouble(coeffs);
  const VecX<DDouble> a = cubic_coeffs<DDouble>(sys);
  const VecX<DDouble> b = drift_coeffs<DDouble>(sys);
  const DDouble muk(mu(sys, k));
  const DDouble nud(nu);

  double max_resid = 0.0;
  double max_s = 0.0;
  const int npts = 64;
  for (int i = 0; i < npts; ++i) {
    const double t = std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * npts));
    const double x = 0.5 * (sys.alpha[0] + sys.alpha[2]) + 0.5 * (sys.alpha[2] - sys.alpha[0]) * t;
    const DDouble xd(x);
    const auto s = poly_eval012(c, xd);
    const DDouble av = poly_eval(a, xd);
    const DDouble bv = poly_eval(b, xd);
    const DDouble resid = av * s[2] + bv * s[1] - muk * (xd - nud) * s[0];
    max_resid = std::max(max_resid, std::abs(resid.to_double()));
    max_s = std::max(max_s, std::abs(s[0].to_double()));
  }
  return max_resid / (1.0 + max_s);
}

}  // namespace heun
