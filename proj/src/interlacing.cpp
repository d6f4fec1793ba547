#include "heun/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heun {

namespace {

constexpr double kStrictUlps = 1e3;

struct ChainCheck {
  bool ok = true;
  double min_ulps = std::numeric_limits<double>::infinity();
};

ChainCheck strict_chain(const std::vector<double>& v) {
  ChainCheck c;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    const double m = strict_margin_ulps(v[i], v[i + 1]);
    c.min_ulps = std::min(c.min_ulps, m);
    if (m < kStrictUlps) c.ok = false;
  }
  return c;
}

// merge two sorted sequences, tagging sources; true alternation b a b a ... a b
// means: starts with b, strictly alternates, ends with b (sizes |b| = |a|+1),
// or for equal sizes starts with b and ends with a.
std::vector<std::pair<double, int>> tagged_merge(const Eigen::VectorXd& a,
                                                 const Eigen::VectorXd& b) {
  std::vector<std::pair<double, int>> m;
  for (Eigen::Index i = 0; i < a.size(); ++i) m.push_back({a[i], 0});
  for (Eigen::Index i = 0; i < b.size(); ++i) m.push_back({b[i], 1});
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

double strict_margin_ulps(double a, double b, double scale_floor) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max({std::abs(a), std::abs(b), scale_floor});
  return (b - a) / (eps * scale);
}

InterlacingReport check_zero_counts(const StieltjesSolution& sol) {
  InterlacingReport rep;
  rep.claim = "zero_counts";
  rep.k = sol.k;
  rep.j = sol.j;
  const double a2 = sol.system.alpha[1];

  int left = 0, right = 0;
  double min_ulps = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < sol.zeros.size(); ++i) {
    const double z = sol.zeros[i];
    const double m = std::abs(strict_margin_ulps(std::min(z, a2), std::max(z, a2)));
    min_ulps = std::min(min_ulps, m);
    if (z < a2) ++left;
    if (z > a2) ++right;
  }
  bool gap_ok = true;
  const double glo = std::min(a2, sol.nu), ghi = std::max(a2, sol.nu);
  for (Eigen::Index i = 0; i < sol.zeros.size(); ++i) {
    const double z = sol.zeros[i];
    if (z > glo && z < ghi) {
      gap_ok = false;
      rep.witnesses.push_back(z);
    }
  }
  rep.holds = (left == sol.j - 1) && (right == sol.k - sol.j + 1) && gap_ok &&
              min_ulps >= kStrictUlps;
  rep.min_margin_ulps = min_ulps;
  if (!rep.holds && rep.witnesses.empty()) {
    rep.witnesses.push_back(double(left));
    rep.witnesses.push_back(double(right));
  }
  rep.note = "left=" + std::to_string(left) + " right=" + std::to_string(right);
  return rep;
}

InterlacingReport check_same_degree(const StieltjesSolution& a, const StieltjesSolution& b) {
  if (a.k != b.k) raise(ErrorCode::LabelMismatch, "same-degree check needs equal degrees");
  if (b.j != a.j + 1) raise(ErrorCode::LabelMismatch, "labels must be adjacent (j, j+1)");
  InterlacingReport rep;
  rep.claim = "same_degree_interlacing";
  rep.k = a.k;
  rep.j = a.j;

  // expected: x_{1,j+1} < x_{1,j} < x_{2,j+1} < x_{2,j} < ...
  std::vector<double> chain;
  chain.push_back(a.system.alpha[0]);
  for (Eigen::Index i = 0; i < a.zeros.size(); ++i) {
    chain.push_back(b.zeros[i]);
    chain.push_back(a.zeros[i]);
  }
  chain.push_back(a.system.alpha[2]);
  const auto c = strict_chain(chain);
  rep.holds = c.ok;
  rep.min_margin_ulps = c.min_ulps;
  if (!c.ok) rep.witnesses = chain;
  return rep;
}

InterlacingReport check_cross_degree(const StieltjesSolution& sol_k,
                                     const StieltjesSolution& sol_k1) {
  if (sol_k1.k != sol_k.k + 1)
    raise(ErrorCode::DegreeMismatch, "cross-degree check needs degrees k and k+1");
  InterlacingReport rep;
  rep.claim = "cross_degree_interlacing";
  rep.k = sol_k.k;
  rep.j = sol_k.j;
  rep.i = sol_k1.j;
  const bool expect = (sol_k1.j == sol_k.j) || (sol_k1.j == sol_k.j + 1);

  // alternation with boundary points: alpha1 < y_1 < x_1 < y_2 < ... < x_k < y_{k+1} < alpha3
  std::vector<double> chain;
  chain.push_back(sol_k.system.alpha[0]);
  for (Eigen::Index i = 0; i < sol_k.zeros.size(); ++i) {
    chain.push_back(sol_k1.zeros[i]);
    chain.push_back(sol_k.zeros[i]);
  }
  chain.push_back(sol_k1.zeros[sol_k1.zeros.size() - 1]);
  chain.push_back(sol_k.system.alpha[2]);
  const auto c = strict_chain(chain);

  if (expect) {
    rep.holds = c.ok;
    rep.min_margin_ulps = c.min_ulps;
    if (!c.ok) rep.witnesses = chain;
    rep.note = "interlacing expected";
    return rep;
  }

  // the failure must be affirmative: two same-source neighbors, cleanly separated
  const auto merged = tagged_merge(sol_k.zeros, sol_k1.zeros);
  bool found = false;
  double pair_sep = 0.0;
  for (size_t t = 0; t + 1 < merged.size(); ++t) {
    if (merged[t].second == merged[t + 1].second) {
      const double m = strict_margin_ulps(merged[t].first, merged[t + 1].first);
      if (m >= kStrictUlps) {
        found = true;
        pair_sep = m;
        rep.witnesses = {merged[t].first, merged[t + 1].first};
        break;
      }
    }
  }
  rep.holds = found;
  rep.min_margin_ulps = pair_sep;
  rep.note = "non-interlacing expected";
  return rep;
}

InterlacingReport check_van_vleck_chain(const VanVleckSpectrum& spec_k,
                                        const VanVleckSpectrum& spec_k1) {
  if (spec_k1.k != spec_k.k + 1)
    raise(ErrorCode::DegreeMismatch, "chain check needs degrees k and k+1");
  InterlacingReport rep;
  rep.claim = "van_vleck_chain";
  rep.k = spec_k.k;
  const Eigen::VectorXd nk = spec_k.nus_original();
  const Eigen::VectorXd nk1 = spec_k1.nus_original();
  std::vector<double> chain;
  chain.push_back(spec_k.system.alpha[0]);
  for (Eigen::Index i = 0; i < nk.size(); ++i) {
    chain.push_back(nk1[i]);
    chain.push_back(nk[i]);
  }
  chain.push_back(nk1[nk1.size() - 1]);
  chain.push_back(spec_k.system.alpha[2]);
  const auto c = strict_chain(chain);
  rep.holds = c.ok;
  rep.min_margin_ulps = c.min_ulps;
  if (!c.ok) rep.witnesses = chain;
  return rep;
}

InterlacingReport check_nu_hat_bounds(const VanVleckSpectrum& spec_k,
                                      const VanVleckSpectrum& spec_k1, int j) {
  if (spec_k1.k != spec_k.k + 1)
    raise(ErrorCode::DegreeMismatch, "nu_hat check needs degrees k and k+1");
  if (j < 1 || j > spec_k.k + 1)
    raise(ErrorCode::IndexOutOfRange, "label j out of range 1..k+1");
  InterlacingReport rep;
  rep.claim = "nu_hat_bounds";
  rep.k = spec_k.k;
  rep.j = j;
  const double mk = spec_k.mu, mk1 = spec_k1.mu;
  const double denom = mk1 - mk;  // 2k + rho sum > 0
  const Eigen::VectorXd nk = spec_k.nus_original();
  const Eigen::VectorXd nk1 = spec_k1.nus_original();
  const double nu_j = nk[j - 1];
  const double hat_j = (mk1 * nk1[j - 1] - mk * nu_j) / denom;
  const double hat_j1 = (mk1 * nk1[j] - mk * nu_j) / denom;
  const double a1 = spec_k.system.alpha[0], a2 = spec_k.system.alpha[1],
               a3 = spec_k.system.alpha[2];
  ChainCheck c1 = strict_chain({a1, hat_j, a2});
  ChainCheck c2 = strict_chain({a2, hat_j1, a3});
  rep.holds = c1.ok && c2.ok;
  rep.min_margin_ulps = std::min(c1.min_ulps, c2.min_ulps);
  rep.witnesses = {hat_j, hat_j1};
  return rep;
}

InterlacingReport check_wronskian_identity(const StieltjesSolution& a,
                                           const StieltjesSolution& b, const LameSystem& sys) {
  if (a.k != b.k || b.j != a.j + 1)
    raise(ErrorCode::LabelMismatch, "wronskian check needs same degree, adjacent labels");
  InterlacingReport rep;
  rep.claim = "wronskian_identity";
  rep.k = a.k;
  rep.j = a.j;

  const double a1 = sys.alpha[0], a3 = sys.alpha[2];
  const double span = a3 - a1;
  const double h = 3e-4 * span;
  const double excl = std::max(1e-4, 1e-4 * span);
  const VecX<DDouble> ca = to_ddouble(a.coeffs);
  const VecX<DDouble> cb = to_ddouble(b.coeffs);

  const auto jfac = [&](double x) {
    double s = 0.0;
    for (int l = 0; l < 3; ++l) s += sys.rho[l] * std::log(std::abs(x - sys.alpha[l]));
    return std::exp(s);
  };
  const auto wr = [&](double x) {
    const DDouble xd(x);
    const auto fa = poly_eval012(ca, xd);
    const auto fb = poly_eval012(cb, xd);
    return jfac(x) * (fb[1] * fa[0] - fb[0] * fa[1]).to_double();
  };

  const Eigen::VectorXd acf = a.coeffs, bcf = b.coeffs;
  const auto avA = [&](double x) {
    return (x - sys.alpha[0]) * (x - sys.alpha[1]) * (x - sys.alpha[2]);
  };

  const int grid_n = 200;
  std::vector<double> xs, lhs, rhs;
  for (int g = 0; g < grid_n; ++g) {
    const double x = a1 + span * (g + 0.5) / grid_n;
    bool clear = true;
    for (int l = 0; l < 3; ++l)
      if (std::abs(x - sys.alpha[l]) < excl + 2 * h) clear = false;
    if (!clear) continue;
    xs.push_back(x);
    // five-point central difference of J (S_b' S_a - S_b S_a')
    const double d =
        (-wr(x + 2 * h) + 8 * wr(x + h) - 8 * wr(x - h) + wr(x - 2 * h)) / (12 * h);
    lhs.push_back(d);
    const double q = (a.nu - b.nu) * jfac(x) / avA(x);
    const double sa = poly_eval(to_ddouble(acf), DDouble(x)).to_double();
    const double sb = poly_eval(to_ddouble(bcf), DDouble(x)).to_double();
    rhs.push_back(q * sa * sb);

    // sign pattern of Q: negative left of alpha2, positive right of it
    const bool left = x < sys.alpha[1];
    if ((left && !(q < 0.0)) || (!left && !(q > 0.0))) {
      rep.holds = false;
      rep.note = "Q sign pattern violated";
      rep.witnesses = {x, q};
      return rep;
    }
  }

  double grid_max = 0.0;
  for (double v : rhs) grid_max = std::max(grid_max, std::abs(v));
  double worst = 0.0;
  bool ok = true;
  for (size_t t = 0; t < xs.size(); ++t) {
    const double scale = std::max({std::abs(lhs[t]), std::abs(rhs[t]), 0.01 * grid_max});
    const double relerr = std::abs(lhs[t] - rhs[t]) / scale;
    worst = std::max(worst, relerr);
    if (relerr > 1e-5) {
      ok = false;
      if (rep.witnesses.empty()) rep.witnesses = {xs[t], lhs[t], rhs[t]};
    }
  }
  rep.holds = ok;
  rep.min_margin_ulps = worst;  // repurposed: worst relative deviation
  rep.note = "max relative deviation " + std::to_string(worst);
  return rep;
}

InterlacingReport check_zero_nesting(const StieltjesSolution& sol_j,
                                     const StieltjesSolution& sol_l) {
  if (sol_j.k != sol_l.k) raise(ErrorCode::LabelMismatch, "nesting check needs equal degrees");
  if (!(sol_l.j > sol_j.j)) raise(ErrorCode::LabelMismatch, "nesting check needs l > j");
  InterlacingReport rep;
  rep.claim = "zero_nesting";
  rep.k = sol_j.k;
  rep.j = sol_j.j;
  rep.i = sol_l.j;
  const double a2 = sol_j.system.alpha[1];

  const auto has_between = [](const Eigen::VectorXd& z, double lo, double hi) {
    for (Eigen::Index t = 0; t < z.size(); ++t)
      if (z[t] > lo && z[t] < hi) return true;
    return false;
  };

  bool ok = true;
  // consecutive zeros of S_j in (alpha1, alpha2) must straddle a zero of S_l
  for (Eigen::Index t = 0; t + 1 < sol_j.zeros.size(); ++t) {
    const double lo = sol_j.zeros[t], hi = sol_j.zeros[t + 1];
    if (hi < a2 && !has_between(sol_l.zeros, lo, hi)) {
      ok = false;
      rep.witnesses = {lo, hi};
    }
  }
  // consecutive zeros of S_l in (alpha2, alpha3) must straddle a zero of S_j
  for (Eigen::Index t = 0; t + 1 < sol_l.zeros.size(); ++t) {
    const double lo = sol_l.zeros[t], hi = sol_l.zeros[t + 1];
    if (lo > a2 && !has_between(sol_j.zeros, lo, hi)) {
      ok = false;
      rep.witnesses = {lo, hi};
    }
  }
  rep.holds = ok;
  rep.min_margin_ulps = ok ? std::numeric_limits<double>::infinity() : 0.0;
  return rep;
}

}  // namespace heun
