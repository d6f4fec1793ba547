#include "heun/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heun {

namespace {

constexpr double kTrimRel = 1e-28;      // drop leading chain coefficients below this
constexpr double kStrictUlps = 1e3;     // separation demanded between distinct values

int sign_of(const DDouble& v) {
  if (v > DDouble(0.0)) return 1;
  if (v < DDouble(0.0)) return -1;
  return 0;
}

VecX<DDouble> normalized(VecX<DDouble> p) {
  const DDouble m = poly_max_abs_coeff(p);
  if (m == DDouble(0.0)) return VecX<DDouble>::Zero(1);
  for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = p[i] / m;
  Eigen::Index d = p.size() - 1;
  while (d > 0 && abs(p[d]) < DDouble(kTrimRel)) --d;
  return p.head(d + 1).eval();
}

}  // namespace

SturmChain::SturmChain(const VecX<DDouble>& coeffs) {
  VecX<DDouble> p0 = normalized(coeffs);
  if (poly_degree(p0) < 1) {
    seq_.push_back(p0);
    return;
  }
  VecX<DDouble> p1 = normalized(poly_derivative(p0));
  seq_.push_back(p0);
  seq_.push_back(p1);
  while (poly_degree(seq_.back()) > 0) {
    VecX<DDouble> r = poly_rem(seq_[seq_.size() - 2], seq_.back());
    for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = -r[i];
    r = normalized(r);
    if (poly_degree(r) < 0 || poly_max_abs_coeff(r) == DDouble(0.0)) break;
    seq_.push_back(r);
  }
}

int SturmChain::sign_changes(const DDouble& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : seq_) {
    const int s = sign_of(poly_eval(p, x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

int SturmChain::count_open(const DDouble& a, const DDouble& b) const {
  return sign_changes(a) - sign_changes(b);
}

namespace {

struct Bracket {
  double lo, hi;
};

// safeguarded Newton inside a sign-change bracket
DDouble polish_root(const VecX<DDouble>& c, Bracket br) {
  DDouble lo(br.lo), hi(br.hi);
  DDouble flo = poly_eval(c, lo);
  int slo = sign_of(flo);
  if (slo == 0) return lo;
  if (sign_of(poly_eval(c, hi)) == 0) return hi;

  DDouble x = (lo + hi) * DDouble(0.5);
  for (int it = 0; it < 120; ++it) {
    const auto f = poly_eval012(c, x);
    const int sx = sign_of(f[0]);
    if (sx == 0) return x;
    if (sx == slo)
      lo = x;
    else
      hi = x;
    DDouble step;
    DDouble xn;
    bool use_newton = !(f[1] == DDouble(0.0));
    if (use_newton) {
      step = f[0] / f[1];
      xn = x - step;
      if (!(xn > lo && xn < hi)) use_newton = false;
    }
    if (!use_newton) xn = (lo + hi) * DDouble(0.5);
    const DDouble w = hi - lo;
    x = xn;
    if (w.to_double() <= 4e-30 * (1.0 + std::abs(x.to_double()))) break;
  }
  return x;
}

}  // namespace

VecX<DDouble> isolate_zeros_certified(const VecX<DDouble>& coeffs, double lo, double hi) {
  const Eigen::Index k = poly_degree(coeffs);
  if (k < 1) raise(ErrorCode::DegreeZero, "cannot isolate zeros of a constant");
  SturmChain chain(coeffs);
  const int total = chain.count_open(DDouble(lo), DDouble(hi));
  if (total != int(k))
    raise(ErrorCode::CountMismatch, "Sturm count over the interval is " + std::to_string(total) +
                                        ", expected " + std::to_string(k));

  std::vector<Bracket> brackets;
  struct Node {
    double lo, hi;
    int vlo, vhi;
  };
  std::vector<Node> stack{{lo, hi, chain.sign_changes(DDouble(lo)), chain.sign_changes(DDouble(hi))}};
  while (!stack.empty()) {
    const Node nd = stack.back();
    stack.pop_back();
    const int count = nd.vlo - nd.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      brackets.push_back({nd.lo, nd.hi});
      continue;
    }
    const double mid = 0.5 * (nd.lo + nd.hi);
    if (!(mid > nd.lo && mid < nd.hi) ||
        (nd.hi - nd.lo) < 1e-26 * (1.0 + std::abs(mid)))
      raise(ErrorCode::CountMismatch, "unresolvable root cluster near " + std::to_string(mid));
    const int vm = chain.sign_changes(DDouble(mid));
    stack.push_back({nd.lo, mid, nd.vlo, vm});
    stack.push_back({mid, nd.hi, vm, nd.vhi});
  }
  if (Eigen::Index(brackets.size()) != k)
    raise(ErrorCode::CountMismatch, "bracket count disagrees with degree");

  VecX<DDouble> zeros(k);
  for (Eigen::Index i = 0; i < k; ++i) zeros[i] = polish_root(coeffs, brackets[i]);
  std::sort(zeros.data(), zeros.data() + k,
            [](const DDouble& a, const DDouble& b) { return a < b; });

  const double eps = std::numeric_limits<double>::epsilon();
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    const double a = zeros[i].to_double(), b = zeros[i + 1].to_double();
    const double scale = std::max({std::abs(a), std::abs(b), 1e-3});
    if (b - a < kStrictUlps * eps * scale)
      raise(ErrorCode::CountMismatch, "adjacent zeros closer than the separation floor");
  }
  return zeros;
}

Eigen::VectorXd isolate_zeros(const Eigen::VectorXd& coeffs, const LameSystem& sys) {
  const VecX<DDouble> c = to_ddouble(coeffs);
  const VecX<DDouble> z = isolate_zeros_certified(c, sys.alpha[0], sys.alpha[2]);
  Eigen::VectorXd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) out[i] = z[i].to_double();
  return out;
}

std::vector<StieltjesSolution> label_solutions(const VanVleckSpectrum& spec) {
  const int k = spec.k;
  const int n = k + 1;
  const LameSystem& csys = spec.canonical;
  const double a2c = csys.alpha[1];
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<StieltjesSolution> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    const VecX<DDouble> c = spec.coeffs.col(j);
    SturmChain chain(c);
    VecX<DDouble> zc = isolate_zeros_certified(c, csys.alpha[0], csys.alpha[2]);

    for (Eigen::Index i = 0; i < zc.size(); ++i) {
      const double z = zc[i].to_double();
      if (std::abs(z - a2c) < kStrictUlps * eps * std::max(1.0, std::abs(a2c)))
        raise(ErrorCode::CountMismatch, "zero within the separation floor of alpha2");
    }

    const int left = chain.count_open(DDouble(csys.alpha[0]), DDouble(a2c));
    const int right = chain.count_open(DDouble(a2c), DDouble(csys.alpha[2]));
    if (left != j || right != k - j)
      raise(ErrorCode::TheoremViolation,
            "k=" + std::to_string(k) + " j=" + std::to_string(j + 1) + ": counts (" +
                std::to_string(left) + "," + std::to_string(right) + ") differ from (" +
                std::to_string(j) + "," + std::to_string(k - j) + ")");

    const DDouble nu_dd = spec.nus_dd[j];
    const DDouble glo = nu_dd < DDouble(a2c) ? nu_dd : DDouble(a2c);
    const DDouble ghi = nu_dd < DDouble(a2c) ? DDouble(a2c) : nu_dd;
    if (glo < ghi) {
      const int gap = chain.count_open(glo, ghi);
      if (gap != 0)
        raise(ErrorCode::TheoremViolation,
              "k=" + std::to_string(k) + " j=" + std::to_string(j + 1) + ": " +
                  std::to_string(gap) + " zero(s) strictly between alpha2 and nu");
    }

    StieltjesSolution sol;
    sol.k = k;
    sol.j = j + 1;
    sol.system = spec.system;
    sol.left_count = left;
    sol.right_count = right;
    sol.nu = spec.nu_original(j);

    VecX<DDouble> zo(zc.size());
    const bool identity = spec.to_canonical.is_identity();
    for (Eigen::Index i = 0; i < zc.size(); ++i)
      zo[i] = identity ? zc[i] : spec.to_canonical.inverse(zc[i]);
    std::sort(zo.data(), zo.data() + zo.size(),
              [](const DDouble& a, const DDouble& b) { return a < b; });
    sol.zeros.resize(zo.size());
    for (Eigen::Index i = 0; i < zo.size(); ++i) sol.zeros[i] = zo[i].to_double();
    sol.coeffs = to_double(poly_from_roots(zo));
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace heun
