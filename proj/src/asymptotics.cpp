#include "heun/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heun {

namespace {

constexpr int kCells = 1024;  // CDF table cells per support component

double poly_a(const LameSystem& sys, double x) {
  return (x - sys.alpha[0]) * (x - sys.alpha[1]) * (x - sys.alpha[2]);
}

// Gauss-Legendre on (lo, hi)
double gl_integrate(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (!(hi > lo)) return 0.0;
  return integrate_singular(f, lo, hi, 0.0, 0.0, n);
}

// int_0^Psi g(psi) dpsi split so the active end is resolved when Psi is large
double psi_integrate(const std::function<double(double)>& g, double psi_max) {
  if (psi_max <= 0.0) return 0.0;
  if (psi_max <= 10.0) return gl_integrate(g, 0.0, psi_max, 48);
  return gl_integrate(g, 0.0, psi_max - 6.0, 24) +
         gl_integrate(g, psi_max - 6.0, psi_max, 48);
}

}  // namespace

double theta_c(const LameSystem& sys) {
  return (2.0 / M_PI) *
         std::asin(std::sqrt((sys.alpha[1] - sys.alpha[0]) / (sys.alpha[2] - sys.alpha[0])));
}

double rho_V(const LameSystem& sys, double x) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  if (!(x > a1 && x < a3) || x == a2)
    raise(ErrorCode::OutOfSupport, "rho_V is defined on (alpha1, alpha3) minus alpha2");

  if (x < a2) {
    // integrate over (alpha2, alpha3); singular partner at s = x, gap u
    const double u = a2 - x;
    const double sm = 0.5 * (a2 + a3);
    const double psi_max = std::asinh(std::sqrt((sm - a2) / u));
    const auto near_g = [&](double psi) {
      const double sh = std::sinh(psi);
      const double s = a2 + u * sh * sh;
      return 2.0 / std::sqrt((s - a1) * (a3 - s));
    };
    const double i_near = psi_integrate(near_g, psi_max);
    const auto far_f = [&](double s) {
      const double rad = (s - a1) * (s - a2) * (s - x);
      return 1.0 / std::sqrt(rad);
    };
    const double i_far = integrate_adaptive(far_f, sm, a3, 0.0, -0.5, 64);
    return (i_near + i_far) / (2.0 * M_PI);
  }

  // x > a2: integrate over (alpha1, alpha2); partner at s = x beyond alpha2
  const double u = x - a2;
  const double sm = 0.5 * (a1 + a2);
  const double psi_max = std::asinh(std::sqrt((a2 - sm) / u));
  const auto near_g = [&](double psi) {
    const double sh = std::sinh(psi);
    const double s = a2 - u * sh * sh;
    return 2.0 / std::sqrt((s - a1) * (a3 - s));
  };
  const double i_near = psi_integrate(near_g, psi_max);
  const auto far_f = [&](double s) {
    const double rad = (a2 - s) * (a3 - s) * (x - s);
    return 1.0 / std::sqrt(rad);
  };
  const double i_far = integrate_adaptive(far_f, a1, sm, -0.5, 0.0, 64);
  return (i_near + i_far) / (2.0 * M_PI);
}

double rho_S(const LameSystem& sys, double nu, double x) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  if (!(x > a1 && x < a3)) return 0.0;
  const double ilo = std::min(a2, nu), ihi = std::max(a2, nu);
  if (x >= ilo && x <= ihi) return 0.0;
  const double r = (nu - x) / poly_a(sys, x);
  return std::sqrt(std::abs(r)) / M_PI;
}

double theta_from_nu(const LameSystem& sys, double nu) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  if (!(nu >= a1 && nu <= a3))
    raise(ErrorCode::OutOfRange, "nu must lie in [alpha1, alpha3]");
  if (nu == a1) return 0.0;

  if (nu < a2) {
    // int_{alpha1}^{nu} sqrt((nu-x)/((x-a1)(a2-x)(a3-x))) dx; the pair
    // (nu-x)^{1/2} (a2-x)^{-1/2} is regularized by nu - x = u sinh^2 psi
    const double u = a2 - nu;
    const double sm = 0.5 * (a1 + nu);
    const double psi_max = std::asinh(std::sqrt((nu - sm) / u));
    const auto near_g = [&](double psi) {
      const double sh = std::sinh(psi);
      const double x = nu - u * sh * sh;
      return 2.0 * u * sh * sh / std::sqrt((x - a1) * (a3 - x));
    };
    const double i_near = psi_integrate(near_g, psi_max);
    const auto far_f = [&](double x) {
      return std::sqrt((nu - x) / ((a2 - x) * (a3 - x)));
    };
    const double i_far = integrate_adaptive(far_f, a1, sm, -0.5, 0.0, 64);
    return (i_near + i_far) / M_PI;
  }

  if (nu == a2) {
    const auto f = [&](double x) { return 1.0 / std::sqrt(a3 - x); };
    return integrate_adaptive(f, a1, a2, -0.5, 0.0, 64) / M_PI;
  }

  // nu > a2: int over (alpha1, alpha2); (nu-x)^{1/2} (a2-x)^{-1/2} with the
  // kink at x = nu outside: a2 - x = u sinh^2 psi
  const double u = nu - a2;
  const double sm = 0.5 * (a1 + a2);
  const double psi_max = std::asinh(std::sqrt((a2 - sm) / u));
  const auto near_g = [&](double psi) {
    const double ch = std::cosh(psi);
    const double x = a2 - u * std::sinh(psi) * std::sinh(psi);
    return 2.0 * u * ch * ch / std::sqrt((x - a1) * (a3 - x));
  };
  const double i_near = psi_integrate(near_g, psi_max);
  const auto far_f = [&](double x) {
    return std::sqrt((nu - x) / ((a2 - x) * (a3 - x)));
  };
  const double i_far = integrate_adaptive(far_f, a1, sm, -0.5, 0.0, 64);
  return (i_near + i_far) / M_PI;
}

double nu_from_theta(const LameSystem& sys, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    raise(ErrorCode::OutOfRange, "theta must lie in [0, 1]");
  const double a1 = sys.alpha[0], a3 = sys.alpha[2];
  if (theta == 0.0) return a1;
  if (theta == 1.0) return a3;
  double lo = a1, hi = a3;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double t = theta_from_nu(sys, mid);
    if (std::abs(t - theta) <= 1e-9) return mid;
    (t < theta ? lo : hi) = mid;
    if (hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * (a3 - a1)) return mid;
  }
  return 0.5 * (lo + hi);
}

int jk_sequence(double theta, int k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "jk sequence needs k >= 1");
  const int j = int(std::ceil(double(k) * theta + 1.0));
  return std::max(1, std::min(k + 1, j));
}

DensityModel::DensityModel(Kind kind, const LameSystem& sys, double nu)
    : kind_(kind), sys_(sys), nu_(nu) {}

DensityModel DensityModel::van_vleck(const LameSystem& sys) {
  DensityModel m(Kind::VanVleck, sys, 0.0);
  m.comps_.push_back({sys.alpha[0], sys.alpha[1], 0.0, {}, {}});
  m.comps_.push_back({sys.alpha[1], sys.alpha[2], 0.0, {}, {}});
  m.build_tables();
  return m;
}

DensityModel DensityModel::stieltjes(const LameSystem& sys, double nu) {
  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  if (!(nu >= a1 && nu <= a3))
    raise(ErrorCode::OutOfRange, "nu must lie in [alpha1, alpha3]");
  DensityModel m(Kind::Stieltjes, sys, nu);
  if (nu <= a2) {
    if (nu > a1) m.comps_.push_back({a1, nu, 0.0, {}, {}});
    m.comps_.push_back({a2, a3, 0.0, {}, {}});
  } else {
    m.comps_.push_back({a1, a2, 0.0, {}, {}});
    if (nu < a3) m.comps_.push_back({nu, a3, 0.0, {}, {}});
  }
  m.build_tables();
  return m;
}

double DensityModel::pdf(double x) const {
  if (kind_ == Kind::Stieltjes) return rho_S(sys_, nu_, x);
  if (!(x > sys_.alpha[0] && x < sys_.alpha[2]) || x == sys_.alpha[1]) return 0.0;
  return rho_V(sys_, x);
}

void DensityModel::build_tables() {
  // Each component is parametrized x = c + (d-c) sin^2(pi tau / 2); inverse
  // square-root edges of the density become smooth in tau, so fixed-order
  // Gauss cells and a monotone cubic in tau carry the CDF to ~1e-9.
  const int gl_n = 16;
  const JacobiRule cell_rule = jacobi_rule(0.0, 1.0, 0.0, 0.0, gl_n);
  double running = 0.0;
  for (auto& comp : comps_) {
    comp.base = running;
    const double len = comp.d - comp.c;
    comp.cum.assign(kCells + 1, 0.0);
    for (int i = 0; i < kCells; ++i) {
      const double t0 = double(i) / kCells;
      double cell = 0.0;
      for (int g = 0; g < gl_n; ++g) {
        const double tau = t0 + cell_rule.nodes[g] / kCells;
        const double s = std::sin(0.5 * M_PI * tau);
        const double x = comp.c + len * s * s;
        const double dxdtau = len * 0.5 * M_PI * std::sin(M_PI * tau);
        cell += cell_rule.weights[g] / kCells * pdf(x) * dxdtau;
      }
      comp.cum[i + 1] = comp.cum[i] + cell;
    }
    running += comp.cum[kCells];

    // Fritsch-Carlson monotone slopes on the uniform tau grid
    const int n = kCells;
    std::vector<double> delta(n);
    for (int i = 0; i < n; ++i) delta[i] = (comp.cum[i + 1] - comp.cum[i]) * n;
    comp.slope.assign(n + 1, 0.0);
    comp.slope[0] = delta[0];
    comp.slope[n] = delta[n - 1];
    for (int i = 1; i < n; ++i)
      comp.slope[i] = (delta[i - 1] * delta[i] > 0.0) ? 0.5 * (delta[i - 1] + delta[i]) : 0.0;
    for (int i = 0; i < n; ++i) {
      if (delta[i] == 0.0) {
        comp.slope[i] = 0.0;
        comp.slope[i + 1] = 0.0;
        continue;
      }
      const double al = comp.slope[i] / delta[i];
      const double be = comp.slope[i + 1] / delta[i];
      const double s2 = al * al + be * be;
      if (s2 > 9.0) {
        const double t = 3.0 / std::sqrt(s2);
        comp.slope[i] = t * al * delta[i];
        comp.slope[i + 1] = t * be * delta[i];
      }
    }
  }
  mass_ = running;
}

double DensityModel::cdf(double x) const {
  double value = 0.0;
  for (const auto& comp : comps_) {
    if (x <= comp.c) break;
    if (x >= comp.d) {
      value = comp.base + comp.cum[kCells];
      continue;
    }
    const double len = comp.d - comp.c;
    double r = (x - comp.c) / len;
    r = std::min(1.0, std::max(0.0, r));
    const double tau = (2.0 / M_PI) * std::asin(std::sqrt(r));
    int cell = std::min(kCells - 1, int(tau * kCells));
    const double t = tau * kCells - cell;
    const double h = 1.0 / kCells;
    const double f0 = comp.cum[cell], f1 = comp.cum[cell + 1];
    const double m0 = comp.slope[cell] * h, m1 = comp.slope[cell + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    const double hermite = (2 * t3 - 3 * t2 + 1) * f0 + (t3 - 2 * t2 + t) * m0 +
                           (-2 * t3 + 3 * t2) * f1 + (t3 - t2) * m1;
    value = comp.base + hermite;
    break;
  }
  if (x >= comps_.back().d) value = mass_;
  return value;
}

std::vector<std::pair<double, double>> DensityModel::support() const {
  std::vector<std::pair<double, double>> s;
  for (const auto& comp : comps_) s.push_back({comp.c, comp.d});
  return s;
}

double ks_distance(const Eigen::VectorXd& samples, const DensityModel& model) {
  if (samples.size() == 0) raise(ErrorCode::EmptySample, "KS distance needs samples");
  std::vector<double> xs(samples.data(), samples.data() + samples.size());
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double f = model.cdf(xs[i]);
    d = std::max(d, std::abs((double(i) + 1.0) / n - f));
    d = std::max(d, std::abs(double(i) / n - f));
  }
  return d;
}

}  // namespace heun
