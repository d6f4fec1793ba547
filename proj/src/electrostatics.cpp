#include "heun/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>

namespace heun {

namespace {

void check_collisions(const Eigen::VectorXd& x, const LameSystem& sys) {
  const double span = sys.alpha[2] - sys.alpha[0];
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * span;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      if (std::abs(x[i] - x[j]) < floor)
        raise(ErrorCode::Collision, "charges " + std::to_string(i) + " and " + std::to_string(j) +
                                        " coincide to working precision");
    for (int l = 0; l < 3; ++l)
      if (std::abs(x[i] - sys.alpha[l]) < floor)
        raise(ErrorCode::Collision,
              "charge " + std::to_string(i) + " sits on alpha" + std::to_string(l + 1));
  }
}

}  // namespace

Eigen::VectorXd equilibrium_residual(const ChargeConfiguration& config, const LameSystem& sys) {
  const Eigen::VectorXd& x = config.positions;
  check_collisions(x, sys);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = 0; j < x.size(); ++j)
      if (j != i) f[i] += 2.0 / (x[i] - x[j]);
    for (int l = 0; l < 3; ++l) f[i] += sys.rho[l] / (x[i] - sys.alpha[l]);
  }
  return f;
}

double energy(const ChargeConfiguration& config, const LameSystem& sys) {
  const Eigen::VectorXd& x = config.positions;
  check_collisions(x, sys);
  double w = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = i + 1; j < x.size(); ++j) w -= 2.0 * std::log(std::abs(x[i] - x[j]));
    for (int l = 0; l < 3; ++l) w -= sys.rho[l] * std::log(std::abs(x[i] - sys.alpha[l]));
  }
  return w;
}

Eigen::MatrixXd energy_hessian(const ChargeConfiguration& config, const LameSystem& sys) {
  const Eigen::VectorXd& x = config.positions;
  const Eigen::Index k = x.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    double d = 0.0;
    for (Eigen::Index j = 0; j < k; ++j)
      if (j != i) {
        const double s = 2.0 / ((x[i] - x[j]) * (x[i] - x[j]));
        h(i, j) = -s;
        d += s;
      }
    for (int l = 0; l < 3; ++l)
      d += sys.rho[l] / ((x[i] - sys.alpha[l]) * (x[i] - sys.alpha[l]));
    h(i, i) = d;
  }
  return h;
}

ChargeConfiguration solve_sector(const LameSystem& sys, int k, int m,
                                 const SectorSolveOptions& opts) {
  if (k < 1) raise(ErrorCode::DegreeZero, "need at least one charge");
  if (m < 0 || m > k) raise(ErrorCode::IndexOutOfRange, "sector must satisfy 0 <= m <= k");

  const double a1 = sys.alpha[0], a2 = sys.alpha[1], a3 = sys.alpha[2];
  ChargeConfiguration cfg;
  cfg.sector = m;
  cfg.positions.resize(k);
  for (int i = 0; i < m; ++i) {
    const double t = std::cos(M_PI * (2.0 * (m - i) - 1.0) / (2.0 * m));
    cfg.positions[i] = 0.5 * (a1 + a2) + 0.5 * (a2 - a1) * t;
  }
  for (int i = 0; i < k - m; ++i) {
    const double t = std::cos(M_PI * (2.0 * (k - m - i) - 1.0) / (2.0 * (k - m)));
    cfg.positions[m + i] = 0.5 * (a2 + a3) + 0.5 * (a3 - a2) * t;
  }

  Eigen::VectorXd lob(k), hib(k);
  for (int i = 0; i < k; ++i) {
    lob[i] = i < m ? a1 : a2;
    hib[i] = i < m ? a2 : a3;
  }
  const auto feasible = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < k; ++i)
      if (!(x[i] > lob[i] && x[i] < hib[i])) return false;
    for (int i = 0; i + 1 < k; ++i)
      if (!(x[i] < x[i + 1])) return false;
    return true;
  };

  const double tol = opts.tolerance > 0.0
                         ? opts.tolerance
                         : 1e-10 * (2.0 * k + sys.rho.sum()) / (a3 - a1);

  Eigen::VectorXd x = cfg.positions;
  double best_res = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opts.max_iterations; ++it) {
    cfg.positions = x;
    Eigen::VectorXd f = equilibrium_residual(cfg, sys);
    const double res = f.lpNorm<Eigen::Infinity>();
    best_res = std::min(best_res, res);
    if (res <= tol) return cfg;

    Eigen::MatrixXd h = energy_hessian(cfg, sys);
    Eigen::LLT<Eigen::MatrixXd> llt(h);
    if (llt.info() != Eigen::Success) {
      h.diagonal().array() += 1e-12 * h.diagonal().maxCoeff();
      llt.compute(h);
      if (llt.info() != Eigen::Success)
        raise(ErrorCode::NoConvergence, "Hessian factorization failed");
    }
    const Eigen::VectorXd step = llt.solve(f);  // grad W = -f, Newton step = H^{-1} f
    const double w0 = energy(cfg, sys);
    const double slope = -f.dot(step);  // directional derivative of W along the step

    double t = 1.0;
    bool moved = false;
    for (int halve = 0; halve < 30; ++halve) {
      const Eigen::VectorXd xn = x + t * step;
      if (feasible(xn)) {
        cfg.positions = xn;
        const double wn = energy(cfg, sys);
        if (wn <= w0 + 1e-4 * t * slope) {
          x = xn;
          moved = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!moved)
      raise(ErrorCode::NoConvergence,
            "line search stalled at residual " + std::to_string(best_res));
  }
  raise(ErrorCode::NoConvergence, "no equilibrium after " + std::to_string(opts.max_iterations) +
                                      " iterations; best residual " + std::to_string(best_res));
}

}  // namespace heun
