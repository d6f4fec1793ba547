// heunlab: spectra, zero sets, theorem verification sweeps, limit-density
// tables, KS convergence ladders and orthogonality experiments for the
// three-singularity Lame (Heun) polynomial problem.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heun/asymptotics.hpp"
#include "heun/electrostatics.hpp"
#include "heun/interlacing.hpp"
#include "heun/io.hpp"
#include "heun/orthogonality.hpp"
#include "heun/spectrum.hpp"
#include "heun/system.hpp"
#include "heun/zeros.hpp"

namespace {

using heun::LameSystem;
using nlohmann::ordered_json;

struct CommonOpts {
  std::vector<double> alpha;
  std::vector<double> rho;
  std::string config;
  std::string out = "out";
  std::string krange;
  std::vector<double> thetas;
  int nodes = 64;
  double tol = 0.0;
  int grid = 512;
};

void add_system_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--alpha", o.alpha, "abscissas a1,a2,a3")->delimiter(',')->expected(3);
  cmd->add_option("--rho", o.rho, "charges r1,r2,r3")->delimiter(',')->expected(3);
  cmd->add_option("--config", o.config, "TOML file with alpha = [..] and rho = [..]");
  cmd->add_option("--out", o.out, "output directory");
}

LameSystem resolve_system(const CommonOpts& o) {
  if (!o.config.empty()) return heun::load_system_toml(o.config);
  if (o.alpha.size() == 3 && o.rho.size() == 3)
    return heun::validate_system(Eigen::Vector3d(o.alpha[0], o.alpha[1], o.alpha[2]),
                                 Eigen::Vector3d(o.rho[0], o.rho[1], o.rho[2]));
  throw CLI::ValidationError("system", "provide --config or both --alpha and --rho");
}

// "6", "1..8", or "4,8,16"
std::vector<int> parse_krange(const std::string& s) {
  std::vector<int> ks;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) ks.push_back(std::stoi(item));
  }
  if (ks.empty()) throw CLI::ValidationError("--k", "empty degree range");
  for (int k : ks)
    if (k < 1) throw CLI::ValidationError("--k", "degrees must satisfy k >= 1");
  return ks;
}

std::string path_join(const std::string& dir, const std::string& name) {
  return dir.empty() ? name : dir + "/" + name;
}

int run_spectrum(const CommonOpts& o) {
  const LameSystem sys = resolve_system(o);
  for (int k : parse_krange(o.krange)) {
    const auto spec = heun::van_vleck_spectrum(sys, k);
    const auto sols = heun::label_solutions(spec);
    heun::write_file(path_join(o.out, "spectrum_k" + std::to_string(k) + ".json"),
                     heun::spectrum_to_json(spec).dump(2) + "\n");
    heun::write_file(path_join(o.out, "solutions_k" + std::to_string(k) + ".csv"),
                     heun::solutions_to_csv(sols));
    std::cout << "k=" << k << ": wrote " << sols.size() << " labeled solutions\n";
  }
  return 0;
}

const std::map<std::string, std::string>&claim_aliases() {
  static const std::map<std::string, std::string> m = {
      {"theorem1", "zero_counts"},
      {"theorem2", "same_degree_interlacing"},
      {"theorem3", "cross_degree_interlacing"},
      {"inequality", "van_vleck_chain"},
      {"counts", "zero_counts"},
      {"chain", "van_vleck_chain"},
      {"nuhat", "nu_hat_bounds"},
      {"wronskian", "wronskian_identity"},
      {"corollary", "zero_nesting"},
  };
  return m;
}

int run_verify(const CommonOpts& o, const std::string& in_file,
               const std::vector<std::string>& claim_filters) {
  std::set<std::string> wanted;
  for (auto c : claim_filters) {
    const auto it = claim_aliases().find(c);
    wanted.insert(it != claim_aliases().end() ? it->second : c);
  }
  const auto active = [&](const std::string& claim) {
    return wanted.empty() || wanted.count(claim) > 0;
  };

  std::vector<heun::InterlacingReport> reports;
  if (!in_file.empty()) {
    std::ifstream in(in_file);
    if (!in) heun::raise(heun::ErrorCode::ParseError, "cannot open " + in_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      heun::raise(heun::ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
    const auto spec = heun::spectrum_from_json(j);
    const auto sols = heun::label_solutions(spec);
    for (const auto& s : sols)
      if (active("zero_counts")) reports.push_back(heun::check_zero_counts(s));
    for (size_t t = 0; t + 1 < sols.size(); ++t)
      if (active("same_degree_interlacing"))
        reports.push_back(heun::check_same_degree(sols[t], sols[t + 1]));
  } else {
    const LameSystem sys = resolve_system(o);
    const auto ks = parse_krange(o.krange.empty() ? "1..8" : o.krange);
    std::map<int, heun::VanVleckSpectrum> specs;
    std::map<int, std::vector<heun::StieltjesSolution>> sols;
    const auto get = [&](int k) -> void {
      if (!specs.count(k)) {
        specs.emplace(k, heun::van_vleck_spectrum(sys, k));
        sols.emplace(k, heun::label_solutions(specs.at(k)));
      }
    };
    for (int k : ks) {
      get(k);
      get(k + 1);
      const auto& sk = sols.at(k);
      const auto& sk1 = sols.at(k + 1);
      if (active("zero_counts"))
        for (const auto& s : sk) reports.push_back(heun::check_zero_counts(s));
      if (active("same_degree_interlacing"))
        for (size_t t = 0; t + 1 < sk.size(); ++t)
          reports.push_back(heun::check_same_degree(sk[t], sk[t + 1]));
      if (active("cross_degree_interlacing"))
        for (const auto& a : sk)
          for (const auto& b : sk1) reports.push_back(heun::check_cross_degree(a, b));
      if (active("van_vleck_chain"))
        reports.push_back(heun::check_van_vleck_chain(specs.at(k), specs.at(k + 1)));
      if (active("nu_hat_bounds"))
        for (int j = 1; j <= k + 1; ++j)
          reports.push_back(heun::check_nu_hat_bounds(specs.at(k), specs.at(k + 1), j));
      if (active("zero_nesting"))
        for (size_t a = 0; a < sk.size(); ++a)
          for (size_t b = a + 1; b < sk.size(); ++b)
            reports.push_back(heun::check_zero_nesting(sk[a], sk[b]));
      if (active("wronskian_identity"))
        for (size_t t = 0; t + 1 < sk.size(); ++t)
          reports.push_back(heun::check_wronskian_identity(sk[t], sk[t + 1], sys));
    }
  }

  std::string lines;
  size_t failed = 0;
  for (const auto& r : reports) {
    lines += heun::report_to_json(r).dump() + "\n";
    if (!r.holds) ++failed;
  }
  heun::write_file(path_join(o.out, "verify.jsonl"), lines);
  std::cout << reports.size() << " predicates checked, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int run_figure1(const CommonOpts& o) {
  const LameSystem sys = heun::validate_system(Eigen::Vector3d(-1.0, 0.0, 2.0),
                                               Eigen::Vector3d(1.0, 2.0, 1.0 / 3.0));
  const auto spec6 = heun::van_vleck_spectrum(sys, 6);
  const auto spec7 = heun::van_vleck_spectrum(sys, 7);
  const auto sols6 = heun::label_solutions(spec6);
  const auto sols7 = heun::label_solutions(spec7);
  heun::write_file(path_join(o.out, "figure1.csv"), heun::figure_dataset_csv(sols6, sols7));
  std::cout << "wrote " << path_join(o.out, "figure1.csv") << "\n";
  return 0;
}

int run_nu(const CommonOpts& o) {
  const LameSystem sys = resolve_system(o);
  ordered_json j;
  j["theta_c"] = heun::theta_c(sys);
  ordered_json list = ordered_json::array();
  for (double th : o.thetas)
    list.push_back({{"theta", th}, {"nu", heun::nu_from_theta(sys, th)}});
  j["map"] = list;
  const std::string text = j.dump(2) + "\n";
  heun::write_file(path_join(o.out, "nu.json"), text);
  std::cout << text;
  return 0;
}

int run_density(const CommonOpts& o) {
  const LameSystem sys = resolve_system(o);
  std::vector<double> thetas = o.thetas;
  if (thetas.empty()) thetas = {heun::theta_c(sys)};
  ordered_json summary;
  summary["theta_c"] = heun::theta_c(sys);
  ordered_json entries = ordered_json::array();
  const double a1 = sys.alpha[0], a3 = sys.alpha[2];
  for (size_t t = 0; t < thetas.size(); ++t) {
    const double nu = heun::nu_from_theta(sys, thetas[t]);
    std::string csv = "x,rho_V,rho_S\n";
    for (int g = 0; g < o.grid; ++g) {
      double x = a1 + (a3 - a1) * (g + 0.5) / o.grid;
      if (x == sys.alpha[1]) x = std::nextafter(x, a3);
      csv += heun::fmt17(x) + "," + heun::fmt17(heun::rho_V(sys, x)) + "," +
             heun::fmt17(heun::rho_S(sys, nu, x)) + "\n";
    }
    const std::string name = "density_" + std::to_string(t) + ".csv";
    heun::write_file(path_join(o.out, name), csv);
    entries.push_back({{"theta", thetas[t]}, {"nu", nu}, {"file", name}});
  }
  summary["densities"] = entries;
  heun::write_file(path_join(o.out, "density_summary.json"), summary.dump(2) + "\n");
  std::cout << "wrote " << thetas.size() << " density tables\n";
  return 0;
}

int run_ks(const CommonOpts& o) {
  const LameSystem sys = resolve_system(o);
  std::vector<int> ks = o.krange.empty() ? std::vector<int>{16, 32, 64, 128}
                                         : parse_krange(o.krange);
  std::vector<double> thetas = o.thetas;
  if (thetas.empty()) thetas = {0.0, heun::theta_c(sys), 1.0};

  ordered_json j;
  j["ks"] = ks;

  const auto model_v = heun::DensityModel::van_vleck(sys);
  ordered_json vv = ordered_json::array();
  for (int k : ks) {
    const auto spec = heun::van_vleck_spectrum(sys, k);
    const double d = heun::ks_distance(spec.nus_original(), model_v);
    vv.push_back({{"k", k}, {"distance", d}});
  }
  j["van_vleck"] = vv;

  ordered_json st = ordered_json::array();
  for (double th : thetas) {
    const double nu = heun::nu_from_theta(sys, th);
    const auto model_s = heun::DensityModel::stieltjes(sys, nu);
    ordered_json ladder = ordered_json::array();
    for (int k : ks) {
      const int jk = heun::jk_sequence(th, k);
      heun::SectorSolveOptions sopts;
      sopts.tolerance = o.tol;
      const auto cfg = heun::solve_sector(sys, k, jk - 1, sopts);
      const double d = heun::ks_distance(cfg.positions, model_s);
      ladder.push_back({{"k", k}, {"j", jk}, {"distance", d}});
    }
    st.push_back({{"theta", th}, {"nu", nu}, {"ladder", ladder}});
  }
  j["stieltjes"] = st;

  const std::string text = j.dump(2) + "\n";
  heun::write_file(path_join(o.out, "ks.json"), text);
  std::cout << text;
  return 0;
}

int run_ortho(const CommonOpts& o, int n_max) {
  const LameSystem sys = resolve_system(o);
  std::vector<double> thetas = o.thetas;
  if (thetas.empty()) thetas = {0.0, heun::theta_c(sys), 1.0};
  ordered_json out = ordered_json::array();
  for (double th : thetas) {
    const auto rep = heun::orthogonality_report(sys, th, n_max);
    ordered_json jt;
    jt["theta"] = th;
    ordered_json fits = ordered_json::array();
    std::printf("theta = %.6f\n", th);
    std::printf("  %3s %22s %22s %22s\n", "n", "a_n", "b_n", "residual");
    for (const auto& f : rep.fits) {
      fits.push_back(
          {{"n", f.n}, {"a", f.a_n}, {"b", f.b_n}, {"residual", f.residual_norm}});
      std::printf("  %3d %22.15g %22.15g %22.15g\n", f.n, f.a_n, f.b_n, f.residual_norm);
    }
    jt["fits"] = fits;
    ordered_json prods = ordered_json::array();
    for (int n = 1; n <= n_max; ++n)
      for (int m = n + 1; m <= n_max; ++m)
        prods.push_back({{"n", n}, {"m", m}, {"normalized", rep.normalized_integrals(n, m)}});
    jt["normalized_product_integrals"] = prods;
    jt["max_offdiagonal"] = rep.max_offdiagonal;
    jt["max_residual"] = rep.max_residual;
    std::printf("  max normalized |I(n,m)| = %.3e, max recurrence residual = %.3e\n",
                rep.max_offdiagonal, rep.max_residual);
    out.push_back(jt);
  }
  heun::write_file(path_join(o.out, "ortho.json"), out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes and Van Vleck zeros of the three-singularity Lame equation"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* c_spectrum = app.add_subcommand("spectrum", "Van Vleck spectra and labeled zero sets");
  add_system_options(c_spectrum, o);
  c_spectrum->add_option("--k", o.krange, "degree or range: 6, 1..8, 4,8")->required();

  auto* c_verify = app.add_subcommand("verify", "run the theorem predicate sweep");
  add_system_options(c_verify, o);
  c_verify->add_option("--k", o.krange, "degree or range");
  std::string in_file;
  std::vector<std::string> claims;
  c_verify->add_option("--in", in_file, "verify a saved spectrum JSON instead");
  c_verify->add_option("--claims", claims, "restrict to named claims")->delimiter(',');

  auto* c_fig = app.add_subcommand("figure1", "reference dataset: k=6,7 for (-1,0,2), (1,2,1/3)");
  c_fig->add_option("--out", o.out, "output directory");

  auto* c_density = app.add_subcommand("density", "limit density tables");
  add_system_options(c_density, o);
  c_density->add_option("--theta", o.thetas, "zero-proportion values")->delimiter(',');
  c_density->add_option("--grid", o.grid, "rows in the table");
  c_density->add_option("--nodes", o.nodes, "quadrature nodes");

  auto* c_nu = app.add_subcommand("nu", "theta <-> nu correspondence and theta_c");
  add_system_options(c_nu, o);
  c_nu->add_option("--theta", o.thetas, "zero-proportion values")->delimiter(',');

  auto* c_ks = app.add_subcommand("ks", "empirical vs limit KS convergence ladders");
  add_system_options(c_ks, o);
  c_ks->add_option("--k", o.krange, "degrees, default 16,32,64,128");
  c_ks->add_option("--theta", o.thetas, "zero proportions, default 0,theta_c,1")->delimiter(',');
  c_ks->add_option("--tol", o.tol, "sector solve residual tolerance");

  int n_max = 8;
  auto* c_ortho = app.add_subcommand("ortho", "recurrence fits and product integrals");
  add_system_options(c_ortho, o);
  c_ortho->add_option("--N", n_max, "highest degree in the sequence");
  c_ortho->add_option("--theta", o.thetas, "zero proportions, default 0,theta_c,1")->delimiter(',');
  c_ortho->add_option("--nodes", o.nodes, "quadrature nodes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_spectrum->parsed()) return run_spectrum(o);
    if (c_verify->parsed()) return run_verify(o, in_file, claims);
    if (c_fig->parsed()) return run_figure1(o);
    if (c_density->parsed()) return run_density(o);
    if (c_nu->parsed()) return run_nu(o);
    if (c_ks->parsed()) return run_ks(o);
    if (c_ortho->parsed()) return run_ortho(o, n_max);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const heun::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
