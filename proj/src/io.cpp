#include "heun/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace heun {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Eigen::Vector3d parse_triple(const std::string& key, std::string value) {
  value = strip(value);
  if (value.size() < 2 || value.front() != '[' || value.back() != ']')
    raise(ErrorCode::ParseError, key + " must be an array [v1, v2, v3]");
  value = value.substr(1, value.size() - 2);
  std::stringstream ss(value);
  std::string item;
  Eigen::Vector3d out;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty()) raise(ErrorCode::ParseError, key + " has an empty entry");
    if (n >= 3) raise(ErrorCode::ParseError, key + " must have exactly 3 entries");
    size_t pos = 0;
    try {
      out[n] = std::stod(item, &pos);
    } catch (const std::exception&) {
      raise(ErrorCode::ParseError, key + " entry '" + item + "' is not a number");
    }
    if (pos != item.size())
      raise(ErrorCode::ParseError, key + " entry '" + item + "' is not a number");
    ++n;
  }
  if (n != 3) raise(ErrorCode::ParseError, key + " must have exactly 3 entries");
  return out;
}

}  // namespace

LameSystem parse_system_toml(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  bool have_alpha = false, have_rho = false;
  Eigen::Vector3d alpha, rho;
  while (std::getline(ss, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(ErrorCode::ParseError, "expected key = [..] lines, got '" + line + "'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = line.substr(eq + 1);
    if (key == "alpha") {
      alpha = parse_triple(key, value);
      have_alpha = true;
    } else if (key == "rho") {
      rho = parse_triple(key, value);
      have_rho = true;
    } else {
      raise(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  }
  if (!have_alpha || !have_rho)
    raise(ErrorCode::ParseError, "config needs both alpha and rho");
  return validate_system(alpha, rho);
}

LameSystem load_system_toml(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system_toml(ss.str());
}

nlohmann::ordered_json spectrum_to_json(const VanVleckSpectrum& spec) {
  nlohmann::ordered_json j;
  j["k"] = spec.k;
  j["mu"] = spec.mu;
  j["nus"] = std::vector<double>(spec.nus.data(), spec.nus.data() + spec.nus.size());
  std::vector<std::vector<double>> coeffs;
  const Eigen::MatrixXd cd = spec.coeffs_double();
  for (Eigen::Index c = 0; c < cd.cols(); ++c)
    coeffs.emplace_back(cd.col(c).data(), cd.col(c).data() + cd.rows());
  j["coefficients"] = coeffs;
  j["affine"] = {{"scale", spec.to_canonical.scale}, {"offset", spec.to_canonical.offset}};
  j["system"] = {{"alpha", {spec.system.alpha[0], spec.system.alpha[1], spec.system.alpha[2]}},
                 {"rho", {spec.system.rho[0], spec.system.rho[1], spec.system.rho[2]}}};
  return j;
}

VanVleckSpectrum spectrum_from_json(const nlohmann::json& j) {
  VanVleckSpectrum spec;
  try {
    spec.k = j.at("k").get<int>();
    spec.mu = j.at("mu").get<double>();
    const auto nus = j.at("nus").get<std::vector<double>>();
    const auto coeffs = j.at("coefficients").get<std::vector<std::vector<double>>>();
    const auto alpha = j.at("system").at("alpha").get<std::vector<double>>();
    const auto rho = j.at("system").at("rho").get<std::vector<double>>();
    if (alpha.size() != 3 || rho.size() != 3)
      raise(ErrorCode::ParseError, "system must carry three abscissas and charges");
    spec.system = validate_system(Eigen::Vector3d(alpha[0], alpha[1], alpha[2]),
                                  Eigen::Vector3d(rho[0], rho[1], rho[2]));
    auto [csys, map] = canonical_rescale(spec.system);
    spec.canonical = csys;
    spec.to_canonical = map;
    const int n = spec.k + 1;
    if (spec.k < 1 || int(nus.size()) != n || int(coeffs.size()) != n)
      raise(ErrorCode::ParseError, "spectrum must carry k+1 labels");
    spec.nus.resize(n);
    spec.nus_dd.resize(n);
    spec.coeffs.resize(n, n);
    for (int c = 0; c < n; ++c) {
      spec.nus[c] = nus[c];
      spec.nus_dd[c] = DDouble(nus[c]);
      if (int(coeffs[c].size()) != n)
        raise(ErrorCode::ParseError, "coefficient vectors must have length k+1");
      if (coeffs[c][n - 1] != 1.0)
        raise(ErrorCode::ParseError, "coefficient vectors must be monic");
      for (int r = 0; r < n; ++r) spec.coeffs(r, c) = DDouble(coeffs[c][r]);
      if (c > 0 && !(spec.nus[c] > spec.nus[c - 1]))
        raise(ErrorCode::ParseError, "nus must be strictly increasing");
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("bad spectrum JSON: ") + e.what());
  }
  return spec;
}

nlohmann::ordered_json report_to_json(const InterlacingReport& rep) {
  nlohmann::ordered_json j;
  j["claim"] = rep.claim;
  nlohmann::ordered_json params;
  if (rep.k >= 0) params["k"] = rep.k;
  if (rep.j >= 0) params["j"] = rep.j;
  if (rep.i >= 0) params["i"] = rep.i;
  j["params"] = params;
  j["verdict"] = rep.holds ? "holds" : "fails";
  j["min_margin"] = rep.min_margin_ulps;
  j["witnesses"] = rep.witnesses;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

std::string solutions_to_csv(const std::vector<StieltjesSolution>& sols) {
  int kmax = 0;
  for (const auto& s : sols) kmax = std::max(kmax, s.k);
  std::string out = "k,j,nu";
  for (int i = 1; i <= kmax; ++i) out += ",z" + std::to_string(i);
  out += "\n";
  for (const auto& s : sols) {
    out += std::to_string(s.k) + "," + std::to_string(s.j) + "," + fmt17(s.nu);
    for (int i = 0; i < kmax; ++i)
      out += "," + (i < s.zeros.size() ? fmt17(s.zeros[i]) : std::string());
    out += "\n";
  }
  return out;
}

std::string figure_dataset_csv(const std::vector<StieltjesSolution>& sols_k,
                               const std::vector<StieltjesSolution>& sols_k1) {
  const int k = sols_k.empty() ? 0 : sols_k.front().k;
  const int k1 = sols_k1.empty() ? 0 : sols_k1.front().k;
  std::string out = "j";
  for (int i = 1; i <= k; ++i) out += ",zk" + std::to_string(i);
  out += ",nuk";
  for (int i = 1; i <= k1; ++i) out += ",zk1_" + std::to_string(i);
  out += ",nuk1\n";
  const size_t rows = std::max(sols_k.size(), sols_k1.size());
  for (size_t j = 0; j < rows; ++j) {
    out += std::to_string(j + 1);
    if (j < sols_k.size()) {
      for (int i = 0; i < k; ++i) out += "," + fmt17(sols_k[j].zeros[i]);
      out += "," + fmt17(sols_k[j].nu);
    } else {
      for (int i = 0; i <= k; ++i) out += ",";
    }
    if (j < sols_k1.size()) {
      for (int i = 0; i < k1; ++i) out += "," + fmt17(sols_k1[j].zeros[i]);
      out += "," + fmt17(sols_k1[j].nu);
    } else {
      for (int i = 0; i <= k1; ++i) out += ",";
    }
    out += "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
}

}  // namespace heun
