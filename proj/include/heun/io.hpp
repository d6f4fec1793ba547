#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "heun/interlacing.hpp"
#include "heun/spectrum.hpp"
#include "heun/system.hpp"
#include "heun/zeros.hpp"

namespace heun {

// 17 significant digits: doubles survive a round trip through text
std::string fmt17(double x);

// flat TOML file with keys alpha = [a1, a2, a3] and rho = [r1, r2, r3]
LameSystem load_system_toml(const std::string& path);
LameSystem parse_system_toml(const std::string& text);

nlohmann::ordered_json spectrum_to_json(const VanVleckSpectrum& spec);
VanVleckSpectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const InterlacingReport& rep);

// CSV rows: k, j, nu, zeros... (original frame); header row included
std::string solutions_to_csv(const std::vector<StieltjesSolution>& sols);

std::string figure_dataset_csv(const std::vector<StieltjesSolution>& sols_k,
                               const std::vector<StieltjesSolution>& sols_k1);

void write_file(const std::string& path, const std::string& content);

}  // namespace heun
