// SPDX-License-Identifier: Apache-2.0
//
// cfmimo: cell-free massive MIMO beamforming and power control simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cfmimo/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cfmimo {

namespace {

using nlohmann::json;

template <typename T>
T require(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw ConfigError("missing key: " + key);
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("invalid value for key: " + key);
  }
}

}  // namespace

std::string to_string(CsiRegime regime) {
  switch (regime) {
    case CsiRegime::kMultiCell:
      return "MultiCell";
    case CsiRegime::kCellFreeLocal:
      return "CellFreeLocal";
    case CsiRegime::kCellFreeCentralized:
      return "CellFreeCentralized";
    case CsiRegime::kCellFreeMixed:
      return "CellFreeMixed";
  }
  return "?";
}

CsiRegime csi_regime_from_string(const std::string& name) {
  if (name == "MultiCell") return CsiRegime::kMultiCell;
  if (name == "CellFreeLocal") return CsiRegime::kCellFreeLocal;
  if (name == "CellFreeCentralized") return CsiRegime::kCellFreeCentralized;
  if (name == "CellFreeMixed") return CsiRegime::kCellFreeMixed;
  throw ConfigError("csi_regime: unknown value '" + name + "'");
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double Scenario::noise_power_dbm() const {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double Scenario::pilot_power_linear() const { return dbm_to_linear(pilot_power_dbm); }

double Scenario::max_user_power_linear() const { return dbm_to_linear(max_user_power_dbm); }

void Scenario::validate() const {
  if (area_side_m <= 0.0) throw ConfigError("area_side_m: must be positive");
  if (num_aps < 1) throw ConfigError("num_aps: must be >= 1");
  if (antennas_per_ap < 1) throw ConfigError("antennas_per_ap: must be >= 1");
  if (num_users < 1) throw ConfigError("num_users: must be >= 1");
  if (shadow_std_db < 0.0) throw ConfigError("shadow_std_db: must be >= 0");
  if (shadow_decorr_m <= 0.0) throw ConfigError("shadow_decorr_m: must be positive");
  if (bandwidth_hz <= 0.0) throw ConfigError("bandwidth_hz: must be positive");
  if (pilot_len < 1) throw ConfigError("pilot_len: must be >= 1");
  if (cluster_size < 1) throw ConfigError("cluster_size: must be >= 1");
  if (cluster_size > num_aps) throw ConfigError("cluster_size: must be <= num_aps");
  if (num_drops < 1) throw ConfigError("num_drops: must be >= 1");
  if (num_samples < 2) throw ConfigError("num_samples: must be >= 2");
  const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(num_aps))));
  if (root * root != num_aps) {
    throw ConfigError("num_aps: must be a perfect square for the regular AP grid");
  }
}

Scenario scenario_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  Scenario s;
  s.area_side_m = require<double>(j, "area_side_m");
  s.num_aps = require<int>(j, "num_aps");
  s.antennas_per_ap = require<int>(j, "antennas_per_ap");
  s.num_users = require<int>(j, "num_users");
  s.height_diff_m = require<double>(j, "height_diff_m");
  s.shadow_std_db = require<double>(j, "shadow_std_db");
  s.shadow_decorr_m = require<double>(j, "shadow_decorr_m");
  s.bandwidth_hz = require<double>(j, "bandwidth_hz");
  s.noise_figure_db = require<double>(j, "noise_figure_db");
  s.pilot_len = require<int>(j, "pilot_len");
  s.pilot_power_dbm = require<double>(j, "pilot_power_dbm");
  s.max_user_power_dbm = require<double>(j, "max_user_power_dbm");
  s.cluster_size = require<int>(j, "cluster_size");
  s.csi_regime = csi_regime_from_string(require<std::string>(j, "csi_regime"));
  s.master_seed = require<std::uint64_t>(j, "master_seed");
  s.num_drops = require<int>(j, "num_drops");
  s.num_samples = require<int>(j, "num_samples");
  s.validate();
  return s;
}

Scenario scenario_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

}  // namespace cfmimo
