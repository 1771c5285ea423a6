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

#ifndef CFMIMO_SCENARIO_HPP
#define CFMIMO_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfmimo {

/// Configuration error; `what()` carries the offending field path.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure (singular system, infeasible targets, divergence, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSI sharing regime determining the beamforming architecture.
enum class CsiRegime {
  kMultiCell,            ///< each user served by its strongest AP, local CSI
  kCellFreeLocal,        ///< cluster of APs, each using its own pilots only
  kCellFreeCentralized,  ///< cluster of APs, pilots fully shared
  kCellFreeMixed,        ///< cluster of APs, local pilots plus a shared subset
};

std::string to_string(CsiRegime regime);
CsiRegime csi_regime_from_string(const std::string& name);

/// Static description of a network scenario. Distances are in meters,
/// powers in dBm at the configuration boundary; everything downstream
/// works with linear, noise-normalized quantities.
struct Scenario {
  double area_side_m = 500.0;
  int num_aps = 16;
  int antennas_per_ap = 8;
  int num_users = 32;
  double height_diff_m = 10.0;
  double shadow_std_db = 4.0;
  double shadow_decorr_m = 9.0;
  double bandwidth_hz = 20.0e6;
  double noise_figure_db = 7.0;
  int pilot_len = 10;
  double pilot_power_dbm = 20.0;
  double max_user_power_dbm = 20.0;
  int cluster_size = 4;
  CsiRegime csi_regime = CsiRegime::kCellFreeCentralized;
  std::uint64_t master_seed = 1;
  int num_drops = 1;
  int num_samples = 1000;

  /// Thermal noise power in dBm: -174 + 10 log10(B) + F.
  double noise_power_dbm() const;

  /// Per-user pilot power, linear and noise-normalized.
  double pilot_power_linear() const;

  /// Per-user maximum data power, linear and noise-normalized.
  double max_user_power_linear() const;

  /// Throws ConfigError naming the violated field.
  void validate() const;
};

double dbm_to_linear(double dbm);
double db_to_linear(double db);

/// Parses a scenario from a JSON document (string form). Unknown keys are
/// ignored so that experiment-level keys can live in the same document.
Scenario scenario_from_json_text(const std::string& text);
Scenario scenario_from_json_file(const std::string& path);

}  // namespace cfmimo

#endif  // CFMIMO_SCENARIO_HPP
