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

#ifndef CFMIMO_RNG_HPP
#define CFMIMO_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace cfmimo {

/// Purpose tags for deriving independent substreams from a master seed.
/// Streams derived with distinct (drop, purpose, index) tuples are
/// statistically independent and do not depend on evaluation order, so
/// parallel drops reproduce the single-threaded results bit for bit.
enum class Purpose : std::uint64_t {
  kUserPlacement = 1,
  kShadowing = 2,
  kChannel = 3,
  kPilotNoise = 4,
  kPiEstimation = 5,
  kResidualOracle = 6,
  kSolverBattery = 7,
  kEvaluation = 8,
  kMisc = 9,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Derives a child seed from a master seed and a list of tags.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> tags);

/// Deterministic random stream. Gaussian variates use the Box-Muller
/// transform on top of the mt19937_64 engine so that sequences are
/// identical across standard library implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  RngStream(std::uint64_t master, std::uint64_t drop, Purpose purpose, std::uint64_t index = 0)
      : RngStream(derive_seed(master, {drop, static_cast<std::uint64_t>(purpose), index})) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard real Gaussian N(0, 1).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double z0 = 0.0;
    box_muller(z0, spare_);
    have_spare_ = true;
    return z0;
  }

  /// Standard circularly symmetric complex Gaussian CN(0, 1):
  /// real and imaginary parts are independent N(0, 1/2).
  std::complex<double> cgaussian() {
    double z0 = 0.0, z1 = 0.0;
    box_muller(z0, z1);
    return {z0 * kInvSqrt2, z1 * kInvSqrt2};
  }

  /// Independent child stream tagged by `tag`.
  RngStream fork(std::uint64_t tag) {
    return RngStream(derive_seed(engine_(), {tag}));
  }

 private:
  static constexpr double kInvSqrt2 = 0.70710678118654752440;

  void box_muller(double& z0, double& z1);

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace cfmimo

#endif  // CFMIMO_RNG_HPP
