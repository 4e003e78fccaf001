// SPDX-License-Identifier: Apache-2.0
//
// polarchan - dynamic polarized MIMO channel simulator with moving scatterer clusters
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

#ifndef POLARCHAN_RNG_HPP
#define POLARCHAN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace polarchan {

// Stream labels for derived substreams. Every stochastic consumer owns a
// stream derived from (scenario seed, label, indices...), so results do not
// depend on evaluation order or worker count.
namespace stream_tag {
inline constexpr std::uint64_t trajectory = 0x10;
inline constexpr std::uint64_t channel_draw = 0x20;
inline constexpr std::uint64_t mc_scatterers_tx = 0x30;
inline constexpr std::uint64_t mc_scatterers_rx = 0x31;
inline constexpr std::uint64_t motion_demo = 0x40;
} // namespace stream_tag

/// Deterministic random stream: mt19937_64 plus explicit uniform/normal maps
/// (Box-Muller), so draw sequences are reproducible bit-for-bit across
/// platforms and standard library versions.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : gen_(mix(mix(seed) ^ 0x9E3779B97F4A7C15ULL)) {}

    /// Child stream fully determined by (seed, path components).
    static RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = mix(seed ^ 0xD1B54A32D192ED03ULL);
        for (std::uint64_t c : path)
            h = mix(h ^ mix(c + 0x9E3779B97F4A7C15ULL));
        return RandomStream(h);
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; never returns 0 (safe to pass to log).
    double uniform_open() { return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

  private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace polarchan

#endif
