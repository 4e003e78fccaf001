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

#ifndef POLARCHAN_MOTION_HPP
#define POLARCHAN_MOTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polarchan/geometry.hpp"
#include "polarchan/rng.hpp"

namespace polarchan {

/// Drifted Brownian motion path on the sphere, sampled on the uniform grid
/// t_m = m * dt, m = 0..segments:
///   raw elevation(t_m) = start.elevation + rate_el * t_m + sigma_el * B_el(t_m)
/// (azimuth analogous, with an independent Brownian component), each sample
/// wrapped onto the sphere. With a destination given, the drift rates are
/// (dest - start) / (segments * dt) per axis so the drift line reaches dest
/// at t = segments * dt.
struct MotionPathSpec {
    UnitDirection start;
    std::optional<UnitDirection> dest;
    double rate_elevation_rps;  // drift, rad/s
    double rate_azimuth_rps;    // drift, rad/s
    double sigma_elevation_rad; // Brownian scale, >= 0
    double sigma_azimuth_rad;   // Brownian scale, >= 0
    int segments;               // M >= 1
    double dt_s;                // > 0

    static MotionPathSpec with_rates(UnitDirection start, double rate_elevation_rps,
                                     double rate_azimuth_rps, double sigma_elevation_rad,
                                     double sigma_azimuth_rad, int segments, double dt_s);

    static MotionPathSpec to_destination(UnitDirection start, UnitDirection dest,
                                         double sigma_elevation_rad, double sigma_azimuth_rad,
                                         int segments, double dt_s);

    double horizon_s() const { return segments * dt_s; }
    bool is_deterministic() const { return sigma_elevation_rad == 0.0 && sigma_azimuth_rad == 0.0; }
};

/// Realized time-indexed path. samples[0] is the start direction (B(0) = 0).
struct Trajectory {
    std::vector<double> times_s;
    std::vector<UnitDirection> directions;

    /// Direction at the nearest grid sample. Throws if t is negative or past
    /// the horizon (beyond half a grid step).
    const UnitDirection &direction_at(double t_s) const;
};

/// R(t) = R0 + v t; throws on a collapsed sphere (result <= 0) or t < 0.
double radius_at(const RadialMotion &rm, double t_s);

/// Standard Brownian path on the grid t_m = m * dt: B(0) = 0, independent
/// Gaussian increments of variance dt. Returns segments + 1 values.
std::vector<double> brownian_path(RandomStream &rng, int segments, double dt_s);

/// Fold raw angles onto the sphere (same convention as the UnitDirection
/// constructor; see geometry.hpp).
UnitDirection wrap_to_sphere(double raw_elevation_rad, double raw_azimuth_rad);

/// One realized motion path. With both sigmas zero the result is fully
/// deterministic and the rng is never touched.
Trajectory motion_path(const MotionPathSpec &spec, RandomStream &rng);

/// n_paths independent paths; path k uses the stream derived from
/// (seed, stream_tag::trajectory, k), so the bundle is reproducible and
/// order-independent.
std::vector<Trajectory> trajectory_bundle(const MotionPathSpec &spec, std::uint64_t seed,
                                          int n_paths);

} // namespace polarchan

#endif
