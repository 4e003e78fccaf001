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

#include "polarchan/motion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarchan {

namespace {

void validate_spec(const MotionPathSpec &s) {
    if (s.segments < 1)
        throw std::invalid_argument("MotionPathSpec: segments must be >= 1 (got " +
                                    std::to_string(s.segments) + ")");
    if (!(s.dt_s > 0.0))
        throw std::invalid_argument("MotionPathSpec: dt must be > 0 s (got " +
                                    std::to_string(s.dt_s) + ")");
    if (s.sigma_elevation_rad < 0.0 || s.sigma_azimuth_rad < 0.0)
        throw std::invalid_argument("MotionPathSpec: sigmas must be >= 0");
    if (!std::isfinite(s.rate_elevation_rps) || !std::isfinite(s.rate_azimuth_rps))
        throw std::invalid_argument("MotionPathSpec: drift rates must be finite");
}

} // namespace

MotionPathSpec MotionPathSpec::with_rates(UnitDirection start, double rate_elevation_rps,
                                          double rate_azimuth_rps, double sigma_elevation_rad,
                                          double sigma_azimuth_rad, int segments, double dt_s) {
    MotionPathSpec s{start,
                     std::nullopt,
                     rate_elevation_rps,
                     rate_azimuth_rps,
                     sigma_elevation_rad,
                     sigma_azimuth_rad,
                     segments,
                     dt_s};
    validate_spec(s);
    return s;
}

MotionPathSpec MotionPathSpec::to_destination(UnitDirection start, UnitDirection dest,
                                              double sigma_elevation_rad, double sigma_azimuth_rad,
                                              int segments, double dt_s) {
    if (segments < 1 || !(dt_s > 0.0))
        throw std::invalid_argument("MotionPathSpec: segments must be >= 1 and dt > 0");
    const double horizon = segments * dt_s;
    MotionPathSpec s{start,
                     dest,
                     (dest.elevation() - start.elevation()) / horizon,
                     (dest.azimuth() - start.azimuth()) / horizon,
                     sigma_elevation_rad,
                     sigma_azimuth_rad,
                     segments,
                     dt_s};
    validate_spec(s);
    return s;
}

const UnitDirection &Trajectory::direction_at(double t_s) const {
    if (times_s.empty())
        throw std::logic_error("Trajectory: empty");
    const double dt = times_s.size() > 1 ? times_s[1] - times_s[0] : 1.0;
    if (t_s < -0.5 * dt || t_s > times_s.back() + 0.5 * dt)
        throw std::invalid_argument("Trajectory: time " + std::to_string(t_s) +
                                    " s beyond the path horizon " +
                                    std::to_string(times_s.back()) + " s");
    auto idx = static_cast<std::size_t>(std::llround(t_s / dt));
    if (idx >= times_s.size())
        idx = times_s.size() - 1;
    return directions[idx];
}

double radius_at(const RadialMotion &rm, double t_s) {
    if (t_s < 0.0)
        throw std::invalid_argument("radius_at: time must be >= 0 s");
    const double r = rm.initial_radius_m + rm.radial_velocity_mps * t_s;
    if (!(r > 0.0))
        throw std::domain_error("radius_at: sphere collapsed, R(" + std::to_string(t_s) +
                                " s) = " + std::to_string(r) + " m");
    return r;
}

std::vector<double> brownian_path(RandomStream &rng, int segments, double dt_s) {
    if (segments < 1)
        throw std::invalid_argument("brownian_path: segments must be >= 1");
    if (!(dt_s > 0.0))
        throw std::invalid_argument("brownian_path: dt must be > 0 s");
    std::vector<double> b(static_cast<std::size_t>(segments) + 1);
    b[0] = 0.0;
    const double sd = std::sqrt(dt_s);
    for (int m = 1; m <= segments; ++m)
        b[m] = b[m - 1] + sd * rng.normal();
    return b;
}

UnitDirection wrap_to_sphere(double raw_elevation_rad, double raw_azimuth_rad) {
    return UnitDirection(raw_elevation_rad, raw_azimuth_rad);
}

Trajectory motion_path(const MotionPathSpec &spec, RandomStream &rng) {
    validate_spec(spec);
    Trajectory traj;
    traj.times_s.reserve(spec.segments + 1);
    traj.directions.reserve(spec.segments + 1);

    // sigma = 0 must not consume randomness, so the deterministic path is
    // bit-identical across seeds.
    std::vector<double> b_el, b_az;
    if (spec.sigma_elevation_rad > 0.0)
        b_el = brownian_path(rng, spec.segments, spec.dt_s);
    if (spec.sigma_azimuth_rad > 0.0)
        b_az = brownian_path(rng, spec.segments, spec.dt_s);

    for (int m = 0; m <= spec.segments; ++m) {
        const double t = m * spec.dt_s;
        double raw_el = spec.start.elevation() + spec.rate_elevation_rps * t;
        double raw_az = spec.start.azimuth() + spec.rate_azimuth_rps * t;
        if (!b_el.empty())
            raw_el += spec.sigma_elevation_rad * b_el[m];
        if (!b_az.empty())
            raw_az += spec.sigma_azimuth_rad * b_az[m];
        traj.times_s.push_back(t);
        traj.directions.push_back(wrap_to_sphere(raw_el, raw_az));
    }
    return traj;
}

std::vector<Trajectory> trajectory_bundle(const MotionPathSpec &spec, std::uint64_t seed,
                                          int n_paths) {
    if (n_paths < 1)
        throw std::invalid_argument("trajectory_bundle: n_paths must be >= 1");
    std::vector<Trajectory> out;
    out.reserve(n_paths);
    for (int k = 0; k < n_paths; ++k) {
        auto rng = RandomStream::derive(seed, {stream_tag::trajectory, static_cast<std::uint64_t>(k)});
        out.push_back(motion_path(spec, rng));
    }
    return out;
}

} // namespace polarchan
