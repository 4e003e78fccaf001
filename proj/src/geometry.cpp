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

#include "polarchan/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarchan {

namespace {

// Normative angle fold, calibrated on the reference trajectory endpoints:
// elevation reduced mod 2*pi; a value in (pi, 2*pi) reflects to 2*pi - f,
// advancing the azimuth by pi only when the fold lands in the southern
// hemisphere (f <= 3*pi/2).
void wrap_angles(double &elevation, double &azimuth) {
    if (!std::isfinite(elevation) || !std::isfinite(azimuth))
        throw std::invalid_argument("UnitDirection: angles must be finite");
    double f = std::fmod(elevation, kTwoPi);
    if (f < 0.0)
        f += kTwoPi;
    if (f > kPi) {
        if (f <= 1.5 * kPi)
            azimuth += kPi;
        f = kTwoPi - f;
    }
    elevation = f;
    double a = std::fmod(azimuth, kTwoPi);
    if (a < 0.0)
        a += kTwoPi;
    azimuth = a;
}

} // namespace

UnitDirection::UnitDirection(double elevation_rad, double azimuth_rad)
    : elevation_(elevation_rad), azimuth_(azimuth_rad) {
    wrap_angles(elevation_, azimuth_);
}

UnitDirection UnitDirection::from_degrees(double elevation_deg, double azimuth_deg) {
    return UnitDirection(deg2rad(elevation_deg), deg2rad(azimuth_deg));
}

std::array<double, 3> unit_vector(const UnitDirection &d) {
    const double se = std::sin(d.elevation());
    return {se * std::cos(d.azimuth()), se * std::sin(d.azimuth()), std::cos(d.elevation())};
}

double cos_alpha(const UnitDirection &a, const UnitDirection &b) {
    const auto ua = unit_vector(a);
    const auto ub = unit_vector(b);
    const double c = ua[0] * ub[0] + ua[1] * ub[1] + ua[2] * ub[2];
    return std::clamp(c, -1.0, 1.0);
}

ArrayGeometry::ArrayGeometry(int num_elements, double spacing_wl, UnitDirection orientation,
                             std::array<double, 3> center_m)
    : num_elements(num_elements), spacing_wl(spacing_wl), orientation(orientation),
      center_m(center_m) {
    if (num_elements < 1)
        throw std::invalid_argument("ArrayGeometry: num_elements must be >= 1 (got " +
                                    std::to_string(num_elements) + ")");
    if (!(spacing_wl > 0.0))
        throw std::invalid_argument("ArrayGeometry: spacing must be > 0 wavelengths (got " +
                                    std::to_string(spacing_wl) + ")");
}

double element_axial_offset(const ArrayGeometry &g, int index, double wavelength_m) {
    if (index < 0 || index >= g.num_elements)
        throw std::out_of_range("element index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(g.num_elements) + ")");
    return static_cast<double>(index) * g.spacing_wl * wavelength_m;
}

std::array<double, 3> element_offset(const ArrayGeometry &g, int index, double wavelength_m) {
    const double a = element_axial_offset(g, index, wavelength_m);
    const auto u = unit_vector(g.orientation);
    return {a * u[0], a * u[1], a * u[2]};
}

double exact_distance(double radius_m, double element_norm_m, double cos_alpha) {
    const double d2 = radius_m * radius_m + element_norm_m * element_norm_m -
                      2.0 * radius_m * element_norm_m * cos_alpha;
    return std::sqrt(std::max(d2, 0.0));
}

double approx_distance(double radius_m, double element_norm_m, double cos_alpha) {
    const double c = element_norm_m * cos_alpha;
    return radius_m - c + (element_norm_m * element_norm_m - c * c) / (2.0 * radius_m);
}

double phase_distance_diff(const ArrayGeometry &g, int m, int n, const UnitDirection &scatterer,
                           double radius_m, double wavelength_m) {
    if (!(radius_m > 0.0))
        throw std::invalid_argument("phase_distance_diff: radius must be > 0");
    const double u = cos_alpha(g.orientation, scatterer);
    const double cm = element_axial_offset(g, m, wavelength_m) * u;
    const double cn = element_axial_offset(g, n, wavelength_m) * u;
    return (cn - cm) * (1.0 + (cn + cm) / (2.0 * radius_m));
}

RadialMotion::RadialMotion(double initial_radius_m, double radial_velocity_mps)
    : initial_radius_m(initial_radius_m), radial_velocity_mps(radial_velocity_mps) {
    if (!(initial_radius_m > 0.0))
        throw std::invalid_argument("RadialMotion: initial radius must be > 0 m (got " +
                                    std::to_string(initial_radius_m) + ")");
}

} // namespace polarchan
