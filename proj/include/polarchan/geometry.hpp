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

#ifndef POLARCHAN_GEOMETRY_HPP
#define POLARCHAN_GEOMETRY_HPP

#include <array>
#include <cstddef>

namespace polarchan {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// A direction on the unit sphere. The constructor folds arbitrary finite
/// angles onto elevation in [0, pi] and azimuth in [0, 2*pi). Elevations
/// past a pole reflect (triangle wave with period 2*pi); a fold landing in
/// the southern hemisphere advances the azimuth by pi, a fold landing in the
/// northern hemisphere keeps its meridian. This is the single wrapping
/// convention used everywhere (see motion::wrap_to_sphere).
class UnitDirection {
  public:
    UnitDirection(double elevation_rad, double azimuth_rad);

    static UnitDirection from_degrees(double elevation_deg, double azimuth_deg);

    double elevation() const { return elevation_; }
    double azimuth() const { return azimuth_; }
    double elevation_deg() const { return rad2deg(elevation_); }
    double azimuth_deg() const { return rad2deg(azimuth_); }

  private:
    double elevation_;
    double azimuth_;
};

/// Cartesian unit vector (sin e cos a, sin e sin a, cos e). Norm 1 within 1e-12.
std::array<double, 3> unit_vector(const UnitDirection &d);

/// Cosine of the angle between two directions (dot product of unit vectors),
/// clamped to [-1, 1].
double cos_alpha(const UnitDirection &a, const UnitDirection &b);

/// Uniform linear array. Elements sit on the ray from the array reference
/// point (= the scatterer-sphere center) along `orientation`, element k at
/// distance k * spacing * wavelength. The anchored indexing keeps element
/// radii asymmetric, which is what makes the second-order distance term (and
/// with it the radial-motion dependence of the correlation) non-degenerate
/// for 2-element arrays.
struct ArrayGeometry {
    int num_elements;
    double spacing_wl;        // element spacing in wavelengths, > 0
    UnitDirection orientation; // array axis direction
    std::array<double, 3> center_m{0.0, 0.0, 0.0}; // reference point, world coords

    ArrayGeometry(int num_elements, double spacing_wl, UnitDirection orientation,
                  std::array<double, 3> center_m = {0.0, 0.0, 0.0});
};

/// Offset vector of element `index` from the array reference point, meters.
std::array<double, 3> element_offset(const ArrayGeometry &g, int index, double wavelength_m);

/// Signed axial coordinate of element `index` (index * spacing * wavelength), meters.
double element_axial_offset(const ArrayGeometry &g, int index, double wavelength_m);

/// Exact scatterer-to-element distance by the law of cosines:
/// sqrt(R^2 + r^2 - 2 R r cos_alpha).
double exact_distance(double radius_m, double element_norm_m, double cos_alpha);

/// Second-order small-offset expansion R - r c + (r^2 - (r c)^2) / (2 R),
/// accurate to O((r/R)^3 R). Valid for element_norm << radius; a guard
/// diagnostic is emitted by the correlation engine when the ratio exceeds
/// 0.1. The direction-independent r^2/(2R) term cancels in the element-pair
/// differences that feed the correlation phase.
double approx_distance(double radius_m, double element_norm_m, double cos_alpha);

/// Element-pair distance difference entering the correlation phase:
///   D_mn = (c_n - c_m) * (1 + (c_n + c_m) / (2 R))
/// with c_k the signed projection of element k's offset onto the scatterer
/// direction. Equals approx_distance(m) - approx_distance(n) and is exactly
/// antisymmetric under m <-> n.
double phase_distance_diff(const ArrayGeometry &g, int m, int n, const UnitDirection &scatterer,
                           double radius_m, double wavelength_m);

/// Radially moving scatterer sphere, R(t) = R0 + v t.
struct RadialMotion {
    double initial_radius_m;     // R0 > 0
    double radial_velocity_mps;  // signed; positive = receding

    RadialMotion(double initial_radius_m, double radial_velocity_mps);
};

} // namespace polarchan

#endif
