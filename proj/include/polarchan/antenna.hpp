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

#ifndef POLARCHAN_ANTENNA_HPP
#define POLARCHAN_ANTENNA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "polarchan/geometry.hpp"

namespace polarchan {

/// Half-wavelength dipole whose axis is tilted by `tilt_rad` from the z axis
/// in the x-z plane. Pattern magnitudes are pi-periodic in the tilt.
struct DipoleElement {
    double tilt_rad;

    explicit DipoleElement(double tilt_rad);
};

/// Magnitude of the vertically polarized field of a tilted half-wave dipole:
///   |(cos e cos a sin g - sin e cos g) * cos(pi xi / 2) / (1 - xi^2)|
/// with xi = sin e cos a sin g + cos e cos g. The removable singularity at
/// xi = +-1 is evaluated by its limit pi/4 inside a narrow band.
double field_pattern_v(const UnitDirection &d, double tilt_rad);

/// Horizontally polarized counterpart: |sin a sin g * cos(pi xi / 2) / (1 - xi^2)|.
double field_pattern_h(const UnitDirection &d, double tilt_rad);

/// cos(pi xi / 2) / (1 - xi^2) with the xi -> +-1 limit handled. Exposed for
/// the pattern continuity tests.
double dipole_shape_factor(double xi);

/// Per-element dipole tilts on both sides of the link.
struct PolarizationConfig {
    std::vector<double> tx_tilts_rad;
    std::vector<double> rx_tilts_rad;
    std::string label;
};

/// Named 2x2 configurations: VV (all vertical), VH (one vertical, one
/// horizontal per side), SLANT45 (+45/-45 per side). Presets require
/// S = U = 2; build a PolarizationConfig directly for anything else.
PolarizationConfig preset_config(std::string_view name, int num_tx, int num_rx);

} // namespace polarchan

#endif
