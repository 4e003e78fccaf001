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

#include "polarchan/antenna.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarchan {

DipoleElement::DipoleElement(double tilt_rad) : tilt_rad(tilt_rad) {
    if (!std::isfinite(tilt_rad))
        throw std::invalid_argument("DipoleElement: tilt must be finite");
}

double dipole_shape_factor(double xi) {
    const double den = (1.0 - xi) * (1.0 + xi);
    if (std::abs(den) < 1e-9)
        return kPi / 4.0;
    return std::cos(kPi * xi / 2.0) / den;
}

double field_pattern_v(const UnitDirection &d, double tilt_rad) {
    const double se = std::sin(d.elevation()), ce = std::cos(d.elevation());
    const double ca = std::cos(d.azimuth());
    const double sg = std::sin(tilt_rad), cg = std::cos(tilt_rad);
    const double xi = se * ca * sg + ce * cg;
    return std::abs((ce * ca * sg - se * cg) * dipole_shape_factor(xi));
}

double field_pattern_h(const UnitDirection &d, double tilt_rad) {
    const double se = std::sin(d.elevation()), ce = std::cos(d.elevation());
    const double ca = std::cos(d.azimuth()), sa = std::sin(d.azimuth());
    const double sg = std::sin(tilt_rad), cg = std::cos(tilt_rad);
    const double xi = se * ca * sg + ce * cg;
    return std::abs(sa * sg * dipole_shape_factor(xi));
}

PolarizationConfig preset_config(std::string_view name, int num_tx, int num_rx) {
    if (num_tx != 2 || num_rx != 2)
        throw std::invalid_argument("preset polarizations are defined for 2x2 arrays (got " +
                                    std::to_string(num_tx) + "x" + std::to_string(num_rx) + ")");
    if (name == "VV")
        return PolarizationConfig{{0.0, 0.0}, {0.0, 0.0}, "VV"};
    if (name == "VH")
        return PolarizationConfig{{0.0, kPi / 2.0}, {0.0, kPi / 2.0}, "VH"};
    if (name == "SLANT45")
        return PolarizationConfig{{kPi / 4.0, -kPi / 4.0}, {kPi / 4.0, -kPi / 4.0}, "SLANT45"};
    throw std::invalid_argument("unknown polarization preset '" + std::string(name) +
                                "' (expected VV, VH or SLANT45)");
}

} // namespace polarchan
