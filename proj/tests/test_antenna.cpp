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

#include <cmath>
#include <doctest.h>
#include <stdexcept>

#include "polarchan/antenna.hpp"

using namespace polarchan;

TEST_CASE("vertical dipole pattern basics") {
    // broadside of an untilted dipole
    CHECK(field_pattern_v(UnitDirection(kPi / 2, 1.23), 0.0) == doctest::Approx(1.0));
    // axial null
    CHECK(field_pattern_v(UnitDirection(1e-9, 0.0), 0.0) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("shape factor limit near xi = +-1") {
    CHECK(dipole_shape_factor(1.0 - 1e-6) == doctest::Approx(kPi / 4.0).epsilon(1e-5));
    CHECK(dipole_shape_factor(-1.0 + 1e-6) == doctest::Approx(kPi / 4.0).epsilon(1e-5));
    for (double eps : {1e-7, 1e-8, 1e-9, 1e-10, 0.0})
        CHECK(std::abs(dipole_shape_factor(1.0 - eps) - kPi / 4.0) < 1e-6);
}

TEST_CASE("horizontal pattern of a vertical dipole vanishes") {
    for (double el = 0.05; el < kPi; el += 0.2)
        for (double az = 0.0; az < kTwoPi; az += 0.35)
            CHECK(field_pattern_h(UnitDirection(el, az), 0.0) == 0.0);
}

TEST_CASE("horizontal dipole substitution value") {
    CHECK(field_pattern_h(UnitDirection(kPi / 2, kPi / 2), kPi / 2) == doctest::Approx(1.0));
}

TEST_CASE("patterns are finite and nonnegative everywhere") {
    for (double tilt : {0.0, kPi / 4, -kPi / 4, kPi / 2, 1.1}) {
        for (double el = 0.0; el <= kPi + 1e-12; el += kPi / 37)
            for (double az = 0.0; az < kTwoPi; az += kTwoPi / 41) {
                const UnitDirection d(el, az);
                const double v = field_pattern_v(d, tilt);
                const double h = field_pattern_h(d, tilt);
                CHECK(std::isfinite(v));
                CHECK(std::isfinite(h));
                CHECK(v >= 0.0);
                CHECK(h >= 0.0);
            }
    }
}

TEST_CASE("vertical dipole pattern is azimuth-independent") {
    for (double el = 0.1; el < kPi; el += 0.3) {
        const double ref = field_pattern_v(UnitDirection(el, 0.0), 0.0);
        for (double az = 0.0; az < kTwoPi; az += 0.7)
            CHECK(field_pattern_v(UnitDirection(el, az), 0.0) == doctest::Approx(ref));
    }
}

TEST_CASE("tilt reflection symmetries") {
    // the axis tilts in the x-z plane, so gamma -> -gamma mirrors x -> -x,
    // i.e. azimuth -> pi - azimuth; the same-tilt mirror is azimuth -> -azimuth
    const double tilt = 0.6;
    for (double el = 0.1; el < kPi; el += 0.4)
        for (double az = 0.1; az < kTwoPi; az += 0.9) {
            const UnitDirection d(el, az);
            const UnitDirection dx(el, kPi - az);
            CHECK(field_pattern_v(d, tilt) == doctest::Approx(field_pattern_v(dx, -tilt)));
            CHECK(field_pattern_h(d, tilt) == doctest::Approx(field_pattern_h(dx, -tilt)));
            const UnitDirection dy(el, kTwoPi - az);
            CHECK(field_pattern_v(d, tilt) == doctest::Approx(field_pattern_v(dy, tilt)));
            CHECK(field_pattern_h(d, tilt) == doctest::Approx(field_pattern_h(dy, tilt)));
        }
}

TEST_CASE("pattern magnitudes are pi-periodic in the tilt") {
    for (double el = 0.2; el < kPi; el += 0.5)
        for (double az = 0.0; az < kTwoPi; az += 1.1) {
            const UnitDirection d(el, az);
            CHECK(field_pattern_v(d, -kPi / 4) ==
                  doctest::Approx(field_pattern_v(d, 3 * kPi / 4)).epsilon(1e-12));
            CHECK(field_pattern_h(d, -kPi / 4) ==
                  doctest::Approx(field_pattern_h(d, 3 * kPi / 4)).epsilon(1e-12));
        }
}

TEST_CASE("presets") {
    const auto vv = preset_config("VV", 2, 2);
    CHECK(vv.tx_tilts_rad == std::vector<double>{0.0, 0.0});
    CHECK(vv.rx_tilts_rad == std::vector<double>{0.0, 0.0});
    CHECK(vv.label == "VV");

    const auto vh = preset_config("VH", 2, 2);
    CHECK(vh.tx_tilts_rad[0] == 0.0);
    CHECK(vh.tx_tilts_rad[1] == doctest::Approx(kPi / 2));
    CHECK(vh.rx_tilts_rad[1] == doctest::Approx(kPi / 2));

    const auto s45 = preset_config("SLANT45", 2, 2);
    CHECK(s45.tx_tilts_rad[0] == doctest::Approx(kPi / 4));
    CHECK(s45.tx_tilts_rad[1] == doctest::Approx(-kPi / 4));
    CHECK(s45.rx_tilts_rad[0] == doctest::Approx(kPi / 4));
    CHECK(s45.rx_tilts_rad[1] == doctest::Approx(-kPi / 4));

    CHECK_THROWS_AS((void)preset_config("XX", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)preset_config("VV", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(DipoleElement(std::nan("")), std::invalid_argument);
}
