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
#include <random>

#include "polarchan/geometry.hpp"

using namespace polarchan;

namespace {

double norm3(const std::array<double, 3> &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

} // namespace

TEST_CASE("unit_vector axis and pole cases") {
    const auto x = unit_vector(UnitDirection(kPi / 2, 0.0));
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(x[1]) < 1e-12);
    CHECK(std::abs(x[2]) < 1e-12);

    const auto z = unit_vector(UnitDirection(0.0, 1.234));
    CHECK(std::abs(z[0]) < 1e-12);
    CHECK(std::abs(z[1]) < 1e-12);
    CHECK(z[2] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(norm3(unit_vector(UnitDirection(kPi / 3, kPi / 4))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unit_vector norm stays 1 over a random sample") {
    std::mt19937 gen(1);
    std::uniform_real_distribution<double> el(0.0, kPi), az(0.0, kTwoPi);
    for (int i = 0; i < 200; ++i)
        CHECK(norm3(unit_vector(UnitDirection(el(gen), az(gen)))) ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cos_alpha basic identities") {
    const UnitDirection a(kPi / 2, 0.0);
    CHECK(cos_alpha(a, a) == doctest::Approx(1.0));
    CHECK(cos_alpha(a, UnitDirection(kPi / 2, kPi / 2)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cos_alpha(UnitDirection(0.0, 0.3), UnitDirection(kPi, 1.8)) == doctest::Approx(-1.0));
}

TEST_CASE("element offsets are anchored at the first element") {
    const ArrayGeometry g(2, 0.1, UnitDirection(kPi / 2, 0.0));
    const double lambda = 1.0;
    const auto o0 = element_offset(g, 0, lambda);
    CHECK(norm3(o0) == doctest::Approx(0.0));
    const auto o1 = element_offset(g, 1, lambda);
    CHECK(o1[0] == doctest::Approx(0.1));
    CHECK(std::abs(o1[1]) < 1e-12);

    const ArrayGeometry one(1, 0.5, UnitDirection(0.3, 0.4));
    CHECK(norm3(element_offset(one, 0, 2.0)) == doctest::Approx(0.0));

    const ArrayGeometry three(3, 0.25, UnitDirection(kPi / 2, kPi / 2));
    CHECK(element_axial_offset(three, 1, 2.0) == doctest::Approx(0.5));

    CHECK_THROWS_AS((void)element_offset(g, 2, lambda), std::out_of_range);
    CHECK_THROWS_AS((void)element_offset(g, -1, lambda), std::out_of_range);
}

TEST_CASE("ArrayGeometry validation") {
    CHECK_THROWS_AS(ArrayGeometry(0, 0.1, UnitDirection(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ArrayGeometry(2, 0.0, UnitDirection(0, 0)), std::invalid_argument);
}

TEST_CASE("exact_distance trivial and triangle cases") {
    CHECK(exact_distance(3.0, 0.0, 0.7) == doctest::Approx(3.0));
    CHECK(exact_distance(3.0, 1.0, 1.0) == doctest::Approx(2.0));
    CHECK(exact_distance(1.0, 3.0, 1.0) == doctest::Approx(2.0));
}

TEST_CASE("exact_distance matches a 3-space triangle construction") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double radius = 0.5 + 5.0 * u01(gen);
        const double r = 2.0 * u01(gen);
        const double c = 2.0 * u01(gen) - 1.0;
        // scatterer along z, element direction at angle acos(c) in the x-z plane
        const double s = std::sqrt(1.0 - c * c);
        const double ex = r * s, ez = r * c;
        const double direct = std::sqrt(ex * ex + (radius - ez) * (radius - ez));
        CHECK(exact_distance(radius, r, c) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("exact_distance satisfies the triangle inequality") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double radius = 0.1 + 5.0 * u01(gen);
        const double r = 3.0 * u01(gen);
        const double c = 2.0 * u01(gen) - 1.0;
        const double d = exact_distance(radius, r, c);
        CHECK(d >= std::abs(radius - r) - 1e-12);
        CHECK(d <= radius + r + 1e-12);
    }
}

TEST_CASE("approx_distance direct substitutions") {
    // collinear case is exact at second order: sqrt(1 + 0.01 - 0.2) = 0.9
    CHECK(approx_distance(1.0, 0.1, 1.0) == doctest::Approx(0.9));
    CHECK(approx_distance(2.5, 0.0, 0.3) == doctest::Approx(2.5));
}

TEST_CASE("approx_distance is within 1e-3 relative of exact for r/R <= 0.05") {
    const double radius = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double r = radius * 0.05 * i / 100.0;
        for (int j = 0; j < 100; ++j) {
            const double c = -1.0 + 2.0 * j / 99.0;
            const double rel =
                std::abs(approx_distance(radius, r, c) - exact_distance(radius, r, c)) /
                exact_distance(radius, r, c);
            CHECK(rel < 1e-3);
        }
    }
}

TEST_CASE("approx_distance error decays like (r/R)^3") {
    const double radius = 2.0, c = 0.37;
    double prev = -1.0;
    for (double r = 0.08; r > 0.005; r /= 2.0) {
        const double err = std::abs(approx_distance(radius, r, c) - exact_distance(radius, r, c));
        if (prev > 0.0) {
            const double ratio = prev / err;
            CHECK(ratio > 5.5);
            CHECK(ratio < 11.0);
        }
        prev = err;
    }
}

TEST_CASE("phase_distance_diff identities") {
    const ArrayGeometry g(3, 0.1, UnitDirection(kPi / 2, 0.0));
    const UnitDirection scat(1.1, 0.4);
    const double radius = 1.0, lambda = 1.0;

    CHECK(phase_distance_diff(g, 1, 1, scat, radius, lambda) == 0.0);

    const double d01 = phase_distance_diff(g, 0, 1, scat, radius, lambda);
    const double d10 = phase_distance_diff(g, 1, 0, scat, radius, lambda);
    CHECK(d01 == -d10); // exact antisymmetry

    CHECK_THROWS_AS((void)phase_distance_diff(g, 0, 3, scat, radius, lambda), std::out_of_range);
}

TEST_CASE("phase_distance_diff equals the difference of the expanded distances") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const ArrayGeometry g(4, 0.05 + 0.2 * u01(gen),
                              UnitDirection(u01(gen) * kPi, u01(gen) * kTwoPi));
        const UnitDirection scat(u01(gen) * kPi, u01(gen) * kTwoPi);
        const double radius = 1.0 + 4.0 * u01(gen);
        const double lambda = 0.5 + u01(gen);
        const int m = static_cast<int>(u01(gen) * 4), n = static_cast<int>(u01(gen) * 4);
        const double u = cos_alpha(g.orientation, scat);
        // independent route: difference of the per-element expanded distances
        // R - c - c^2/(2R) with the signed projections c_k
        const double cm = element_axial_offset(g, m, lambda) * u;
        const double cn = element_axial_offset(g, n, lambda) * u;
        const double dm = radius - cm - cm * cm / (2.0 * radius);
        const double dn = radius - cn - cn * cn / (2.0 * radius);
        const double expected = dm - dn;
        CHECK(phase_distance_diff(g, m, n, scat, radius, lambda) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("RadialMotion validation") {
    CHECK_THROWS_AS(RadialMotion(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(RadialMotion(-1.0, 0.0), std::invalid_argument);
}
