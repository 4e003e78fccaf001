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

#include "polarchan/motion.hpp"

using namespace polarchan;

TEST_CASE("radius_at linear motion and collapse") {
    CHECK(radius_at(RadialMotion(1.0, 10.0), 0.0) == doctest::Approx(1.0));
    CHECK(radius_at(RadialMotion(1.0, 0.0), 7.0) == doctest::Approx(1.0));
    CHECK(radius_at(RadialMotion(1.0, 10.0), 1.0) == doctest::Approx(11.0));
    CHECK_THROWS_AS((void)radius_at(RadialMotion(1.0, -1.0), 1.5), std::domain_error);
    CHECK_THROWS_AS((void)radius_at(RadialMotion(1.0, 1.0), -0.1), std::invalid_argument);
}

TEST_CASE("brownian_path starts at zero with the right increment law") {
    RandomStream rng(21);
    const auto b = brownian_path(rng, 100, 0.01);
    REQUIRE(b.size() == 101);
    CHECK(b[0] == 0.0);

    // Var[B(1)] over many paths
    const int paths = 20000;
    double sum = 0.0, sum2 = 0.0;
    double c1 = 0.0, c2 = 0.0, c12 = 0.0; // disjoint increments B(.5)-B(0), B(1)-B(.5)
    RandomStream rng2(22);
    for (int p = 0; p < paths; ++p) {
        const auto path = brownian_path(rng2, 100, 0.01);
        const double x = path[100];
        sum += x;
        sum2 += x * x;
        const double i1 = path[50], i2 = path[100] - path[50];
        c1 += i1;
        c2 += i2;
        c12 += i1 * i2;
    }
    const double var = sum2 / paths - (sum / paths) * (sum / paths);
    CHECK(var == doctest::Approx(1.0).epsilon(0.03));
    const double cov = c12 / paths - (c1 / paths) * (c2 / paths);
    const double rho = cov / 0.5; // each increment has variance 0.5
    CHECK(std::abs(rho) < 0.02);
}

TEST_CASE("wrap_to_sphere anchor values") {
    auto check = [](double el_deg, double az_deg, double exp_el, double exp_az) {
        const UnitDirection d = wrap_to_sphere(deg2rad(el_deg), deg2rad(az_deg));
        CHECK(d.elevation_deg() == doctest::Approx(exp_el).epsilon(1e-12));
        CHECK(d.azimuth_deg() == doctest::Approx(exp_az).epsilon(1e-12));
    };
    check(170.0, 10.0, 170.0, 10.0);
    check(190.0, 10.0, 170.0, 190.0);  // southern fold advances the meridian
    check(45.0, 370.0, 45.0, 10.0);    // plain modular azimuth
    check(315.0, 105.0, 45.0, 105.0);  // fold past the antipode keeps the meridian
    check(135.0, 285.0, 135.0, 285.0);
}

TEST_CASE("motion_path reproduces the reference drift endpoints") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 330.0),
                                                 deg2rad(45.0), deg2rad(-45.0), 0.0, 0.0, 100,
                                                 0.05);
    RandomStream rng(31);
    const Trajectory tr = motion_path(spec, rng);
    const auto &at1 = tr.direction_at(1.0);
    CHECK(std::abs(at1.elevation() - deg2rad(135.0)) < 1e-9);
    CHECK(std::abs(at1.azimuth() - deg2rad(285.0)) < 1e-9);
    const auto &at5 = tr.direction_at(5.0);
    CHECK(std::abs(at5.elevation() - deg2rad(45.0)) < 1e-9);
    CHECK(std::abs(at5.azimuth() - deg2rad(105.0)) < 1e-9);
}

TEST_CASE("motion_path with zero drift and zero sigma stays put") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(70.0, 20.0), 0.0, 0.0,
                                                 0.0, 0.0, 50, 0.1);
    RandomStream rng(32);
    const Trajectory tr = motion_path(spec, rng);
    for (const auto &d : tr.directions) {
        CHECK(d.elevation_deg() == doctest::Approx(70.0));
        CHECK(d.azimuth_deg() == doctest::Approx(20.0));
    }
}

TEST_CASE("deterministic paths are independent of the rng seed") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 330.0),
                                                 deg2rad(45.0), deg2rad(-45.0), 0.0, 0.0, 40,
                                                 0.05);
    RandomStream a(1), b(999);
    const Trajectory ta = motion_path(spec, a), tb = motion_path(spec, b);
    for (std::size_t i = 0; i < ta.directions.size(); ++i) {
        CHECK(ta.directions[i].elevation() == tb.directions[i].elevation());
        CHECK(ta.directions[i].azimuth() == tb.directions[i].azimuth());
    }
}

TEST_CASE("destination form reaches the destination at the horizon") {
    const auto spec = MotionPathSpec::to_destination(UnitDirection::from_degrees(90.0, 330.0),
                                                     UnitDirection::from_degrees(135.0, 285.0),
                                                     0.0, 0.0, 80, 0.025);
    RandomStream rng(33);
    const Trajectory tr = motion_path(spec, rng);
    const auto &end = tr.directions.back();
    CHECK(end.elevation_deg() == doctest::Approx(135.0).epsilon(1e-10));
    CHECK(end.azimuth_deg() == doctest::Approx(285.0).epsilon(1e-10));
}

TEST_CASE("trajectories respect the sphere invariants") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 330.0),
                                                 deg2rad(45.0), deg2rad(-45.0), deg2rad(15.0),
                                                 deg2rad(15.0), 400, 0.025);
    RandomStream rng(34);
    const Trajectory tr = motion_path(spec, rng);
    for (const auto &d : tr.directions) {
        CHECK(d.elevation() >= 0.0);
        CHECK(d.elevation() <= kPi);
        CHECK(d.azimuth() >= 0.0);
        CHECK(d.azimuth() < kTwoPi);
    }
}

TEST_CASE("trajectory_bundle shares the start and is seed-deterministic") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 10.0), 0.1,
                                                 -0.2, 0.02, 0.02, 60, 0.05);
    const auto bundle = trajectory_bundle(spec, 77, 8);
    REQUIRE(bundle.size() == 8);
    for (const auto &tr : bundle) {
        CHECK(tr.directions.front().elevation_deg() == doctest::Approx(90.0));
        CHECK(tr.directions.front().azimuth_deg() == doctest::Approx(10.0));
    }
    // n_paths = 1 equals a single path on the same derived stream
    const auto one = trajectory_bundle(spec, 77, 1);
    auto rng = RandomStream::derive(77, {stream_tag::trajectory, 0});
    const Trajectory direct = motion_path(spec, rng);
    for (std::size_t i = 0; i < direct.directions.size(); ++i)
        CHECK(one[0].directions[i].elevation() == direct.directions[i].elevation());

    const auto again = trajectory_bundle(spec, 77, 8);
    CHECK(again[5].directions[33].azimuth() == bundle[5].directions[33].azimuth());
}

TEST_CASE("bundle elevation variance follows sigma^2 t") {
    const double sigma = 0.05;
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 180.0), 0.0,
                                                 0.0, sigma, 0.0, 100, 0.01);
    const auto bundle = trajectory_bundle(spec, 55, 10000);
    double sum = 0.0, sum2 = 0.0, mean_drift = 0.0;
    for (const auto &tr : bundle) {
        const double el = tr.directions.back().elevation(); // no fold at these scales
        sum += el;
        sum2 += el * el;
        mean_drift += el - deg2rad(90.0);
    }
    const int n = static_cast<int>(bundle.size());
    const double var = sum2 / n - (sum / n) * (sum / n);
    CHECK(var == doctest::Approx(sigma * sigma * 1.0).epsilon(0.05));
    // mean path tracks the (flat) drift line
    CHECK(std::abs(mean_drift / n) < 3.0 * sigma / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("bundle mean path follows a nonzero drift line") {
    const double sigma = 0.04, rate = 0.2;
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(80.0, 200.0), rate,
                                                 -rate, sigma, sigma, 100, 0.01);
    const auto bundle = trajectory_bundle(spec, 56, 4000);
    double mean_el = 0.0, mean_az = 0.0;
    for (const auto &tr : bundle) {
        mean_el += tr.directions.back().elevation();
        mean_az += tr.directions.back().azimuth();
    }
    const int n = static_cast<int>(bundle.size());
    const double tol = 3.0 * sigma / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean_el / n - (deg2rad(80.0) + rate)) < tol);
    CHECK(std::abs(mean_az / n - (deg2rad(200.0) - rate)) < tol);
}

TEST_CASE("direction_at rejects times beyond the horizon") {
    const auto spec = MotionPathSpec::with_rates(UnitDirection::from_degrees(90.0, 0.0), 0.1, 0.0,
                                                 0.0, 0.0, 10, 0.1);
    RandomStream rng(35);
    const Trajectory tr = motion_path(spec, rng);
    CHECK_NOTHROW((void)tr.direction_at(1.0));
    CHECK_THROWS_AS((void)tr.direction_at(1.2), std::invalid_argument);
}
