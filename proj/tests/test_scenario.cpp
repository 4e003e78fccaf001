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

#include <cstdlib>
#include <doctest.h>
#include <stdexcept>
#include <string>

#include "polarchan/scenario.hpp"

using namespace polarchan;

namespace {

std::string scenario_dir() {
    const char *env = std::getenv("POLARCHAN_SCENARIO_DIR");
    return env ? env : "scenarios";
}

const std::string kMinimal = R"({
  "wavelength_m": 2.0,
  "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 10, "weight": 1}],
  "rx_mixture": [{"mean_deg": {"elevation": 80, "azimuth": 40}, "kappa": 5, "weight": 0.5},
                 {"mean_deg": {"elevation": 100, "azimuth": 200}, "kappa": 9, "weight": 0.5}]
})";

} // namespace

TEST_CASE("shipped default scenario parses with the documented defaults") {
    const ScenarioConfig cfg = load_scenario(scenario_dir() + "/default.json");
    CHECK(cfg.tx_array.spacing_wl == doctest::Approx(0.1));
    CHECK(cfg.rx_array.spacing_wl == doctest::Approx(0.1));
    CHECK(cfg.wavelength_m == doctest::Approx(1.0));
    CHECK(cfg.rx_mixture.size() == 10);
    CHECK(cfg.n_channel_draws == 10000);
    CHECK(cfg.polarization.label == "VV");
    // dominant stand-in component
    CHECK(cfg.rx_mixture.components()[0].mean.elevation_deg() == doctest::Approx(90.0));
    CHECK(cfg.rx_mixture.components()[0].mean.azimuth_deg() == doctest::Approx(330.0));
}

TEST_CASE("defaults are applied for absent optional fields") {
    const ScenarioConfig cfg = parse_scenario(kMinimal);
    CHECK(cfg.seed == kDefaultSeed);
    CHECK(cfg.snr_db == doctest::Approx(10.0));
    CHECK(cfg.xpd_v_db == doctest::Approx(9.0));
    CHECK(cfg.xpd_h_db == doctest::Approx(9.0));
    CHECK(cfg.cpr_db == doctest::Approx(2.0));
    CHECK(cfg.n_channel_draws == 10000);
    CHECK(cfg.tx_array.num_elements == 2);
    CHECK(cfg.tx_array.spacing_wl == doctest::Approx(0.1));
    CHECK(cfg.tx_motion.initial_radius_m == doctest::Approx(1.0));
    CHECK(cfg.tx_motion.radial_velocity_mps == doctest::Approx(0.0));
    CHECK(cfg.rx_array.center_m[1] == doctest::Approx(100.0));
    CHECK(cfg.polarization.label == "VV");
    CHECK(cfg.cluster_paths.empty());
    CHECK(cfg.quadrature.n_elevation == 64);
    CHECK(cfg.quadrature.n_azimuth == 128);
}

TEST_CASE("carrier frequency converts to wavelength") {
    const std::string text = R"({
      "carrier_frequency_hz": 299792458.0,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
    })";
    CHECK(parse_scenario(text).wavelength_m == doctest::Approx(1.0));
}

TEST_CASE("validation errors name the failing field") {
    auto expect_error = [](const std::string &text, const std::string &needle) {
        try {
            (void)parse_scenario(text);
            FAIL("expected a validation error mentioning '" << needle << "'");
        } catch (const std::invalid_argument &e) {
            const std::string msg = e.what();
            INFO(msg);
            CHECK(msg.find(needle) != std::string::npos);
        }
    };

    // negative kappa names the component
    expect_error(R"({
      "wavelength_m": 1.0,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 0.5},
                     {"mean_deg": {"elevation": 10, "azimuth": 0}, "kappa": -3, "weight": 0.5}]
    })",
                 "rx_mixture[1]");

    // weights must sum to 1
    expect_error(R"({
      "wavelength_m": 1.0,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 0.6},
                     {"mean_deg": {"elevation": 10, "azimuth": 0}, "kappa": 3, "weight": 0.6}]
    })",
                 "sum to 1");

    // wavelength / frequency exclusivity
    expect_error(R"({"tx_mixture": [], "rx_mixture": []})", "wavelength_m");
    expect_error(R"({
      "wavelength_m": 1.0, "carrier_frequency_hz": 1e9,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
    })",
                 "wavelength_m");

    // unknown fields are rejected
    expect_error(R"({
      "wavelength_m": 1.0, "wavelentgh": 2,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
    })",
                 "wavelentgh");

    // cluster path count must match the mixture
    expect_error(R"({
      "wavelength_m": 1.0,
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 0.5},
                     {"mean_deg": {"elevation": 10, "azimuth": 0}, "kappa": 3, "weight": 0.5}],
      "cluster_paths": [{"rates_deg_per_s": [1, 1], "segments": 10, "dt_s": 0.1}]
    })",
                 "cluster_paths");

    expect_error("not json at all", "invalid JSON");
}

TEST_CASE("polarization forms") {
    const std::string preset = R"({
      "wavelength_m": 1.0, "polarization": "SLANT45",
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
    })";
    const ScenarioConfig a = parse_scenario(preset);
    CHECK(a.polarization.label == "SLANT45");
    CHECK(a.resolved_xpd_selection() == XpdSelection::Mean);

    const std::string custom = R"({
      "wavelength_m": 1.0,
      "polarization": {"label": "tilted", "tx_tilts_deg": [10, 20], "rx_tilts_deg": [0, 90]},
      "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
      "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
    })";
    const ScenarioConfig b = parse_scenario(custom);
    CHECK(b.polarization.tx_tilts_rad[1] == doctest::Approx(deg2rad(20.0)));
    CHECK(b.resolved_xpd_selection() == XpdSelection::VPol);

    const ScenarioConfig c = parse_scenario(kMinimal);
    CHECK(c.resolved_xpd_selection() == XpdSelection::VPol); // VV default
}

TEST_CASE("xpd_for_snr overrides") {
    for (const auto &[field, expected] :
         {std::pair<std::string, XpdSelection>{"v", XpdSelection::VPol},
          {"h", XpdSelection::HPol},
          {"mean", XpdSelection::Mean}}) {
        const std::string text = R"({
          "wavelength_m": 1.0, "xpd_for_snr": ")" + field + R"(",
          "tx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}],
          "rx_mixture": [{"mean_deg": {"elevation": 90, "azimuth": 0}, "kappa": 1, "weight": 1}]
        })";
        CHECK(parse_scenario(text).resolved_xpd_selection() == expected);
    }
}

TEST_CASE("serialize -> parse -> serialize is byte-stable") {
    for (const std::string path : {scenario_dir() + "/default.json", scenario_dir() + "/brownian.json"}) {
        const ScenarioConfig cfg = load_scenario(path);
        const std::string once = serialize_scenario(cfg);
        const std::string twice = serialize_scenario(parse_scenario(once));
        CHECK(once == twice);
    }
    const ScenarioConfig cfg = parse_scenario(kMinimal);
    const std::string once = serialize_scenario(cfg);
    CHECK(serialize_scenario(parse_scenario(once)) == once);
}

TEST_CASE("depolarization helper converts the configured dB figures") {
    const ScenarioConfig cfg = parse_scenario(kMinimal);
    const auto depol = cfg.depolarization();
    CHECK(depol.inv_xpd_v == doctest::Approx(0.125893).epsilon(1e-5));
    CHECK(depol.inv_cpr == doctest::Approx(0.630957).epsilon(1e-5));
    CHECK(cfg.rho0_linear() == doctest::Approx(10.0));
}
