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

#ifndef POLARCHAN_SCENARIO_HPP
#define POLARCHAN_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polarchan/antenna.hpp"
#include "polarchan/directional.hpp"
#include "polarchan/geometry.hpp"
#include "polarchan/motion.hpp"
#include "polarchan/quadrature.hpp"
#include "polarchan/realization.hpp"
#include "polarchan/stcf.hpp"

namespace polarchan {

/// Which depolarization statistic feeds the effective SNR; Auto resolves to
/// the vertical value for the VV preset and to the mean of the two XPD
/// expectations otherwise.
enum class XpdForSnr { Auto, VPol, HPol, Mean };

inline constexpr std::uint64_t kDefaultSeed = 123456789ULL;

/// Full simulation description parsed from a scenario file (JSON; angles in
/// degrees, dB fields suffixed _db, lengths in meters, spacings in
/// wavelengths). See README for the schema and defaults.
struct ScenarioConfig {
    double wavelength_m;
    std::uint64_t seed;
    double snr_db;
    double xpd_v_db;
    double xpd_h_db;
    double cpr_db;
    XpdForSnr xpd_for_snr;
    int n_channel_draws;
    int n_trajectory_draws;
    PolarizationConfig polarization;
    ArrayGeometry tx_array;
    ArrayGeometry rx_array;
    RadialMotion tx_motion;
    RadialMotion rx_motion;
    VmfMixture tx_mixture;
    VmfMixture rx_mixture;
    std::vector<MotionPathSpec> cluster_paths; // empty = static cluster means
    QuadratureSettings quadrature;

    DepolarizationStats depolarization() const;
    XpdSelection resolved_xpd_selection() const;
    double rho0_linear() const;
    bool has_random_paths() const;
};

/// Parse and validate a scenario document. Defaults are applied for absent
/// optional fields; violations raise std::invalid_argument naming the field
/// and constraint.
ScenarioConfig parse_scenario(const std::string &text);

/// Read and parse a scenario file.
ScenarioConfig load_scenario(const std::string &path);

/// Serialize back to the document format; parse(serialize(cfg)) is
/// equivalent to cfg.
std::string serialize_scenario(const ScenarioConfig &cfg);

} // namespace polarchan

#endif
