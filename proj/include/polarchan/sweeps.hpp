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

#ifndef POLARCHAN_SWEEPS_HPP
#define POLARCHAN_SWEEPS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "polarchan/scenario.hpp"

namespace polarchan {

// Batch experiment drivers. Every driver returns a complete CSV document
// (header row, fixed "%.12g" number formatting, '\n' terminated rows) whose
// bytes depend only on (config, arguments), so identical runs diff clean.

/// Rows (time_s, tx_spacing_wl, rx_spacing_wl, polarization, mean_corr,
/// abs_r_i_j ...) over the product of the grids; per-entry columns cover the
/// strict upper triangle of the US x US matrix.
std::string run_stcf_sweep(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                           const std::vector<double> &tx_spacings_wl,
                           const std::vector<double> &rx_spacings_wl,
                           const std::vector<std::string> &polarizations);

/// Rows (time_s, snr_db, polarization, capacity_bpshz, std_error_bpshz);
/// channel draws are shared across the SNR grid.
std::string run_capacity_sweep(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                               const std::vector<double> &snrs_db,
                               const std::vector<std::string> &polarizations);

/// Rows (time_s, elevation_deg, azimuth_deg, density): the receive-side
/// mixture density on a cell-center grid, cluster means advanced along their
/// paths (trajectory-averaged when the paths are random).
std::string run_aoa_map(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                        int n_elevation_cells, int n_azimuth_cells);

/// Rows (path_id, time_s, elevation_deg, azimuth_deg) for n_paths
/// realizations of the scenario's first cluster path; path 0 is the
/// sigma = 0 deterministic drift path.
std::string run_motion_demo(const ScenarioConfig &cfg, int n_paths);

struct CrossValidationRow {
    int row;
    int col;
    std::complex<double> quadrature;
    std::complex<double> monte_carlo;
    double std_error;
    bool pass; // |quadrature - monte_carlo| <= 3 standard errors
};

struct CrossValidationReport {
    std::vector<CrossValidationRow> rows; // US^2 rows
    bool passed;

    std::string to_csv() const;
    std::string to_table() const;
};

/// Quadrature vs discrete-sum Monte Carlo on every correlation entry at one
/// time instant. Failures are reported, not thrown.
CrossValidationReport cross_validate(const ScenarioConfig &cfg, std::size_t n_scatterers,
                                     double time_s = 0.0);

/// Shared fixed-precision number formatting for all CSV output.
std::string format_number(double v);

} // namespace polarchan

#endif
