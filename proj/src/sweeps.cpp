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

#include "polarchan/sweeps.hpp"

#include <cstdio>
#include <sstream>

#include "polarchan/motion.hpp"
#include "polarchan/realization.hpp"

namespace polarchan {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

// Config with the requested polarization preset (or the config's own when
// name == "config") and optional spacing overrides.
ScenarioConfig variant(const ScenarioConfig &cfg, const std::string &pol_name, double tx_spacing,
                       double rx_spacing) {
    ScenarioConfig v = cfg;
    if (pol_name != "config")
        v.polarization =
            preset_config(pol_name, cfg.tx_array.num_elements, cfg.rx_array.num_elements);
    v.tx_array = ArrayGeometry(cfg.tx_array.num_elements, tx_spacing, cfg.tx_array.orientation,
                               cfg.tx_array.center_m);
    v.rx_array = ArrayGeometry(cfg.rx_array.num_elements, rx_spacing, cfg.rx_array.orientation,
                               cfg.rx_array.center_m);
    return v;
}

std::string pol_label(const ScenarioConfig &cfg, const std::string &pol_name) {
    return pol_name == "config" ? cfg.polarization.label : pol_name;
}

} // namespace

std::string run_stcf_sweep(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                           const std::vector<double> &tx_spacings_wl,
                           const std::vector<double> &rx_spacings_wl,
                           const std::vector<std::string> &polarizations) {
    if (times_s.empty() || tx_spacings_wl.empty() || rx_spacings_wl.empty() ||
        polarizations.empty())
        throw std::invalid_argument("run_stcf_sweep: empty grid");

    const int us = cfg.tx_array.num_elements * cfg.rx_array.num_elements;
    std::ostringstream csv;
    csv << "time_s,tx_spacing_wl,rx_spacing_wl,polarization,mean_corr";
    for (int i = 0; i < us; ++i)
        for (int j = i + 1; j < us; ++j)
            csv << ",abs_r_" << i << "_" << j;
    csv << "\n";

    for (double t : times_s)
        for (double st : tx_spacings_wl)
            for (double sr : rx_spacings_wl)
                for (const auto &pol : polarizations) {
                    const ScenarioConfig v = variant(cfg, pol, st, sr);
                    const double tt[1] = {t};
                    const auto mats = stcf_over_time(v, tt, v.n_trajectory_draws);
                    const auto &r = mats.front();
                    csv << format_number(t) << "," << format_number(st) << ","
                        << format_number(sr) << "," << pol_label(cfg, pol) << ","
                        << format_number(mean_correlation(r));
                    for (int i = 0; i < us; ++i)
                        for (int j = i + 1; j < us; ++j)
                            csv << "," << format_number(std::abs(r.entries()(i, j)));
                    csv << "\n";
                }
    return csv.str();
}

std::string run_capacity_sweep(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                               const std::vector<double> &snrs_db,
                               const std::vector<std::string> &polarizations) {
    if (times_s.empty() || snrs_db.empty() || polarizations.empty())
        throw std::invalid_argument("run_capacity_sweep: empty grid");

    std::ostringstream csv;
    csv << "time_s,snr_db,polarization,capacity_bpshz,std_error_bpshz\n";

    // rows emitted in time-major order; capacities computed per (pol, time)
    // with draws shared across the SNR grid
    struct Row {
        double capacity, se;
    };
    std::vector<std::vector<std::vector<Row>>> table( // [time][snr][pol]
        times_s.size(), std::vector<std::vector<Row>>(snrs_db.size(),
                                                      std::vector<Row>(polarizations.size())));

    for (std::size_t pi = 0; pi < polarizations.size(); ++pi) {
        const ScenarioConfig v = variant(cfg, polarizations[pi], cfg.tx_array.spacing_wl,
                                         cfg.rx_array.spacing_wl);
        const auto depol = v.depolarization();
        const double inv = selected_inv_xpd(depol, v.resolved_xpd_selection());
        std::vector<double> rhos;
        rhos.reserve(snrs_db.size());
        for (double snr_db : snrs_db)
            rhos.push_back(effective_snr(std::pow(10.0, snr_db / 10.0), inv));
        const auto mats = stcf_over_time(v, times_s, v.n_trajectory_draws);
        for (std::size_t ti = 0; ti < times_s.size(); ++ti) {
            const auto stats = capacity_over_snr(mats[ti], rhos,
                                                 static_cast<std::size_t>(v.n_channel_draws),
                                                 v.seed);
            for (std::size_t si = 0; si < snrs_db.size(); ++si)
                table[ti][si][pi] = Row{stats[si].mean_bpshz, stats[si].std_error_bpshz};
        }
    }

    for (std::size_t ti = 0; ti < times_s.size(); ++ti)
        for (std::size_t si = 0; si < snrs_db.size(); ++si)
            for (std::size_t pi = 0; pi < polarizations.size(); ++pi)
                csv << format_number(times_s[ti]) << "," << format_number(snrs_db[si]) << ","
                    << pol_label(cfg, polarizations[pi]) << ","
                    << format_number(table[ti][si][pi].capacity) << ","
                    << format_number(table[ti][si][pi].se) << "\n";
    return csv.str();
}

std::string run_aoa_map(const ScenarioConfig &cfg, const std::vector<double> &times_s,
                        int n_elevation_cells, int n_azimuth_cells) {
    if (times_s.empty())
        throw std::invalid_argument("run_aoa_map: empty time grid");
    if (n_elevation_cells < 16 || n_azimuth_cells < 16)
        throw std::invalid_argument("run_aoa_map: resolution must be at least 16x16");
    const bool moving = !cfg.cluster_paths.empty();
    if (moving && cfg.cluster_paths.size() != cfg.rx_mixture.size())
        throw std::invalid_argument("run_aoa_map: cluster path count does not match the receive "
                                    "mixture");
    const bool random = moving && cfg.has_random_paths();
    const int draws = random ? std::max(1, cfg.n_trajectory_draws) : 1;

    // mixtures advanced per bundle and time
    std::vector<std::vector<VmfMixture>> advanced(times_s.size()); // [time][bundle]
    for (int b = 0; b < draws; ++b) {
        std::vector<Trajectory> paths;
        if (moving)
            for (std::size_t q = 0; q < cfg.cluster_paths.size(); ++q) {
                auto rng = RandomStream::derive(
                    cfg.seed, {stream_tag::trajectory, static_cast<std::uint64_t>(b),
                               static_cast<std::uint64_t>(q)});
                paths.push_back(motion_path(cfg.cluster_paths[q], rng));
            }
        for (std::size_t ti = 0; ti < times_s.size(); ++ti) {
            if (!moving) {
                advanced[ti].push_back(cfg.rx_mixture);
                continue;
            }
            std::vector<UnitDirection> means;
            means.reserve(paths.size());
            for (const auto &p : paths)
                means.push_back(p.direction_at(times_s[ti]));
            advanced[ti].push_back(translate_mixture(cfg.rx_mixture, means));
        }
    }

    std::ostringstream csv;
    csv << "time_s,elevation_deg,azimuth_deg,density\n";
    const double del = 180.0 / n_elevation_cells;
    const double daz = 360.0 / n_azimuth_cells;
    for (std::size_t ti = 0; ti < times_s.size(); ++ti)
        for (int i = 0; i < n_elevation_cells; ++i)
            for (int j = 0; j < n_azimuth_cells; ++j) {
                const double el = (i + 0.5) * del;
                const double az = (j + 0.5) * daz;
                const UnitDirection d = UnitDirection::from_degrees(el, az);
                double density = 0.0;
                for (const auto &mix : advanced[ti])
                    density += mixture_pdf(d, mix);
                density /= advanced[ti].size();
                csv << format_number(times_s[ti]) << "," << format_number(el) << ","
                    << format_number(az) << "," << format_number(density) << "\n";
            }
    return csv.str();
}

std::string run_motion_demo(const ScenarioConfig &cfg, int n_paths) {
    if (n_paths < 1)
        throw std::invalid_argument("run_motion_demo: n_paths must be >= 1");
    if (cfg.cluster_paths.empty())
        throw std::invalid_argument("run_motion_demo: the scenario has no cluster_paths");
    const MotionPathSpec &spec = cfg.cluster_paths.front();

    std::ostringstream csv;
    csv << "path_id,time_s,elevation_deg,azimuth_deg\n";
    auto emit = [&](int id, const Trajectory &tr) {
        for (std::size_t m = 0; m < tr.times_s.size(); ++m)
            csv << id << "," << format_number(tr.times_s[m]) << ","
                << format_number(tr.directions[m].elevation_deg()) << ","
                << format_number(tr.directions[m].azimuth_deg()) << "\n";
    };

    MotionPathSpec drift = spec;
    drift.sigma_elevation_rad = 0.0;
    drift.sigma_azimuth_rad = 0.0;
    auto unused = RandomStream(0);
    emit(0, motion_path(drift, unused));
    for (int k = 1; k < n_paths; ++k) {
        auto rng = RandomStream::derive(cfg.seed,
                                        {stream_tag::motion_demo, static_cast<std::uint64_t>(k)});
        emit(k, motion_path(spec, rng));
    }
    return csv.str();
}

std::string CrossValidationReport::to_csv() const {
    std::ostringstream csv;
    csv << "row,col,quad_re,quad_im,mc_re,mc_im,std_error,pass\n";
    for (const auto &r : rows)
        csv << r.row << "," << r.col << "," << format_number(r.quadrature.real()) << ","
            << format_number(r.quadrature.imag()) << "," << format_number(r.monte_carlo.real())
            << "," << format_number(r.monte_carlo.imag()) << "," << format_number(r.std_error)
            << "," << (r.pass ? 1 : 0) << "\n";
    return csv.str();
}

std::string CrossValidationReport::to_table() const {
    std::ostringstream out;
    out << "entry      quadrature            monte carlo           3*SE        status\n";
    char buf[160];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "(%d,%d)  %+.6f%+.6fj  %+.6f%+.6fj  %.2e  %s\n", r.row,
                      r.col, r.quadrature.real(), r.quadrature.imag(), r.monte_carlo.real(),
                      r.monte_carlo.imag(), 3.0 * r.std_error, r.pass ? "pass" : "FAIL");
        out << buf;
    }
    out << (passed ? "cross-validation passed" : "cross-validation FAILED") << "\n";
    return out.str();
}

CrossValidationReport cross_validate(const ScenarioConfig &cfg, std::size_t n_scatterers,
                                     double time_s) {
    if (n_scatterers < 10000)
        throw std::invalid_argument("cross_validate: needs at least 10^4 scatterers");

    const double tt[1] = {time_s};
    const auto mats = stcf_over_time(cfg, tt, 1);
    const auto &quad = mats.front();

    // Monte Carlo on the same snapshots (bundle 0 trajectories when paths exist)
    const bool moving = !cfg.cluster_paths.empty();
    VmfMixture rx_mix = cfg.rx_mixture;
    if (moving) {
        std::vector<UnitDirection> means;
        for (std::size_t q = 0; q < cfg.cluster_paths.size(); ++q) {
            auto rng = RandomStream::derive(cfg.seed,
                                            {stream_tag::trajectory, 0, static_cast<std::uint64_t>(q)});
            means.push_back(motion_path(cfg.cluster_paths[q], rng).direction_at(time_s));
        }
        rx_mix = translate_mixture(rx_mix, means);
    }
    SideSnapshot tx_snap(cfg.tx_mixture, radius_at(cfg.tx_motion, time_s), cfg.tx_array,
                         cfg.polarization.tx_tilts_rad);
    SideSnapshot rx_snap(std::move(rx_mix), radius_at(cfg.rx_motion, time_s), cfg.rx_array,
                         cfg.polarization.rx_tilts_rad);
    const auto mc = stcf_monte_carlo(tx_snap, rx_snap, cfg.depolarization(), cfg.wavelength_m,
                                     n_scatterers, cfg.seed);

    CrossValidationReport report;
    report.passed = true;
    const int us = quad.dim();
    for (int i = 0; i < us; ++i)
        for (int j = 0; j < us; ++j) {
            CrossValidationRow row;
            row.row = i;
            row.col = j;
            row.quadrature = quad.entries()(i, j);
            row.monte_carlo = mc.estimate(i, j);
            row.std_error = mc.std_error(i, j);
            const double diff = std::abs(row.quadrature - row.monte_carlo);
            row.pass = diff <= 3.0 * row.std_error + 1e-12;
            report.passed = report.passed && row.pass;
            report.rows.push_back(row);
        }
    return report;
}

} // namespace polarchan
