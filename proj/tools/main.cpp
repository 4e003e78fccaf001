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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "polarchan/scenario.hpp"
#include "polarchan/sweeps.hpp"

namespace {

void write_file(const std::filesystem::path &dir, const std::string &name,
                const std::string &content) {
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"polarchan - polarized MIMO channel statistics with moving scatterer clusters"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    std::vector<double> times{0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> rx_spacings{0.1, 0.5, 1.0};
    std::vector<double> tx_spacings;
    std::vector<double> snrs{10.0, 20.0};
    std::vector<std::string> pols{"VV", "SLANT45", "VH"};
    int resolution_el = 45, resolution_az = 90;
    int n_paths = 10;
    std::size_t n_samples = 1000000;

    auto add_common = [&](CLI::App *sub, bool with_out) {
        sub->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
        if (with_out)
            sub->add_option("--out", out_dir, "output directory for CSV files");
        sub->add_option("--seed", seed_override, "override the scenario seed");
    };

    auto *validate = app.add_subcommand("validate", "parse and validate a scenario file");
    add_common(validate, false);

    auto *stcf = app.add_subcommand("stcf", "correlation sweep over time and antenna spacings");
    add_common(stcf, true);
    stcf->add_option("--times", times, "time grid, seconds")->delimiter(',');
    stcf->add_option("--spacings", rx_spacings, "receive spacing grid, wavelengths")
        ->delimiter(',');
    stcf->add_option("--tx-spacings", tx_spacings,
                     "transmit spacing grid, wavelengths (default: scenario value)")
        ->delimiter(',');
    stcf->add_option("--pols", pols, "polarization presets, or 'config'")->delimiter(',');

    auto *capacity = app.add_subcommand("capacity", "ergodic capacity sweep over time and SNR");
    add_common(capacity, true);
    capacity->add_option("--times", times, "time grid, seconds")->delimiter(',');
    capacity->add_option("--snrs", snrs, "reference SNR grid, dB")->delimiter(',');
    capacity->add_option("--pols", pols, "polarization presets, or 'config'")->delimiter(',');

    auto *aoa = app.add_subcommand("aoa-map", "receive-side angle-of-arrival density map");
    add_common(aoa, true);
    std::vector<double> aoa_times{0.0, 1.0, 5.0};
    aoa->add_option("--times", aoa_times, "time grid, seconds")->delimiter(',');
    aoa->add_option("--elevation-cells", resolution_el, "elevation cells (>= 16)");
    aoa->add_option("--azimuth-cells", resolution_az, "azimuth cells (>= 16)");

    auto *demo = app.add_subcommand("motion-demo", "sample paths of the first cluster motion");
    add_common(demo, true);
    demo->add_option("--paths", n_paths, "number of paths (path 0 is the drift-only path)");

    auto *xval = app.add_subcommand("cross-validate",
                                    "quadrature vs Monte Carlo discrete-sum comparison");
    add_common(xval, true);
    double xval_time = 0.0;
    xval->add_option("--samples", n_samples, "Monte Carlo scatterers per side (>= 10^4)");
    xval->add_option("--time", xval_time, "evaluation time, seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        polarchan::ScenarioConfig cfg = polarchan::load_scenario(scenario_path);
        if (seed_override)
            cfg.seed = *seed_override;

        if (app.got_subcommand(validate)) {
            std::cout << "scenario OK: " << cfg.tx_array.num_elements << "x"
                      << cfg.rx_array.num_elements << " MIMO, wavelength "
                      << polarchan::format_number(cfg.wavelength_m) << " m, "
                      << cfg.rx_mixture.size() << " receive clusters, polarization "
                      << cfg.polarization.label << ", seed " << cfg.seed << "\n";
            return 0;
        }
        if (app.got_subcommand(stcf)) {
            if (tx_spacings.empty())
                tx_spacings = {cfg.tx_array.spacing_wl};
            write_file(out_dir, "stcf.csv",
                       polarchan::run_stcf_sweep(cfg, times, tx_spacings, rx_spacings, pols));
            return 0;
        }
        if (app.got_subcommand(capacity)) {
            write_file(out_dir, "capacity.csv",
                       polarchan::run_capacity_sweep(cfg, times, snrs, pols));
            return 0;
        }
        if (app.got_subcommand(aoa)) {
            write_file(out_dir, "aoa_map.csv",
                       polarchan::run_aoa_map(cfg, aoa_times, resolution_el, resolution_az));
            return 0;
        }
        if (app.got_subcommand(demo)) {
            write_file(out_dir, "motion_demo.csv", polarchan::run_motion_demo(cfg, n_paths));
            return 0;
        }
        if (app.got_subcommand(xval)) {
            const auto report = polarchan::cross_validate(cfg, n_samples, xval_time);
            std::cout << report.to_table();
            write_file(out_dir, "cross_validate.csv", report.to_csv());
            return report.passed ? 0 : 3;
        }
    } catch (const polarchan::QuadratureError &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
