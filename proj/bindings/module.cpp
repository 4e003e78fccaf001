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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarchan/motion.hpp"
#include "polarchan/realization.hpp"
#include "polarchan/scenario.hpp"
#include "polarchan/sweeps.hpp"

namespace py = pybind11;
using namespace polarchan;

namespace {

ScenarioConfig with_polarization(const ScenarioConfig &cfg, const std::string &pol) {
    ScenarioConfig v = cfg;
    if (pol != "config")
        v.polarization = preset_config(pol, cfg.tx_array.num_elements, cfg.rx_array.num_elements);
    return v;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "polarized MIMO channel statistics with moving scatterer clusters";

    py::class_<UnitDirection>(m, "UnitDirection")
        .def(py::init<double, double>(), py::arg("elevation_rad"), py::arg("azimuth_rad"))
        .def_static("from_degrees", &UnitDirection::from_degrees, py::arg("elevation_deg"),
                    py::arg("azimuth_deg"))
        .def_property_readonly("elevation", &UnitDirection::elevation)
        .def_property_readonly("azimuth", &UnitDirection::azimuth)
        .def("__repr__", [](const UnitDirection &d) {
            return "UnitDirection(elevation=" + std::to_string(d.elevation()) +
                   ", azimuth=" + std::to_string(d.azimuth()) + ")";
        });

    m.def("unit_vector", &unit_vector, py::arg("direction"));
    m.def("cos_alpha", &cos_alpha, py::arg("a"), py::arg("b"));
    m.def("wrap_to_sphere", &wrap_to_sphere, py::arg("raw_elevation_rad"),
          py::arg("raw_azimuth_rad"));

    py::class_<VmfComponent>(m, "VmfComponent")
        .def(py::init<UnitDirection, double, double>(), py::arg("mean"), py::arg("kappa"),
             py::arg("weight"))
        .def_readonly("mean", &VmfComponent::mean)
        .def_readonly("kappa", &VmfComponent::kappa)
        .def_readonly("weight", &VmfComponent::weight);

    py::class_<VmfMixture>(m, "VmfMixture")
        .def(py::init<std::vector<VmfComponent>>(), py::arg("components"))
        .def_property_readonly("components", &VmfMixture::components)
        .def("__len__", &VmfMixture::size);

    m.def("vmf_pdf", &vmf_pdf, py::arg("direction"), py::arg("component"));
    m.def("mixture_pdf", &mixture_pdf, py::arg("direction"), py::arg("mixture"));
    m.def(
        "sample_mixture",
        [](const VmfMixture &mix, std::uint64_t seed, std::size_t n) {
            RandomStream rng(seed);
            const auto dirs = sample_mixture(mix, rng, n);
            Eigen::MatrixXd out(n, 2);
            for (std::size_t i = 0; i < n; ++i) {
                out(i, 0) = dirs[i].elevation();
                out(i, 1) = dirs[i].azimuth();
            }
            return out;
        },
        py::arg("mixture"), py::arg("seed"), py::arg("n"),
        "n draws as an (n, 2) array of (elevation, azimuth) in radians");

    m.def("field_pattern_v", &field_pattern_v, py::arg("direction"), py::arg("tilt_rad"));
    m.def("field_pattern_h", &field_pattern_h, py::arg("direction"), py::arg("tilt_rad"));

    py::class_<MotionPathSpec>(m, "MotionPathSpec")
        .def_static("with_rates", &MotionPathSpec::with_rates, py::arg("start"),
                    py::arg("rate_elevation_rps"), py::arg("rate_azimuth_rps"),
                    py::arg("sigma_elevation_rad"), py::arg("sigma_azimuth_rad"),
                    py::arg("segments"), py::arg("dt_s"))
        .def_static("to_destination", &MotionPathSpec::to_destination, py::arg("start"),
                    py::arg("dest"), py::arg("sigma_elevation_rad"), py::arg("sigma_azimuth_rad"),
                    py::arg("segments"), py::arg("dt_s"))
        .def_property_readonly("horizon_s", &MotionPathSpec::horizon_s);

    m.def(
        "motion_path",
        [](const MotionPathSpec &spec, std::uint64_t seed) {
            RandomStream rng(seed);
            const Trajectory tr = motion_path(spec, rng);
            Eigen::MatrixXd out(tr.times_s.size(), 3);
            for (std::size_t i = 0; i < tr.times_s.size(); ++i) {
                out(i, 0) = tr.times_s[i];
                out(i, 1) = tr.directions[i].elevation();
                out(i, 2) = tr.directions[i].azimuth();
            }
            return out;
        },
        py::arg("spec"), py::arg("seed"),
        "one realized path as an (M+1, 3) array of (t, elevation, azimuth)");

    m.def(
        "brownian_path",
        [](std::uint64_t seed, int segments, double dt_s) {
            RandomStream rng(seed);
            return brownian_path(rng, segments, dt_s);
        },
        py::arg("seed"), py::arg("segments"), py::arg("dt_s"));

    m.def("xpd_from_db", &xpd_from_db, py::arg("db_value"));
    m.def("effective_snr", &effective_snr, py::arg("rho0_linear"), py::arg("inv_xpd"));

    py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
        .def(py::init<Eigen::MatrixXcd, int, int>(), py::arg("entries"), py::arg("num_rx"),
             py::arg("num_tx"))
        .def_property_readonly("entries",
                               [](const CorrelationMatrix &r) { return r.entries(); })
        .def_property_readonly("num_rx", &CorrelationMatrix::num_rx)
        .def_property_readonly("num_tx", &CorrelationMatrix::num_tx)
        .def("mean_correlation", [](const CorrelationMatrix &r) { return mean_correlation(r); });

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def_readonly("wavelength_m", &ScenarioConfig::wavelength_m)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readonly("snr_db", &ScenarioConfig::snr_db)
        .def_property_readonly(
            "polarization_label",
            [](const ScenarioConfig &c) { return c.polarization.label; })
        .def("to_json", [](const ScenarioConfig &c) { return serialize_scenario(c); });

    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("config"));

    m.def(
        "correlation_matrix_at",
        [](const ScenarioConfig &cfg, double time_s, const std::string &polarization) {
            const ScenarioConfig v = with_polarization(cfg, polarization);
            const double tt[1] = {time_s};
            return stcf_over_time(v, tt, v.n_trajectory_draws).front();
        },
        py::arg("config"), py::arg("time_s") = 0.0, py::arg("polarization") = "config",
        "correlation matrix of the scenario at one time instant");

    m.def(
        "stcf_monte_carlo_at",
        [](const ScenarioConfig &cfg, double time_s, std::size_t n_scatterers,
           const std::string &polarization) {
            const ScenarioConfig v = with_polarization(cfg, polarization);
            SideSnapshot tx(v.tx_mixture, radius_at(v.tx_motion, time_s), v.tx_array,
                            v.polarization.tx_tilts_rad);
            SideSnapshot rx(v.rx_mixture, radius_at(v.rx_motion, time_s), v.rx_array,
                            v.polarization.rx_tilts_rad);
            const auto mc = stcf_monte_carlo(tx, rx, v.depolarization(), v.wavelength_m,
                                             n_scatterers, v.seed);
            return py::make_tuple(mc.estimate, mc.std_error);
        },
        py::arg("config"), py::arg("time_s") = 0.0, py::arg("n_scatterers") = 100000,
        py::arg("polarization") = "config",
        "(estimate, standard error) of the discrete-sum Monte Carlo correlation "
        "with static cluster means");

    m.def("matrix_sqrt_psd", &matrix_sqrt_psd, py::arg("matrix"));

    m.def(
        "realize_channel",
        [](const CorrelationMatrix &r, std::uint64_t seed) {
            RandomStream rng(seed);
            return realize_channel(r, rng).matrix;
        },
        py::arg("correlation"), py::arg("seed"));

    m.def(
        "capacity",
        [](const Eigen::MatrixXcd &h, double snr_linear, int num_tx) {
            return capacity(ChannelDraw{h}, snr_linear, num_tx);
        },
        py::arg("channel"), py::arg("snr_linear"), py::arg("num_tx"));

    m.def(
        "ergodic_capacity",
        [](const CorrelationMatrix &r, double rho0_linear, double inv_xpd_v, double inv_xpd_h,
           double inv_cpr, const std::string &xpd_selection, std::size_t n_draws,
           std::uint64_t seed) {
            XpdSelection sel = XpdSelection::VPol;
            if (xpd_selection == "h")
                sel = XpdSelection::HPol;
            else if (xpd_selection == "mean")
                sel = XpdSelection::Mean;
            else if (xpd_selection != "v")
                throw std::invalid_argument("xpd_selection must be v, h or mean");
            const auto stats = ergodic_capacity(r, rho0_linear,
                                                DepolarizationStats(inv_xpd_v, inv_xpd_h, inv_cpr),
                                                sel, n_draws, seed);
            return py::make_tuple(stats.mean_bpshz, stats.std_error_bpshz, stats.n_draws);
        },
        py::arg("correlation"), py::arg("rho0_linear"), py::arg("inv_xpd_v") = 0.0,
        py::arg("inv_xpd_h") = 0.0, py::arg("inv_cpr") = 1.0, py::arg("xpd_selection") = "v",
        py::arg("n_draws") = 10000, py::arg("seed") = kDefaultSeed,
        "(mean bps/Hz, standard error, draws)");

    m.def("run_stcf_sweep", &run_stcf_sweep, py::arg("config"), py::arg("times_s"),
          py::arg("tx_spacings_wl"), py::arg("rx_spacings_wl"), py::arg("polarizations"));
    m.def("run_capacity_sweep", &run_capacity_sweep, py::arg("config"), py::arg("times_s"),
          py::arg("snrs_db"), py::arg("polarizations"));
    m.def("run_aoa_map", &run_aoa_map, py::arg("config"), py::arg("times_s"),
          py::arg("n_elevation_cells") = 45, py::arg("n_azimuth_cells") = 90);
    m.def("run_motion_demo", &run_motion_demo, py::arg("config"), py::arg("n_paths") = 10);
    m.def(
        "cross_validate",
        [](const ScenarioConfig &cfg, std::size_t n_scatterers, double time_s) {
            const auto report = cross_validate(cfg, n_scatterers, time_s);
            return py::make_tuple(report.passed, report.to_csv());
        },
        py::arg("config"), py::arg("n_scatterers") = 100000, py::arg("time_s") = 0.0,
        "(passed, csv report)");

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
