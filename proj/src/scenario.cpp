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

#include "polarchan/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace polarchan {

namespace {

using json = nlohmann::ordered_json;

constexpr double kSpeedOfLight = 299792458.0;

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw std::invalid_argument("scenario: " + path + ": " + what);
}

void require_keys(const json &j, const std::string &path,
                  std::initializer_list<const char *> allowed) {
    for (const auto &item : j.items()) {
        bool ok = false;
        for (const char *k : allowed)
            if (item.key() == k)
                ok = true;
        if (!ok)
            fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
    }
}

double get_number(const json &j, const std::string &path, const char *key, double fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j[key].is_number())
        fail(path + key, "must be a number");
    return j[key].get<double>();
}

double require_number(const json &j, const std::string &path, const char *key) {
    if (!j.contains(key))
        fail(path + key, "required field is missing");
    if (!j[key].is_number())
        fail(path + key, "must be a number");
    return j[key].get<double>();
}

int get_int(const json &j, const std::string &path, const char *key, int fallback) {
    if (!j.contains(key))
        return fallback;
    if (!j[key].is_number_integer())
        fail(path + key, "must be an integer");
    return j[key].get<int>();
}

UnitDirection get_direction_deg(const json &j, const std::string &path) {
    if (!j.is_object())
        fail(path, "must be an object with elevation/azimuth in degrees");
    require_keys(j, path, {"elevation", "azimuth"});
    const double el = require_number(j, path + ".", "elevation");
    const double az = require_number(j, path + ".", "azimuth");
    return UnitDirection::from_degrees(el, az);
}

ArrayGeometry parse_array(const json &root, const char *key, std::array<double, 3> center_default) {
    const std::string path = key;
    json j = root.contains(key) ? root[key] : json::object();
    if (!j.is_object())
        fail(path, "must be an object");
    require_keys(j, path, {"num_elements", "spacing_wl", "orientation_deg", "center_m"});
    const int n = get_int(j, path + ".", "num_elements", 2);
    const double spacing = get_number(j, path + ".", "spacing_wl", 0.1);
    UnitDirection orient = j.contains("orientation_deg")
                               ? get_direction_deg(j["orientation_deg"], path + ".orientation_deg")
                               : UnitDirection::from_degrees(90.0, 0.0);
    std::array<double, 3> center = center_default;
    if (j.contains("center_m")) {
        if (!j["center_m"].is_array() || j["center_m"].size() != 3)
            fail(path + ".center_m", "must be a 3-element array of meters");
        for (int i = 0; i < 3; ++i)
            center[i] = j["center_m"][i].get<double>();
    }
    try {
        return ArrayGeometry(n, spacing, orient, center);
    } catch (const std::invalid_argument &e) {
        fail(path, e.what());
    }
}

RadialMotion parse_motion(const json &root, const char *key) {
    const std::string path = key;
    json j = root.contains(key) ? root[key] : json::object();
    if (!j.is_object())
        fail(path, "must be an object");
    require_keys(j, path, {"initial_radius_m", "radial_velocity_mps"});
    const double r0 = get_number(j, path + ".", "initial_radius_m", 1.0);
    const double v = get_number(j, path + ".", "radial_velocity_mps", 0.0);
    try {
        return RadialMotion(r0, v);
    } catch (const std::invalid_argument &e) {
        fail(path, e.what());
    }
}

VmfMixture parse_mixture(const json &root, const char *key) {
    const std::string path = key;
    if (!root.contains(key))
        fail(path, "required field is missing");
    const json &j = root[key];
    if (!j.is_array() || j.empty())
        fail(path, "must be a non-empty array of components");
    std::vector<VmfComponent> comps;
    comps.reserve(j.size());
    for (std::size_t q = 0; q < j.size(); ++q) {
        const std::string cpath = path + "[" + std::to_string(q) + "]";
        const json &c = j[q];
        if (!c.is_object())
            fail(cpath, "must be an object");
        require_keys(c, cpath, {"mean_deg", "kappa", "weight"});
        if (!c.contains("mean_deg"))
            fail(cpath + ".mean_deg", "required field is missing");
        UnitDirection mean = get_direction_deg(c["mean_deg"], cpath + ".mean_deg");
        const double kappa = require_number(c, cpath + ".", "kappa");
        const double weight = require_number(c, cpath + ".", "weight");
        try {
            comps.emplace_back(mean, kappa, weight);
        } catch (const std::invalid_argument &e) {
            fail(cpath, e.what());
        }
    }
    try {
        return VmfMixture(std::move(comps));
    } catch (const std::invalid_argument &e) {
        fail(path, e.what());
    }
}

std::vector<double> parse_tilts_deg(const json &j, const std::string &path, int expected) {
    if (!j.is_array() || static_cast<int>(j.size()) != expected)
        fail(path, "must be an array of " + std::to_string(expected) + " tilts in degrees");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto &v : j) {
        if (!v.is_number())
            fail(path, "tilts must be numbers");
        out.push_back(deg2rad(v.get<double>()));
    }
    return out;
}

PolarizationConfig parse_polarization(const json &root, int num_tx, int num_rx) {
    if (!root.contains("polarization"))
        return preset_config("VV", num_tx, num_rx);
    const json &j = root["polarization"];
    if (j.is_string()) {
        try {
            return preset_config(j.get<std::string>(), num_tx, num_rx);
        } catch (const std::invalid_argument &e) {
            fail("polarization", e.what());
        }
    }
    if (!j.is_object())
        fail("polarization", "must be a preset name or an object with tilt arrays");
    require_keys(j, "polarization", {"label", "tx_tilts_deg", "rx_tilts_deg"});
    if (!j.contains("tx_tilts_deg") || !j.contains("rx_tilts_deg"))
        fail("polarization", "tx_tilts_deg and rx_tilts_deg are required");
    PolarizationConfig cfg;
    cfg.tx_tilts_rad = parse_tilts_deg(j["tx_tilts_deg"], "polarization.tx_tilts_deg", num_tx);
    cfg.rx_tilts_rad = parse_tilts_deg(j["rx_tilts_deg"], "polarization.rx_tilts_deg", num_rx);
    cfg.label = j.contains("label") ? j["label"].get<std::string>() : "custom";
    return cfg;
}

std::vector<MotionPathSpec> parse_cluster_paths(const json &root, const VmfMixture &rx_mixture) {
    if (!root.contains("cluster_paths"))
        return {};
    const json &j = root["cluster_paths"];
    if (!j.is_array())
        fail("cluster_paths", "must be an array");
    if (j.size() != rx_mixture.size())
        fail("cluster_paths", "length " + std::to_string(j.size()) +
                                  " does not match the receive mixture component count " +
                                  std::to_string(rx_mixture.size()));
    std::vector<MotionPathSpec> out;
    out.reserve(j.size());
    for (std::size_t q = 0; q < j.size(); ++q) {
        const std::string path = "cluster_paths[" + std::to_string(q) + "]";
        const json &p = j[q];
        if (!p.is_object())
            fail(path, "must be an object");
        require_keys(p, path,
                     {"start_deg", "dest_deg", "rates_deg_per_s", "sigmas_deg", "segments",
                      "dt_s"});
        UnitDirection start = p.contains("start_deg")
                                  ? get_direction_deg(p["start_deg"], path + ".start_deg")
                                  : rx_mixture.components()[q].mean;
        double sig_el = 0.0, sig_az = 0.0;
        if (p.contains("sigmas_deg")) {
            const json &s = p["sigmas_deg"];
            if (!s.is_array() || s.size() != 2)
                fail(path + ".sigmas_deg", "must be [sigma_elevation, sigma_azimuth] in degrees");
            sig_el = deg2rad(s[0].get<double>());
            sig_az = deg2rad(s[1].get<double>());
        }
        const int segments = get_int(p, path + ".", "segments", 500);
        const double dt = get_number(p, path + ".", "dt_s", 0.01);
        try {
            if (p.contains("dest_deg")) {
                if (p.contains("rates_deg_per_s"))
                    fail(path, "give either dest_deg or rates_deg_per_s, not both");
                out.push_back(MotionPathSpec::to_destination(
                    start, get_direction_deg(p["dest_deg"], path + ".dest_deg"), sig_el, sig_az,
                    segments, dt));
            } else {
                double rate_el = 0.0, rate_az = 0.0;
                if (p.contains("rates_deg_per_s")) {
                    const json &r = p["rates_deg_per_s"];
                    if (!r.is_array() || r.size() != 2)
                        fail(path + ".rates_deg_per_s",
                             "must be [rate_elevation, rate_azimuth] in deg/s");
                    rate_el = deg2rad(r[0].get<double>());
                    rate_az = deg2rad(r[1].get<double>());
                }
                out.push_back(MotionPathSpec::with_rates(start, rate_el, rate_az, sig_el, sig_az,
                                                         segments, dt));
            }
        } catch (const std::invalid_argument &e) {
            fail(path, e.what());
        }
    }
    return out;
}

QuadratureSettings parse_quadrature(const json &root) {
    QuadratureSettings qs;
    if (!root.contains("quadrature"))
        return qs;
    const json &j = root["quadrature"];
    if (!j.is_object())
        fail("quadrature", "must be an object");
    require_keys(j, "quadrature", {"n_elevation", "n_azimuth", "rel_tol", "max_doublings"});
    qs.n_elevation = get_int(j, "quadrature.", "n_elevation", qs.n_elevation);
    qs.n_azimuth = get_int(j, "quadrature.", "n_azimuth", qs.n_azimuth);
    qs.rel_tol = get_number(j, "quadrature.", "rel_tol", qs.rel_tol);
    qs.max_doublings = get_int(j, "quadrature.", "max_doublings", qs.max_doublings);
    if (qs.n_elevation < 2 || qs.n_azimuth < 2)
        fail("quadrature", "grid must be at least 2x2");
    if (qs.max_doublings < 0)
        fail("quadrature.max_doublings", "must be >= 0");
    return qs;
}

XpdForSnr parse_xpd_for_snr(const json &root) {
    if (!root.contains("xpd_for_snr"))
        return XpdForSnr::Auto;
    const std::string v = root["xpd_for_snr"].get<std::string>();
    if (v == "auto")
        return XpdForSnr::Auto;
    if (v == "v")
        return XpdForSnr::VPol;
    if (v == "h")
        return XpdForSnr::HPol;
    if (v == "mean")
        return XpdForSnr::Mean;
    fail("xpd_for_snr", "must be one of auto, v, h, mean (got '" + v + "')");
}

json direction_to_json(const UnitDirection &d) {
    return json{{"elevation", d.elevation_deg()}, {"azimuth", d.azimuth_deg()}};
}

} // namespace

DepolarizationStats ScenarioConfig::depolarization() const {
    return DepolarizationStats(xpd_from_db(xpd_v_db), xpd_from_db(xpd_h_db), xpd_from_db(cpr_db));
}

XpdSelection ScenarioConfig::resolved_xpd_selection() const {
    switch (xpd_for_snr) {
    case XpdForSnr::VPol:
        return XpdSelection::VPol;
    case XpdForSnr::HPol:
        return XpdSelection::HPol;
    case XpdForSnr::Mean:
        return XpdSelection::Mean;
    case XpdForSnr::Auto:
        break;
    }
    if (polarization.label == "VH" || polarization.label == "SLANT45")
        return XpdSelection::Mean;
    return XpdSelection::VPol;
}

double ScenarioConfig::rho0_linear() const { return std::pow(10.0, snr_db / 10.0); }

bool ScenarioConfig::has_random_paths() const {
    for (const auto &p : cluster_paths)
        if (!p.is_deterministic())
            return true;
    return false;
}

ScenarioConfig parse_scenario(const std::string &text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw std::invalid_argument("scenario: document must be a JSON object");
    require_keys(root, "",
                 {"wavelength_m", "carrier_frequency_hz", "seed", "snr_db", "xpd_v_db",
                  "xpd_h_db", "cpr_db", "xpd_for_snr", "n_channel_draws", "n_trajectory_draws",
                  "polarization", "tx_array", "rx_array", "tx_motion", "rx_motion", "tx_mixture",
                  "rx_mixture", "cluster_paths", "quadrature"});

    const bool has_wl = root.contains("wavelength_m");
    const bool has_fc = root.contains("carrier_frequency_hz");
    if (has_wl == has_fc)
        fail("wavelength_m", "exactly one of wavelength_m or carrier_frequency_hz is required");
    double wavelength;
    if (has_wl) {
        wavelength = require_number(root, "", "wavelength_m");
        if (!(wavelength > 0.0))
            fail("wavelength_m", "must be > 0");
    } else {
        const double fc = require_number(root, "", "carrier_frequency_hz");
        if (!(fc > 0.0))
            fail("carrier_frequency_hz", "must be > 0");
        wavelength = kSpeedOfLight / fc;
    }

    std::uint64_t seed = kDefaultSeed;
    if (root.contains("seed")) {
        if (!root["seed"].is_number_integer() && !root["seed"].is_number_unsigned())
            fail("seed", "must be an unsigned integer");
        seed = root["seed"].get<std::uint64_t>();
    }

    ArrayGeometry tx_array = parse_array(root, "tx_array", {0.0, 0.0, 0.0});
    ArrayGeometry rx_array = parse_array(root, "rx_array", {0.0, 100.0, 0.0});
    VmfMixture tx_mixture = parse_mixture(root, "tx_mixture");
    VmfMixture rx_mixture = parse_mixture(root, "rx_mixture");

    const int draws = get_int(root, "", "n_channel_draws", 10000);
    if (draws < 1)
        fail("n_channel_draws", "must be >= 1");
    const int traj_draws = get_int(root, "", "n_trajectory_draws", 50);
    if (traj_draws < 1)
        fail("n_trajectory_draws", "must be >= 1");

    return ScenarioConfig{wavelength,
                          seed,
                          get_number(root, "", "snr_db", 10.0),
                          get_number(root, "", "xpd_v_db", 9.0),
                          get_number(root, "", "xpd_h_db", 9.0),
                          get_number(root, "", "cpr_db", 2.0),
                          parse_xpd_for_snr(root),
                          draws,
                          traj_draws,
                          parse_polarization(root, tx_array.num_elements, rx_array.num_elements),
                          tx_array,
                          rx_array,
                          parse_motion(root, "tx_motion"),
                          parse_motion(root, "rx_motion"),
                          tx_mixture,
                          rx_mixture,
                          parse_cluster_paths(root, rx_mixture),
                          parse_quadrature(root)};
}

ScenarioConfig load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("scenario: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const ScenarioConfig &cfg) {
    json root;
    root["wavelength_m"] = cfg.wavelength_m;
    root["seed"] = cfg.seed;
    root["snr_db"] = cfg.snr_db;
    root["xpd_v_db"] = cfg.xpd_v_db;
    root["xpd_h_db"] = cfg.xpd_h_db;
    root["cpr_db"] = cfg.cpr_db;
    switch (cfg.xpd_for_snr) {
    case XpdForSnr::Auto:
        root["xpd_for_snr"] = "auto";
        break;
    case XpdForSnr::VPol:
        root["xpd_for_snr"] = "v";
        break;
    case XpdForSnr::HPol:
        root["xpd_for_snr"] = "h";
        break;
    case XpdForSnr::Mean:
        root["xpd_for_snr"] = "mean";
        break;
    }
    root["n_channel_draws"] = cfg.n_channel_draws;
    root["n_trajectory_draws"] = cfg.n_trajectory_draws;

    const auto &pol = cfg.polarization;
    if (pol.label == "VV" || pol.label == "VH" || pol.label == "SLANT45") {
        root["polarization"] = pol.label;
    } else {
        json p;
        p["label"] = pol.label;
        json txt = json::array(), rxt = json::array();
        for (double t : pol.tx_tilts_rad)
            txt.push_back(rad2deg(t));
        for (double t : pol.rx_tilts_rad)
            rxt.push_back(rad2deg(t));
        p["tx_tilts_deg"] = txt;
        p["rx_tilts_deg"] = rxt;
        root["polarization"] = p;
    }

    auto array_to_json = [](const ArrayGeometry &g) {
        json j;
        j["num_elements"] = g.num_elements;
        j["spacing_wl"] = g.spacing_wl;
        j["orientation_deg"] = direction_to_json(g.orientation);
        j["center_m"] = {g.center_m[0], g.center_m[1], g.center_m[2]};
        return j;
    };
    root["tx_array"] = array_to_json(cfg.tx_array);
    root["rx_array"] = array_to_json(cfg.rx_array);
    root["tx_motion"] = json{{"initial_radius_m", cfg.tx_motion.initial_radius_m},
                             {"radial_velocity_mps", cfg.tx_motion.radial_velocity_mps}};
    root["rx_motion"] = json{{"initial_radius_m", cfg.rx_motion.initial_radius_m},
                             {"radial_velocity_mps", cfg.rx_motion.radial_velocity_mps}};

    auto mixture_to_json = [](const VmfMixture &m) {
        json arr = json::array();
        for (const auto &c : m.components())
            arr.push_back(json{{"mean_deg", direction_to_json(c.mean)},
                               {"kappa", c.kappa},
                               {"weight", c.weight}});
        return arr;
    };
    root["tx_mixture"] = mixture_to_json(cfg.tx_mixture);
    root["rx_mixture"] = mixture_to_json(cfg.rx_mixture);

    if (!cfg.cluster_paths.empty()) {
        json arr = json::array();
        for (const auto &p : cfg.cluster_paths) {
            json j;
            j["start_deg"] = direction_to_json(p.start);
            if (p.dest.has_value())
                j["dest_deg"] = direction_to_json(*p.dest);
            else
                j["rates_deg_per_s"] = {rad2deg(p.rate_elevation_rps),
                                        rad2deg(p.rate_azimuth_rps)};
            j["sigmas_deg"] = {rad2deg(p.sigma_elevation_rad), rad2deg(p.sigma_azimuth_rad)};
            j["segments"] = p.segments;
            j["dt_s"] = p.dt_s;
            arr.push_back(j);
        }
        root["cluster_paths"] = arr;
    }

    root["quadrature"] = json{{"n_elevation", cfg.quadrature.n_elevation},
                              {"n_azimuth", cfg.quadrature.n_azimuth},
                              {"rel_tol", cfg.quadrature.rel_tol},
                              {"max_doublings", cfg.quadrature.max_doublings}};
    return root.dump(2) + "\n";
}

} // namespace polarchan
