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

#include "polarchan/stcf.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "polarchan/motion.hpp"
#include "polarchan/scenario.hpp"

namespace polarchan {

DepolarizationStats::DepolarizationStats(double inv_xpd_v, double inv_xpd_h, double inv_cpr)
    : inv_xpd_v(inv_xpd_v), inv_xpd_h(inv_xpd_h), inv_cpr(inv_cpr) {
    if (!std::isfinite(inv_xpd_v) || inv_xpd_v < 0.0)
        throw std::invalid_argument("DepolarizationStats: E[1/XPD_v] must be finite and >= 0");
    if (!std::isfinite(inv_xpd_h) || inv_xpd_h < 0.0)
        throw std::invalid_argument("DepolarizationStats: E[1/XPD_h] must be finite and >= 0");
    if (!std::isfinite(inv_cpr) || !(inv_cpr > 0.0))
        throw std::invalid_argument("DepolarizationStats: E[1/CPR] must be finite and > 0");
}

double xpd_from_db(double db_value) {
    if (!std::isfinite(db_value))
        throw std::invalid_argument("xpd_from_db: dB value must be finite");
    return std::pow(10.0, -db_value / 10.0);
}

SideSnapshot::SideSnapshot(VmfMixture mixture, double radius_m, ArrayGeometry geometry,
                           std::vector<double> tilts_rad)
    : mixture(std::move(mixture)), radius_m(radius_m), geometry(geometry),
      tilts_rad(std::move(tilts_rad)) {
    if (!(radius_m > 0.0))
        throw std::invalid_argument("SideSnapshot: radius must be > 0 m");
    if (static_cast<int>(this->tilts_rad.size()) != geometry.num_elements)
        throw std::invalid_argument("SideSnapshot: " + std::to_string(this->tilts_rad.size()) +
                                    " tilts for " + std::to_string(geometry.num_elements) +
                                    " elements");
}

namespace {

// The second-order distance expansion degrades past offset/radius = 0.1;
// warn a few times per process, never per integrand node.
void warn_small_ratio(double ratio) {
    static std::atomic<int> count{0};
    if (count.fetch_add(1) < 3)
        std::cerr << "polarchan: warning: element offset / sphere radius = " << ratio
                  << " exceeds 0.1; the small-offset distance expansion degrades\n";
}

// Pattern/phase kernel shared by the quadrature engine and the Monte Carlo
// discrete sum, so the two routes differ only in how directions are weighted.
class SideKernel {
  public:
    SideKernel(const SideSnapshot &s, double wavelength_m)
        : n_(s.geometry.num_elements), radius_(s.radius_m), k0_(kTwoPi / wavelength_m) {
        if (!(wavelength_m > 0.0))
            throw std::invalid_argument("wavelength must be > 0 m");
        axis_ = unit_vector(s.geometry.orientation);
        axial_.resize(n_);
        tilt_of_.resize(n_);
        for (int k = 0; k < n_; ++k) {
            axial_[k] = element_axial_offset(s.geometry, k, wavelength_m);
            const double tilt = s.tilts_rad[k];
            int idx = -1;
            for (std::size_t t = 0; t < tilts_.size(); ++t)
                if (tilts_[t] == tilt)
                    idx = static_cast<int>(t);
            if (idx < 0) {
                idx = static_cast<int>(tilts_.size());
                tilts_.push_back(tilt);
                tilt_sin_.push_back(std::sin(tilt));
                tilt_cos_.push_back(std::cos(tilt));
            }
            tilt_of_[k] = idx;
        }
        fv_.resize(tilts_.size());
        fh_.resize(tilts_.size());
        if (!axial_.empty() && axial_.back() / radius_ > 0.1)
            warn_small_ratio(axial_.back() / radius_);
    }

    int num_elements() const { return n_; }

    // Add w * exp(-j k0 D_mn) F_m F_n for every pair m <= n of both
    // polarizations. (se, ce, ca, sa) are the direction's sin/cos values.
    void accumulate(double se, double ce, double ca, double sa, double w, Eigen::MatrixXcd &mv,
                    Eigen::MatrixXcd &mh) {
        const double u = axis_[0] * se * ca + axis_[1] * se * sa + axis_[2] * ce;
        for (std::size_t t = 0; t < tilts_.size(); ++t) {
            const double sg = tilt_sin_[t], cg = tilt_cos_[t];
            const double xi = se * ca * sg + ce * cg;
            const double shape = dipole_shape_factor(xi);
            fv_[t] = std::abs((ce * ca * sg - se * cg) * shape);
            fh_[t] = std::abs(sa * sg * shape);
        }
        for (int m = 0; m < n_; ++m) {
            const double cm = axial_[m] * u;
            const int tm = tilt_of_[m];
            mv(m, m) += w * fv_[tm] * fv_[tm];
            mh(m, m) += w * fh_[tm] * fh_[tm];
            for (int n = m + 1; n < n_; ++n) {
                const double cn = axial_[n] * u;
                const int tn = tilt_of_[n];
                const double d = (cn - cm) * (1.0 + (cn + cm) / (2.0 * radius_));
                const auto phase = std::polar(1.0, -k0_ * d);
                mv(m, n) += w * fv_[tm] * fv_[tn] * phase;
                mh(m, n) += w * fh_[tm] * fh_[tn] * phase;
            }
        }
    }

    static void mirror(Eigen::MatrixXcd &m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < i; ++j)
                m(i, j) = std::conj(m(j, i));
    }

  private:
    int n_;
    double radius_;
    double k0_;
    std::array<double, 3> axis_{};
    std::vector<double> axial_;
    std::vector<int> tilt_of_;
    std::vector<double> tilts_, tilt_sin_, tilt_cos_;
    std::vector<double> fv_, fh_; // per-node scratch
};

struct ComponentTrig {
    double sin_mean, cos_mean, cos_az, sin_az, norm;
};

// One component's side matrices on an (n_el x n_az) product grid.
SideIntegralSet eval_component(SideKernel &kernel, const VmfComponent &comp, int n_el, int n_az) {
    const int n = kernel.num_elements();
    SideIntegralSet out{Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n)};

    std::vector<double> el, wel;
    gauss_legendre(n_el, 0.0, kPi, el, wel);
    const double waz = kTwoPi / n_az;

    const double sm = std::sin(comp.mean.elevation());
    const double cm = std::cos(comp.mean.elevation());
    const double cam = std::cos(comp.mean.azimuth());
    const double sam = std::sin(comp.mean.azimuth());
    // same log-space normalization as vmf_pdf
    const double norm = comp.kappa < 1e-12
                            ? 1.0 / (4.0 * kPi)
                            : comp.kappa / (2.0 * kPi * (-std::expm1(-2.0 * comp.kappa)));

    std::vector<double> ca(n_az), sa(n_az);
    for (int j = 0; j < n_az; ++j) {
        ca[j] = std::cos(j * waz);
        sa[j] = std::sin(j * waz);
    }

    for (int i = 0; i < n_el; ++i) {
        const double se = std::sin(el[i]);
        const double ce = std::cos(el[i]);
        const double wrow = wel[i] * waz * se; // sin(elevation) Jacobian of the density
        for (int j = 0; j < n_az; ++j) {
            const double x = sm * se * (ca[j] * cam + sa[j] * sam) + cm * ce;
            const double f = norm * std::exp(comp.kappa * (x - 1.0));
            kernel.accumulate(se, ce, ca[j], sa[j], wrow * f, out.v, out.h);
        }
    }
    SideKernel::mirror(out.v);
    SideKernel::mirror(out.h);
    return out;
}

double set_scale(const SideIntegralSet &s) {
    return std::max(s.v.cwiseAbs().maxCoeff(), s.h.cwiseAbs().maxCoeff());
}

double set_delta(const SideIntegralSet &a, const SideIntegralSet &b) {
    return std::max((a.v - b.v).cwiseAbs().maxCoeff(), (a.h - b.h).cwiseAbs().maxCoeff());
}

constexpr double kQuadAtol = 1e-12;

// Refine one component by grid doubling until the matrix set stabilizes.
SideIntegralSet converge_component(SideKernel &kernel, const VmfComponent &comp,
                                   const QuadratureSettings &qs, std::size_t comp_index) {
    if (qs.n_elevation < 2 || qs.n_azimuth < 2)
        throw std::invalid_argument("QuadratureSettings: grid must be at least 2x2");
    if (qs.rel_tol <= 0.0)
        return eval_component(kernel, comp, qs.n_elevation, qs.n_azimuth);

    int n_el = qs.n_elevation, n_az = qs.n_azimuth;
    SideIntegralSet coarse = eval_component(kernel, comp, n_el, n_az);
    for (int attempt = 0;; ++attempt) {
        SideIntegralSet fine = eval_component(kernel, comp, 2 * n_el, 2 * n_az);
        const double delta = set_delta(coarse, fine);
        const double tol = std::max(qs.rel_tol * std::max(set_scale(fine), kQuadAtol), kQuadAtol);
        if (delta <= tol)
            return fine;
        if (attempt >= qs.max_doublings) {
            // locate the worst entry for the error payload
            Eigen::Index wi = 0, wj = 0;
            bool in_v = true;
            double worst = -1.0;
            for (int p = 0; p < 2; ++p) {
                const auto &fa = p == 0 ? coarse.v : coarse.h;
                const auto &fb = p == 0 ? fine.v : fine.h;
                Eigen::Index ii, jj;
                const double d = (fa - fb).cwiseAbs().maxCoeff(&ii, &jj);
                if (d > worst) {
                    worst = d;
                    wi = ii;
                    wj = jj;
                    in_v = (p == 0);
                }
            }
            const auto &ma = in_v ? coarse.v : coarse.h;
            const auto &mb = in_v ? fine.v : fine.h;
            throw QuadratureError(
                "side integral for component " + std::to_string(comp_index) +
                    " did not converge after " + std::to_string(qs.max_doublings) +
                    " doublings (grid " + std::to_string(2 * n_el) + "x" + std::to_string(2 * n_az) +
                    ", residual " + std::to_string(worst) + ")",
                ma(wi, wj), mb(wi, wj));
        }
        n_el *= 2;
        n_az *= 2;
        coarse = std::move(fine);
    }
}

struct PolarTerm {
    Polarization rx_pol;
    Polarization tx_pol;
    double weight;
};

std::array<PolarTerm, 4> polar_terms(const DepolarizationStats &depol) {
    return {PolarTerm{Polarization::Vertical, Polarization::Vertical, 1.0},
            PolarTerm{Polarization::Vertical, Polarization::Horizontal, depol.inv_xpd_v},
            PolarTerm{Polarization::Horizontal, Polarization::Vertical,
                      depol.inv_xpd_h * depol.inv_cpr},
            PolarTerm{Polarization::Horizontal, Polarization::Horizontal, depol.inv_cpr}};
}

const Eigen::MatrixXcd &pick(const SideIntegralSet &s, Polarization p) {
    return p == Polarization::Vertical ? s.v : s.h;
}

std::complex<double> unnormalized_entry(const SideIntegralSet &tx, const SideIntegralSet &rx,
                                        const std::array<PolarTerm, 4> &terms, int p, int m, int q,
                                        int n) {
    std::complex<double> val{0.0, 0.0};
    for (const auto &t : terms)
        val += t.weight * pick(tx, t.tx_pol)(m, n) * pick(rx, t.rx_pol)(p, q);
    return val;
}

Eigen::MatrixXcd normalized_matrix(const SideIntegralSet &tx, const SideIntegralSet &rx,
                                   const DepolarizationStats &depol) {
    const int s = static_cast<int>(tx.v.rows());
    const int u = static_cast<int>(rx.v.rows());
    const int us = u * s;
    const auto terms = polar_terms(depol);

    Eigen::VectorXd self(us);
    for (int i = 0; i < us; ++i) {
        const int p = i % u, m = i / u;
        const double power = std::real(unnormalized_entry(tx, rx, terms, p, m, p, m));
        if (!(power > 0.0) || !std::isfinite(power))
            throw std::runtime_error("correlation: zero subchannel self-power for (rx " +
                                     std::to_string(p) + ", tx " + std::to_string(m) +
                                     "); degenerate pattern/mixture combination");
        self(i) = power;
    }
    Eigen::MatrixXcd r(us, us);
    for (int i = 0; i < us; ++i) {
        r(i, i) = 1.0;
        const int p = i % u, m = i / u;
        for (int j = i + 1; j < us; ++j) {
            const int q = j % u, n = j / u;
            const auto val = unnormalized_entry(tx, rx, terms, p, m, q, n);
            r(i, j) = val / std::sqrt(self(i) * self(j));
            r(j, i) = std::conj(r(i, j));
        }
    }
    return r;
}

} // namespace

SideIntegralSet compute_side_integrals(const SideSnapshot &s, double wavelength_m,
                                       const QuadratureSettings &qs) {
    SideKernel kernel(s, wavelength_m);
    const int n = s.geometry.num_elements;
    SideIntegralSet total{Eigen::MatrixXcd::Zero(n, n), Eigen::MatrixXcd::Zero(n, n)};
    const auto &comps = s.mixture.components();
    for (std::size_t q = 0; q < comps.size(); ++q) {
        const SideIntegralSet part = converge_component(kernel, comps[q], qs, q);
        total.v += comps[q].weight * part.v;
        total.h += comps[q].weight * part.h;
    }
    return total;
}

std::complex<double> side_integral(const SideSnapshot &s, Polarization pol, int m, int n,
                                   double wavelength_m, const QuadratureSettings &qs) {
    if (m < 0 || m >= s.geometry.num_elements || n < 0 || n >= s.geometry.num_elements)
        throw std::out_of_range("side_integral: element index out of range");
    return pick(compute_side_integrals(s, wavelength_m, qs), pol)(m, n);
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXcd entries, int num_rx, int num_tx)
    : entries_(std::move(entries)), num_rx_(num_rx), num_tx_(num_tx) {
    const int us = num_rx * num_tx;
    if (num_rx < 1 || num_tx < 1 || entries_.rows() != us || entries_.cols() != us)
        throw std::invalid_argument("CorrelationMatrix: entries must be (U*S) x (U*S)");
    const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-8)
        throw std::invalid_argument("CorrelationMatrix: not Hermitian (residual " +
                                    std::to_string(herm) + ")");
    for (int i = 0; i < us; ++i)
        if (std::abs(entries_(i, i) - 1.0) > 1e-6)
            throw std::invalid_argument("CorrelationMatrix: diagonal entry " + std::to_string(i) +
                                        " is not 1");
}

Eigen::MatrixXcd repair_psd(const Eigen::MatrixXcd &matrix) {
    Eigen::MatrixXcd h = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("repair_psd: eigendecomposition failed");
    if (es.eigenvalues().minCoeff() < -1e-10) {
        const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
        h = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    }
    Eigen::VectorXd d = h.diagonal().real();
    for (int i = 0; i < d.size(); ++i)
        if (!(d(i) > 0.0))
            throw std::runtime_error("repair_psd: nonpositive diagonal after clipping");
    const Eigen::VectorXd scale = d.cwiseSqrt().cwiseInverse();
    h = scale.asDiagonal() * h * scale.asDiagonal();
    for (int i = 0; i < d.size(); ++i)
        h(i, i) = 1.0;
    return 0.5 * (h + h.adjoint());
}

CorrelationMatrix assemble_correlation(const SideIntegralSet &tx, const SideIntegralSet &rx,
                                       const DepolarizationStats &depol) {
    Eigen::MatrixXcd r = normalized_matrix(tx, rx, depol);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        r = repair_psd(r);
    return CorrelationMatrix(std::move(r), static_cast<int>(rx.v.rows()),
                             static_cast<int>(tx.v.rows()));
}

std::complex<double> correlation_entry(int p, int m, int q, int n, const SideSnapshot &tx,
                                       const SideSnapshot &rx, const DepolarizationStats &depol,
                                       double wavelength_m, const QuadratureSettings &qs) {
    const int s_el = tx.geometry.num_elements, u_el = rx.geometry.num_elements;
    if (m < 0 || m >= s_el || n < 0 || n >= s_el)
        throw std::out_of_range("correlation_entry: tx index out of range");
    if (p < 0 || p >= u_el || q < 0 || q >= u_el)
        throw std::out_of_range("correlation_entry: rx index out of range");
    const auto txi = compute_side_integrals(tx, wavelength_m, qs);
    const auto rxi = compute_side_integrals(rx, wavelength_m, qs);
    const Eigen::MatrixXcd r = normalized_matrix(txi, rxi, depol);
    return r(p + m * u_el, q + n * u_el);
}

CorrelationMatrix correlation_matrix(const SideSnapshot &tx, const SideSnapshot &rx,
                                     const DepolarizationStats &depol, double wavelength_m,
                                     const QuadratureSettings &qs) {
    const auto txi = compute_side_integrals(tx, wavelength_m, qs);
    const auto rxi = compute_side_integrals(rx, wavelength_m, qs);
    return assemble_correlation(txi, rxi, depol);
}

double mean_correlation(const CorrelationMatrix &r) {
    const int us = r.dim();
    if (us < 2)
        throw std::invalid_argument("mean_correlation: needs at least a 2x2 matrix");
    double sum = 0.0;
    for (int i = 0; i < us; ++i)
        for (int j = i + 1; j < us; ++j)
            sum += std::abs(r.entries()(i, j));
    return sum / (0.5 * us * (us - 1));
}

MonteCarloStcf stcf_monte_carlo(const SideSnapshot &tx, const SideSnapshot &rx,
                                const DepolarizationStats &depol, double wavelength_m,
                                std::size_t n_scatterers, std::uint64_t seed) {
    if (n_scatterers < 1000)
        throw std::invalid_argument("stcf_monte_carlo: needs at least 1000 scatterers");

    constexpr int kBatches = 50;
    SideKernel tx_kernel(tx, wavelength_m);
    SideKernel rx_kernel(rx, wavelength_m);
    const int s_el = tx.geometry.num_elements, u_el = rx.geometry.num_elements;
    const int us = u_el * s_el;

    auto tx_rng = RandomStream::derive(seed, {stream_tag::mc_scatterers_tx});
    auto rx_rng = RandomStream::derive(seed, {stream_tag::mc_scatterers_rx});

    std::vector<SideIntegralSet> tx_batch, rx_batch;
    SideIntegralSet tx_total{Eigen::MatrixXcd::Zero(s_el, s_el), Eigen::MatrixXcd::Zero(s_el, s_el)};
    SideIntegralSet rx_total{Eigen::MatrixXcd::Zero(u_el, u_el), Eigen::MatrixXcd::Zero(u_el, u_el)};

    const std::size_t base = n_scatterers / kBatches;
    const std::size_t rem = n_scatterers % kBatches;
    for (int b = 0; b < kBatches; ++b) {
        const std::size_t nb = base + (static_cast<std::size_t>(b) < rem ? 1 : 0);
        SideIntegralSet ts{Eigen::MatrixXcd::Zero(s_el, s_el), Eigen::MatrixXcd::Zero(s_el, s_el)};
        SideIntegralSet rs{Eigen::MatrixXcd::Zero(u_el, u_el), Eigen::MatrixXcd::Zero(u_el, u_el)};
        for (const auto &d : sample_mixture(tx.mixture, tx_rng, nb)) {
            const double se = std::sin(d.elevation()), ce = std::cos(d.elevation());
            tx_kernel.accumulate(se, ce, std::cos(d.azimuth()), std::sin(d.azimuth()), 1.0 / nb,
                                 ts.v, ts.h);
        }
        for (const auto &d : sample_mixture(rx.mixture, rx_rng, nb)) {
            const double se = std::sin(d.elevation()), ce = std::cos(d.elevation());
            rx_kernel.accumulate(se, ce, std::cos(d.azimuth()), std::sin(d.azimuth()), 1.0 / nb,
                                 rs.v, rs.h);
        }
        SideKernel::mirror(ts.v);
        SideKernel::mirror(ts.h);
        SideKernel::mirror(rs.v);
        SideKernel::mirror(rs.h);
        const double wb = static_cast<double>(nb) / n_scatterers;
        tx_total.v += wb * ts.v;
        tx_total.h += wb * ts.h;
        rx_total.v += wb * rs.v;
        rx_total.h += wb * rs.h;
        tx_batch.push_back(std::move(ts));
        rx_batch.push_back(std::move(rs));
    }

    MonteCarloStcf result{normalized_matrix(tx_total, rx_total, depol),
                          Eigen::MatrixXd::Zero(us, us), u_el, s_el};

    // batch replicates of the fully normalized estimator
    std::vector<Eigen::MatrixXcd> reps;
    reps.reserve(kBatches);
    for (int b = 0; b < kBatches; ++b)
        reps.push_back(normalized_matrix(tx_batch[b], rx_batch[b], depol));
    Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(us, us);
    for (const auto &r : reps)
        mean += r;
    mean /= static_cast<double>(kBatches);
    Eigen::MatrixXd var = Eigen::MatrixXd::Zero(us, us);
    for (const auto &r : reps)
        var += (r - mean).cwiseAbs2();
    result.std_error = (var / (static_cast<double>(kBatches) * (kBatches - 1))).cwiseSqrt();
    return result;
}

namespace {

std::vector<double> checked_tilts(const std::vector<double> &tilts, int n) {
    if (static_cast<int>(tilts.size()) != n)
        throw std::invalid_argument("polarization tilt count does not match array size");
    return tilts;
}

} // namespace

std::vector<CorrelationMatrix> stcf_over_time(const ScenarioConfig &cfg,
                                              std::span<const double> times_s,
                                              int trajectory_draws) {
    if (times_s.empty())
        throw std::invalid_argument("stcf_over_time: empty time grid");
    const bool moving = !cfg.cluster_paths.empty();
    if (moving && cfg.cluster_paths.size() != cfg.rx_mixture.size())
        throw std::invalid_argument("stcf_over_time: cluster path count does not match the "
                                    "receive mixture");
    for (double t : times_s) {
        if (t < 0.0)
            throw std::invalid_argument("stcf_over_time: negative time");
        if (moving)
            for (const auto &p : cfg.cluster_paths)
                if (t > p.horizon_s() + 0.5 * p.dt_s)
                    throw std::invalid_argument("stcf_over_time: time " + std::to_string(t) +
                                                " s beyond the path horizon " +
                                                std::to_string(p.horizon_s()) + " s");
    }
    const bool random = moving && cfg.has_random_paths();
    const int draws = random ? std::max(1, trajectory_draws) : 1;

    const auto depol = cfg.depolarization();
    const auto tx_tilts = checked_tilts(cfg.polarization.tx_tilts_rad, cfg.tx_array.num_elements);
    const auto rx_tilts = checked_tilts(cfg.polarization.rx_tilts_rad, cfg.rx_array.num_elements);
    const int us = cfg.tx_array.num_elements * cfg.rx_array.num_elements;

    std::vector<Eigen::MatrixXcd> acc(times_s.size(), Eigen::MatrixXcd::Zero(us, us));
    for (int b = 0; b < draws; ++b) {
        std::vector<Trajectory> paths;
        if (moving) {
            paths.reserve(cfg.cluster_paths.size());
            for (std::size_t q = 0; q < cfg.cluster_paths.size(); ++q) {
                auto rng = RandomStream::derive(
                    cfg.seed, {stream_tag::trajectory, static_cast<std::uint64_t>(b),
                               static_cast<std::uint64_t>(q)});
                paths.push_back(motion_path(cfg.cluster_paths[q], rng));
            }
        }
        for (std::size_t ti = 0; ti < times_s.size(); ++ti) {
            const double t = times_s[ti];
            SideSnapshot tx_snap(cfg.tx_mixture, radius_at(cfg.tx_motion, t), cfg.tx_array,
                                 tx_tilts);
            VmfMixture rx_mix = cfg.rx_mixture;
            if (moving) {
                std::vector<UnitDirection> means;
                means.reserve(paths.size());
                for (const auto &p : paths)
                    means.push_back(p.direction_at(t));
                rx_mix = translate_mixture(rx_mix, means);
            }
            SideSnapshot rx_snap(std::move(rx_mix), radius_at(cfg.rx_motion, t), cfg.rx_array,
                                 rx_tilts);
            acc[ti] += correlation_matrix(tx_snap, rx_snap, depol, cfg.wavelength_m,
                                          cfg.quadrature)
                           .entries();
        }
    }

    std::vector<CorrelationMatrix> out;
    out.reserve(times_s.size());
    for (auto &m : acc) {
        m /= static_cast<double>(draws);
        out.emplace_back(repair_psd(m), cfg.rx_array.num_elements, cfg.tx_array.num_elements);
    }
    return out;
}

} // namespace polarchan
