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

#include "polarchan/realization.hpp"

#include <cmath>
#include <stdexcept>

namespace polarchan {

namespace {

// Fixed pairwise tree reduction; the result does not depend on how the work
// producing `v` was scheduled.
double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v)
            s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

} // namespace

Eigen::MatrixXcd matrix_sqrt_psd(const Eigen::MatrixXcd &r) {
    if (r.rows() != r.cols())
        throw std::invalid_argument("matrix_sqrt_psd: matrix must be square");
    const double scale = std::max(r.cwiseAbs().maxCoeff(), 1.0);
    if ((r - r.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("matrix_sqrt_psd: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("matrix_sqrt_psd: eigendecomposition failed");
    if (es.eigenvalues().minCoeff() < -1e-8 * scale)
        throw std::invalid_argument("matrix_sqrt_psd: matrix is not positive semidefinite");
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

Eigen::MatrixXcd draw_unvec(const Eigen::MatrixXcd &sqrt_r, int num_rx, int num_tx,
                            RandomStream &rng) {
    const int us = num_rx * num_tx;
    Eigen::VectorXcd w(us);
    const double s = 1.0 / std::sqrt(2.0); // variance 1/2 per quadrature component
    for (int i = 0; i < us; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        w(i) = std::complex<double>(s * re, s * im);
    }
    const Eigen::VectorXcd x = sqrt_r * w;
    Eigen::MatrixXcd h(num_rx, num_tx);
    for (int m = 0; m < num_tx; ++m)
        for (int p = 0; p < num_rx; ++p)
            h(p, m) = x(p + m * num_rx);
    return h;
}

} // namespace

ChannelDraw realize_channel(const CorrelationMatrix &r, RandomStream &rng) {
    const Eigen::MatrixXcd sqrt_r = matrix_sqrt_psd(r.entries());
    return ChannelDraw{draw_unvec(sqrt_r, r.num_rx(), r.num_tx(), rng)};
}

double capacity(const ChannelDraw &h, double snr_linear, int num_tx) {
    if (!(snr_linear >= 0.0))
        throw std::invalid_argument("capacity: SNR must be >= 0");
    if (num_tx < 1)
        throw std::invalid_argument("capacity: num_tx must be >= 1");
    const Eigen::MatrixXcd g = h.matrix * h.matrix.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    const double c = snr_linear / num_tx;
    double sum = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        sum += std::log2(1.0 + c * std::max(es.eigenvalues()(i), 0.0));
    return sum;
}

double effective_snr(double rho0_linear, double inv_xpd) {
    if (!(rho0_linear >= 0.0) || !(inv_xpd >= 0.0))
        throw std::invalid_argument("effective_snr: inputs must be >= 0");
    return rho0_linear / (1.0 + inv_xpd);
}

double selected_inv_xpd(const DepolarizationStats &depol, XpdSelection sel) {
    switch (sel) {
    case XpdSelection::VPol:
        return depol.inv_xpd_v;
    case XpdSelection::HPol:
        return depol.inv_xpd_h;
    case XpdSelection::Mean:
        return 0.5 * (depol.inv_xpd_v + depol.inv_xpd_h);
    }
    throw std::logic_error("selected_inv_xpd: unknown selection");
}

std::vector<CapacityStats> capacity_over_snr(const CorrelationMatrix &r,
                                             std::span<const double> snr_linear,
                                             std::size_t n_draws, std::uint64_t seed) {
    if (n_draws < 1)
        throw std::invalid_argument("capacity_over_snr: n_draws must be >= 1");
    for (double rho : snr_linear)
        if (!(rho >= 0.0))
            throw std::invalid_argument("capacity_over_snr: SNR must be >= 0");

    const Eigen::MatrixXcd sqrt_r = matrix_sqrt_psd(r.entries());
    const int num_tx = r.num_tx(), num_rx = r.num_rx();

    std::vector<std::vector<double>> samples(snr_linear.size(),
                                             std::vector<double>(n_draws, 0.0));
    for (std::size_t d = 0; d < n_draws; ++d) {
        auto rng = RandomStream::derive(seed, {stream_tag::channel_draw, d});
        const Eigen::MatrixXcd h = draw_unvec(sqrt_r, num_rx, num_tx, rng);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h * h.adjoint(),
                                                           Eigen::EigenvaluesOnly);
        for (std::size_t k = 0; k < snr_linear.size(); ++k) {
            const double c = snr_linear[k] / num_tx;
            double sum = 0.0;
            for (int i = 0; i < es.eigenvalues().size(); ++i)
                sum += std::log2(1.0 + c * std::max(es.eigenvalues()(i), 0.0));
            samples[k][d] = sum;
        }
    }

    std::vector<CapacityStats> out;
    out.reserve(snr_linear.size());
    for (auto &vals : samples) {
        const double mean = pairwise_sum(vals) / static_cast<double>(n_draws);
        double se = 0.0;
        if (n_draws > 1) {
            std::vector<double> sq(vals.size());
            for (std::size_t i = 0; i < vals.size(); ++i)
                sq[i] = (vals[i] - mean) * (vals[i] - mean);
            const double var = pairwise_sum(sq) / static_cast<double>(n_draws - 1);
            se = std::sqrt(var / static_cast<double>(n_draws));
        }
        out.push_back(CapacityStats{mean, se, n_draws});
    }
    return out;
}

CapacityStats ergodic_capacity(const CorrelationMatrix &r, double rho0_linear,
                               const DepolarizationStats &depol, XpdSelection sel,
                               std::size_t n_draws, std::uint64_t seed) {
    const double rho = effective_snr(rho0_linear, selected_inv_xpd(depol, sel));
    const double rhos[1] = {rho};
    return capacity_over_snr(r, rhos, n_draws, seed).front();
}

} // namespace polarchan
