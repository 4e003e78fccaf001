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

#ifndef POLARCHAN_REALIZATION_HPP
#define POLARCHAN_REALIZATION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "polarchan/rng.hpp"
#include "polarchan/stcf.hpp"

namespace polarchan {

/// One U x S draw of the normalized channel matrix.
struct ChannelDraw {
    Eigen::MatrixXcd matrix;
};

struct CapacityStats {
    double mean_bpshz;
    double std_error_bpshz;
    std::size_t n_draws;
};

/// Hermitian square root via eigendecomposition; result * result^H
/// reconstructs the input.
Eigen::MatrixXcd matrix_sqrt_psd(const Eigen::MatrixXcd &r);

/// H = unvec(R^(1/2) vec(H_w)) with H_w i.i.d. CN(0, 1) (variance 1/2 per
/// quadrature component) and column-stacking consistent with the
/// CorrelationMatrix ordering.
ChannelDraw realize_channel(const CorrelationMatrix &r, RandomStream &rng);

/// log2 det(I + (snr / S) H H^+), evaluated through the eigenvalues of
/// H H^+ so it is exactly nonnegative and monotone in snr.
double capacity(const ChannelDraw &h, double snr_linear, int num_tx);

/// Effective SNR under polarization power dissipation: rho0 / (1 + E[1/XPD]).
double effective_snr(double rho0_linear, double inv_xpd);

/// Which depolarization statistic feeds the effective SNR.
enum class XpdSelection { VPol, HPol, Mean };

double selected_inv_xpd(const DepolarizationStats &depol, XpdSelection sel);

/// Mean and standard error of the instantaneous capacity over n_draws
/// channel realizations. Draw d uses the stream derived from
/// (seed, stream_tag::channel_draw, d) and the reduction is a fixed pairwise
/// tree, so the result is bit-identical regardless of evaluation order.
CapacityStats ergodic_capacity(const CorrelationMatrix &r, double rho0_linear,
                               const DepolarizationStats &depol, XpdSelection sel,
                               std::size_t n_draws, std::uint64_t seed);

/// Capacity statistics for several SNR points sharing the same channel
/// draws (the per-draw capacities are monotone in SNR, so orderings across
/// the grid are exact).
std::vector<CapacityStats> capacity_over_snr(const CorrelationMatrix &r,
                                             std::span<const double> snr_linear,
                                             std::size_t n_draws, std::uint64_t seed);

} // namespace polarchan

#endif
