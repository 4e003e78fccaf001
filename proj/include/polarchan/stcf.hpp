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

#ifndef POLARCHAN_STCF_HPP
#define POLARCHAN_STCF_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "polarchan/antenna.hpp"
#include "polarchan/directional.hpp"
#include "polarchan/geometry.hpp"
#include "polarchan/quadrature.hpp"

namespace polarchan {

struct ScenarioConfig;

enum class Polarization { Vertical, Horizontal };

/// Linear depolarization expectations: E[1/XPD_v], E[1/XPD_h], E[1/CPR].
struct DepolarizationStats {
    double inv_xpd_v;
    double inv_xpd_h;
    double inv_cpr;

    DepolarizationStats(double inv_xpd_v, double inv_xpd_h, double inv_cpr);
};

/// dB ratio -> expectation of the reciprocal, 10^(-db/10). The dB figure is
/// treated as a fixed mean; any distributional model can be injected by
/// supplying the linear expectations directly.
double xpd_from_db(double db_value);

/// One side of the link frozen at a time instant: cluster mixture already
/// advanced to t, sphere radius R(t), array and per-element dipole tilts.
struct SideSnapshot {
    VmfMixture mixture;
    double radius_m;
    ArrayGeometry geometry;
    std::vector<double> tilts_rad;

    SideSnapshot(VmfMixture mixture, double radius_m, ArrayGeometry geometry,
                 std::vector<double> tilts_rad);
};

/// All element-pair integrals of one side, per field polarization. Entry
/// (m, n) is the double integral of
///   exp(-j k0 D_mn) F_m^(pol) F_n^(pol) p(elevation, azimuth)
/// over the sphere; (n, m) holds the conjugate.
struct SideIntegralSet {
    Eigen::MatrixXcd v;
    Eigen::MatrixXcd h;
};

/// Compute both polarization matrices for a snapshot. All entries of a
/// component share one grid (so the discrete Cauchy-Schwarz bound on the
/// normalized correlations holds exactly) and the doubling check applies to
/// the whole matrix set.
SideIntegralSet compute_side_integrals(const SideSnapshot &s, double wavelength_m,
                                       const QuadratureSettings &qs = {});

/// Single side integral, see SideIntegralSet.
std::complex<double> side_integral(const SideSnapshot &s, Polarization pol, int m, int n,
                                   double wavelength_m, const QuadratureSettings &qs = {});

/// US x US normalized channel correlation matrix, ordered like vec(H) for a
/// U x S channel: flat index i = receive + transmit * U. Hermitian with unit
/// diagonal; positive semidefinite after repair.
class CorrelationMatrix {
  public:
    CorrelationMatrix(Eigen::MatrixXcd entries, int num_rx, int num_tx);

    const Eigen::MatrixXcd &entries() const { return entries_; }
    int num_rx() const { return num_rx_; }
    int num_tx() const { return num_tx_; }
    int dim() const { return num_rx_ * num_tx_; }

    std::complex<double> entry(int p, int m, int q, int n) const {
        return entries_(p + m * num_rx_, q + n * num_rx_);
    }

  private:
    Eigen::MatrixXcd entries_;
    int num_rx_;
    int num_tx_;
};

/// Project a Hermitian matrix onto the PSD cone (eigenvalue clipping) and
/// rescale the diagonal to exactly 1. Clipping only triggers when the
/// smallest eigenvalue is below -1e-10.
Eigen::MatrixXcd repair_psd(const Eigen::MatrixXcd &matrix);

/// Assemble the normalized correlation matrix from precomputed side
/// integrals. The four depolarization-weighted terms pair (rx pol, tx pol) =
/// (v,v), (v,h), (h,v), (h,h) with weights 1, E[1/XPD_v],
/// E[1/XPD_h] E[1/CPR], E[1/CPR].
CorrelationMatrix assemble_correlation(const SideIntegralSet &tx, const SideIntegralSet &rx,
                                       const DepolarizationStats &depol);

/// Normalized correlation between subchannels (p, m) and (q, n); (p, m) ==
/// (q, n) gives exactly 1.
std::complex<double> correlation_entry(int p, int m, int q, int n, const SideSnapshot &tx,
                                       const SideSnapshot &rx, const DepolarizationStats &depol,
                                       double wavelength_m, const QuadratureSettings &qs = {});

/// Full matrix via the quadrature engine; upper triangle computed, mirrored,
/// PSD-repaired.
CorrelationMatrix correlation_matrix(const SideSnapshot &tx, const SideSnapshot &rx,
                                     const DepolarizationStats &depol, double wavelength_m,
                                     const QuadratureSettings &qs = {});

/// Average off-diagonal magnitude, sum_{i<j} |r_ij| / (US(US-1)/2).
double mean_correlation(const CorrelationMatrix &r);

/// Discrete-sum Monte Carlo estimate of the correlation matrix (the
/// pre-limit form of the closed-form integrals) with per-entry standard
/// errors from 50 paired batch replicates. Seed-deterministic.
struct MonteCarloStcf {
    Eigen::MatrixXcd estimate;
    Eigen::MatrixXd std_error;
    int num_rx;
    int num_tx;
};

MonteCarloStcf stcf_monte_carlo(const SideSnapshot &tx, const SideSnapshot &rx,
                                const DepolarizationStats &depol, double wavelength_m,
                                std::size_t n_scatterers, std::uint64_t seed);

/// Correlation matrices along a time grid for a full scenario: radii advance
/// via R(t), receive-cluster means follow their motion paths, and for random
/// paths (sigma > 0) the matrices are averaged over trajectory_draws
/// independent bundles and re-repaired. Deterministic scenarios collapse to
/// a single evaluation.
std::vector<CorrelationMatrix> stcf_over_time(const ScenarioConfig &cfg,
                                              std::span<const double> times_s,
                                              int trajectory_draws);

} // namespace polarchan

#endif
