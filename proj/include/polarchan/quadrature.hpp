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

#ifndef POLARCHAN_QUADRATURE_HPP
#define POLARCHAN_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace polarchan {

/// Product-rule settings for the spherical correlation integrals:
/// Gauss-Legendre in elevation x periodic trapezoid in azimuth, applied per
/// mixture component. Each component is refined by grid doubling until the
/// largest entry change falls below max(rel_tol * matrix scale, 1e-12);
/// after max_doublings unsuccessful doublings a QuadratureError is thrown.
/// rel_tol <= 0 disables the check (single evaluation at the base grid).
struct QuadratureSettings {
    int n_elevation = 64;
    int n_azimuth = 128;
    double rel_tol = 1e-4;
    int max_doublings = 3;
};

/// Raised when grid doubling fails to converge; carries the last two
/// estimates of the worst entry.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string &what, std::complex<double> coarse,
                    std::complex<double> fine)
        : std::runtime_error(what), coarse_estimate(coarse), fine_estimate(fine) {}

    std::complex<double> coarse_estimate;
    std::complex<double> fine_estimate;
};

/// Gauss-Legendre nodes and weights on [a, b] (Newton iteration on the
/// Legendre recurrence).
void gauss_legendre(int n, double a, double b, std::vector<double> &nodes,
                    std::vector<double> &weights);

/// Integral of f(elevation, azimuth) over [0, pi] x [0, 2 pi) with the
/// product rule above. The integrand carries its own Jacobian.
double sphere_integrate(const std::function<double(double, double)> &f, int n_elevation,
                        int n_azimuth);

} // namespace polarchan

#endif
