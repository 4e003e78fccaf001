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

#include "polarchan/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace polarchan {

void gauss_legendre(int n, double a, double b, std::vector<double> &nodes,
                    std::vector<double> &weights) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    const int m = (n + 1) / 2; // roots come in symmetric pairs
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 1e-15);
        nodes[i] = xm - xl * z;
        nodes[n - 1 - i] = xm + xl * z;
        weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    return;
}

double sphere_integrate(const std::function<double(double, double)> &f, int n_elevation,
                        int n_azimuth) {
    constexpr double pi = 3.14159265358979323846;
    std::vector<double> el, wel;
    gauss_legendre(n_elevation, 0.0, pi, el, wel);
    const double waz = 2.0 * pi / n_azimuth;
    double sum = 0.0;
    for (int i = 0; i < n_elevation; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_azimuth; ++j)
            row += f(el[i], j * waz);
        sum += wel[i] * row * waz;
    }
    return sum;
}

} // namespace polarchan
