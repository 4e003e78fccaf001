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

#include "polarchan/directional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarchan {

VmfComponent::VmfComponent(UnitDirection mean, double kappa, double weight)
    : mean(mean), kappa(kappa), weight(weight) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("VmfComponent: kappa must be >= 0 (got " +
                                    std::to_string(kappa) + ")");
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw std::invalid_argument("VmfComponent: weight must be > 0 (got " +
                                    std::to_string(weight) + ")");
}

VmfMixture::VmfMixture(std::vector<VmfComponent> components) : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("VmfMixture: at least one component required");
    double sum = 0.0;
    for (const auto &c : components_)
        sum += c.weight;
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("VmfMixture: weights must sum to 1 within 1e-6 (got " +
                                    std::to_string(sum) + ")");
    for (auto &c : components_)
        c.weight /= sum;
}

double vmf_pdf(const UnitDirection &d, const VmfComponent &c) {
    const double x = cos_alpha(d, c.mean); // mu . d
    const double se = std::sin(d.elevation());
    if (c.kappa < 1e-12)
        return se / (4.0 * kPi) * std::exp(c.kappa * (x - 1.0));
    // C3(k) e^{k x} = k e^{k (x-1)} / (2 pi (1 - e^{-2k})), stable for large k
    const double denom = 2.0 * kPi * (-std::expm1(-2.0 * c.kappa));
    return c.kappa * std::exp(c.kappa * (x - 1.0)) / denom * se;
}

double mixture_pdf(const UnitDirection &d, const VmfMixture &mix) {
    double s = 0.0;
    for (const auto &c : mix.components())
        s += c.weight * vmf_pdf(d, c);
    return s;
}

namespace {

// Orthonormal frame (e1, e2, mu); deterministic choice of e1.
void mean_frame(const UnitDirection &mean, std::array<double, 3> &e1, std::array<double, 3> &e2,
                std::array<double, 3> &mu) {
    mu = unit_vector(mean);
    if (std::abs(mu[2]) > 0.999999) {
        e1 = {1.0, 0.0, 0.0};
    } else {
        // z x mu, normalized
        const double nx = -mu[1], ny = mu[0];
        const double n = std::hypot(nx, ny);
        e1 = {nx / n, ny / n, 0.0};
    }
    e2 = {mu[1] * e1[2] - mu[2] * e1[1], mu[2] * e1[0] - mu[0] * e1[2],
          mu[0] * e1[1] - mu[1] * e1[0]};
}

UnitDirection from_cartesian(double x, double y, double z) {
    const double el = std::acos(std::clamp(z, -1.0, 1.0));
    double az = std::atan2(y, x);
    if (az < 0.0)
        az += kTwoPi;
    return UnitDirection(el, az);
}

} // namespace

std::vector<UnitDirection> sample_component(const VmfComponent &c, RandomStream &rng,
                                            std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("sample_component: n must be >= 1");
    std::array<double, 3> e1{}, e2{}, mu{};
    mean_frame(c.mean, e1, e2, mu);

    std::vector<UnitDirection> out;
    out.reserve(n);
    const double em2k = (c.kappa > 0.0) ? std::exp(-2.0 * c.kappa) : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform_open();
        double w;
        if (c.kappa < 1e-8)
            w = 2.0 * u - 1.0; // uniform sphere
        else
            w = 1.0 + std::log(u + (1.0 - u) * em2k) / c.kappa;
        w = std::clamp(w, -1.0, 1.0);
        const double beta = kTwoPi * rng.uniform();
        const double st = std::sqrt(std::max(0.0, 1.0 - w * w));
        const double lx = st * std::cos(beta), ly = st * std::sin(beta);
        out.push_back(from_cartesian(lx * e1[0] + ly * e2[0] + w * mu[0],
                                     lx * e1[1] + ly * e2[1] + w * mu[1],
                                     lx * e1[2] + ly * e2[2] + w * mu[2]));
    }
    return out;
}

std::vector<UnitDirection> sample_mixture(const VmfMixture &mix, RandomStream &rng,
                                          std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("sample_mixture: n must be >= 1");
    std::vector<UnitDirection> out;
    out.reserve(n);
    const auto &comps = mix.components();
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        double acc = 0.0;
        std::size_t pick = comps.size() - 1;
        for (std::size_t q = 0; q < comps.size(); ++q) {
            acc += comps[q].weight;
            if (u < acc) {
                pick = q;
                break;
            }
        }
        out.push_back(sample_component(comps[pick], rng, 1).front());
    }
    return out;
}

VmfMixture translate_mixture(const VmfMixture &mix, const std::vector<UnitDirection> &new_means) {
    if (new_means.size() != mix.size())
        throw std::invalid_argument("translate_mixture: " + std::to_string(new_means.size()) +
                                    " means for " + std::to_string(mix.size()) + " components");
    std::vector<VmfComponent> comps;
    comps.reserve(mix.size());
    for (std::size_t q = 0; q < mix.size(); ++q) {
        const auto &c = mix.components()[q];
        comps.emplace_back(new_means[q], c.kappa, c.weight);
    }
    return VmfMixture(std::move(comps));
}

} // namespace polarchan
