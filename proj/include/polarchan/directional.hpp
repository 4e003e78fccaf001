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

#ifndef POLARCHAN_DIRECTIONAL_HPP
#define POLARCHAN_DIRECTIONAL_HPP

#include <cstddef>
#include <vector>

#include "polarchan/geometry.hpp"
#include "polarchan/rng.hpp"

namespace polarchan {

/// One Von Mises-Fisher cluster on the unit sphere.
struct VmfComponent {
    UnitDirection mean;
    double kappa;  // concentration, >= 0
    double weight; // prior probability, > 0

    VmfComponent(UnitDirection mean, double kappa, double weight);
};

/// Weighted mixture of VMF components. Weights must sum to 1 within 1e-6;
/// the constructor renormalizes them to sum exactly 1 and rejects anything
/// further off.
class VmfMixture {
  public:
    explicit VmfMixture(std::vector<VmfComponent> components);

    const std::vector<VmfComponent> &components() const { return components_; }
    std::size_t size() const { return components_.size(); }

  private:
    std::vector<VmfComponent> components_;
};

/// VMF density over the (elevation, azimuth) rectangle, sin(elevation)
/// Jacobian included:
///   C3(k) * exp(k * (mu . d)) * sin(elevation),  C3(k) = k / (4 pi sinh k).
/// Evaluated in log space so concentrations up to 1e4 and beyond neither
/// overflow nor lose the k -> 0 limit C3 -> 1/(4 pi).
double vmf_pdf(const UnitDirection &d, const VmfComponent &c);

/// Mixture density: weighted sum of component densities.
double mixture_pdf(const UnitDirection &d, const VmfMixture &mix);

/// n i.i.d. draws from one VMF component. The polar cosine about the mean
/// axis uses the closed-form inverse CDF W = 1 + ln(u + (1-u) e^{-2k}) / k
/// (p = 3), the azimuth about the axis is uniform, and the frame is rotated
/// to the component mean. k = 0 falls back to uniform-sphere sampling.
std::vector<UnitDirection> sample_component(const VmfComponent &c, RandomStream &rng, std::size_t n);

/// n i.i.d. draws from the mixture: pick a component by weight, then sample it.
std::vector<UnitDirection> sample_mixture(const VmfMixture &mix, RandomStream &rng, std::size_t n);

/// Same weights and concentrations, means replaced (the whole cluster moves
/// with its mean direction). Length of new_means must match.
VmfMixture translate_mixture(const VmfMixture &mix, const std::vector<UnitDirection> &new_means);

} // namespace polarchan

#endif
