// SPDX-License-Identifier: Apache-2.0
//
// waimforge - WAIM superstrate synthesis for printed patch phased arrays
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

#ifndef WAIMFORGE_LAYERS_HPP
#define WAIMFORGE_LAYERS_HPP

#include <string>
#include <vector>

namespace waimforge {

/// One coating layer: thickness and the diagonal of its relative permittivity
/// tensor. Non-magnetic. Isotropic layers simply carry three equal entries.
struct UniaxialLayer {
    double t = 0.0; // thickness [m]
    double eps_xx = 1.0;
    double eps_yy = 1.0;
    double eps_zz = 1.0;

    static UniaxialLayer isotropic(double t, double eps) {
        return UniaxialLayer{t, eps, eps, eps};
    }
    bool is_isotropic() const { return eps_xx == eps_yy && eps_yy == eps_zz; }
};

/// Ordered coating stack. Layer 1 sits on the patch plane, layer L faces the
/// free-space half-space. Empty stack = uncoated array.
struct WaimStack {
    std::vector<UniaxialLayer> layers;
    bool isotropic_flag = true;

    std::size_t size() const { return layers.size(); }
    bool empty() const { return layers.empty(); }
    double total_thickness() const {
        double s = 0.0;
        for (const auto& l : layers) s += l.t;
        return s;
    }
};

/// Grounded substrate under the patch metallization.
struct SubstrateSpec {
    double thickness = 0.0;  // [m]
    double permittivity = 1.0; // relative, isotropic
};

/// Per-layer box constraints on WAIM thickness and permittivity components.
struct FeasibilitySets {
    double t_min = 0.0;
    double t_max = 0.0;    // [m]; typical default 0.5*lambda
    double eps_min = 1.0;
    double eps_max = 30.0;
};

struct FeasibilityViolation {
    std::size_t layer = 0;   // 1-based layer index
    std::string field;       // "t", "eps_xx", ...
    double value = 0.0;
    double bound_lo = 0.0;
    double bound_hi = 0.0;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<FeasibilityViolation> violations;
};

/// Closed-interval containment test of every layer descriptor.
FeasibilityReport feasibility_check(const WaimStack& stack, const FeasibilitySets& sets);

} // namespace waimforge

#endif
