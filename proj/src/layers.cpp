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

#include "waimforge/layers.hpp"

namespace waimforge {

namespace {

void check_interval(FeasibilityReport& rep, std::size_t layer, const char* field,
                    double v, double lo, double hi) {
    if (v < lo || v > hi) {
        rep.feasible = false;
        rep.violations.push_back({layer, field, v, lo, hi});
    }
}

} // namespace

FeasibilityReport feasibility_check(const WaimStack& stack, const FeasibilitySets& sets) {
    FeasibilityReport rep;
    for (std::size_t i = 0; i < stack.layers.size(); ++i) {
        const UniaxialLayer& l = stack.layers[i];
        check_interval(rep, i + 1, "t", l.t, sets.t_min, sets.t_max);
        check_interval(rep, i + 1, "eps_xx", l.eps_xx, sets.eps_min, sets.eps_max);
        check_interval(rep, i + 1, "eps_yy", l.eps_yy, sets.eps_min, sets.eps_max);
        check_interval(rep, i + 1, "eps_zz", l.eps_zz, sets.eps_min, sets.eps_max);
    }
    return rep;
}

} // namespace waimforge
