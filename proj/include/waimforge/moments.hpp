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
//
// Galerkin moment-method solver for the active input impedance of the
// infinite probe-fed patch array. One fused pass over the Floquet harmonic
// grid assembles the impedance matrix sigma, the probe test voltages U and
// the expansion voltages V; the small dense solve and the reflection
// bookkeeping follow.

#ifndef WAIMFORGE_MOMENTS_HPP
#define WAIMFORGE_MOMENTS_HPP

#include <vector>

#include "waimforge/constants.hpp"
#include "waimforge/greens.hpp"
#include "waimforge/lattice.hpp"
#include "waimforge/layers.hpp"
#include "waimforge/linsolve.hpp"
#include "waimforge/modal.hpp"

namespace waimforge {

/// Floquet truncation and spectral evaluation knobs.
struct TruncationConfig {
    int P = 60;           // harmonics p in [-P, P]
    int Q = 60;
    std::size_t modes = 6;
    double loss_tangent = default_loss_tangent;

    void validate() const;
};

/// Assembled Galerkin system at one steering point. `sigma(h, m)` stores the
/// coefficient of C_m in equation h, so currents solve sigma * C = U.
struct MomentSystem {
    CMatrix sigma;          // [Ohm]
    std::vector<cdouble> U; // probe test voltages [V]
    std::vector<cdouble> V; // expansion voltages [V]
    SteeringPoint steer;
    int P = 0, Q = 0;
};

/// Scan-matching figures at one steering point.
struct ActiveResponse {
    cdouble Z{};       // active input impedance [Ohm]
    cdouble Gamma{};   // active reflection coefficient wrt broadside
    double ARL = 0.0;  // min(1/|Gamma|^2, cap)
    double ATC = 0.0;  // 1 - |Gamma|^2
};

inline constexpr double default_arl_cap = 1e6;

/// Fused assembly of sigma, U and V over the (2P+1)(2Q+1) harmonic grid.
MomentSystem assemble_moment_system(const SteeringPoint& steer,
                                    const ArrayDescriptors& d, const WaimStack& stack,
                                    const TruncationConfig& trunc);

/// Dense direct solve of sigma * C = U with a residual contract of 1e-10.
std::vector<cdouble> solve_mode_currents(const MomentSystem& sys);

/// Expansion voltages only (shares the fused assembly).
std::vector<cdouble> expansion_voltages(const SteeringPoint& steer,
                                        const ArrayDescriptors& d,
                                        const WaimStack& stack,
                                        const TruncationConfig& trunc);

/// Active input impedance Z = -sum_m C_m V_m.
cdouble active_impedance(const SteeringPoint& steer, const ArrayDescriptors& d,
                         const WaimStack& stack, const TruncationConfig& trunc);

/// Reflection data relative to the precomputed broadside impedance
/// z_broadside = Z(theta=0) at the same frequency and stack.
ActiveResponse active_response(const SteeringPoint& steer, const ArrayDescriptors& d,
                               const WaimStack& stack, const TruncationConfig& trunc,
                               cdouble z_broadside, double arl_cap = default_arl_cap);

/// Response from an already computed impedance (avoids re-assembly when Z is
/// at hand).
ActiveResponse active_response_from_impedance(cdouble z, cdouble z_broadside,
                                              double arl_cap = default_arl_cap);

} // namespace waimforge

#endif
