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
// Spectral-domain Green's dyad of a grounded substrate carrying the patch
// current sheet, coated by a stack of diagonally anisotropic layers and
// terminated by free space.
//
// Per spectral point the fields split into TM_z / TE_z waves relative to the
// transverse wavevector direction phi_k. Each layer is a transmission-line
// section; the stack above the patch is folded into one input impedance
// (TM) / admittance (TE) by a downward reflection recursion starting from
// the free-space half-space, and the shorted substrate line closes the
// network below. Time convention e^{+j w t}, evanescent branch Im(beta) <= 0.

#ifndef WAIMFORGE_GREENS_HPP
#define WAIMFORGE_GREENS_HPP

#include <vector>

#include "waimforge/constants.hpp"
#include "waimforge/lattice.hpp"
#include "waimforge/layers.hpp"

namespace waimforge {

/// Tiny uniform loss tangent applied as eps*(1 - j*delta) to every medium
/// (layers, substrate and the free-space termination alike) to keep the
/// Floquet sums finite across surface-wave poles on the real kt axis.
inline constexpr double default_loss_tangent = 1e-9;

/// Per-layer, per-polarization transmission-line state produced by the
/// downward recursion.
struct LayerWaveState {
    cdouble beta_tm{};   // propagation constant, TM_z branch [rad/m]
    cdouble beta_te{};   // TE_z branch
    cdouble Z{};         // TM characteristic impedance beta/(w eps0 eps_t) [Ohm]
    cdouble Y{};         // TE characteristic admittance beta/(w mu0) [S]
    cdouble Gamma{};     // TM reflection coefficient at the layer's lower face
    cdouble Phi{};       // TE reflection coefficient at the layer's lower face
    cdouble Zt{};        // transferred impedance Z*(1-Gamma)/(1+Gamma)
    cdouble Yt{};        // transferred admittance Y*(1-Phi)/(1+Phi)
};

/// Stack recursion result. layer_states[0] is layer 1 (adjacent to the
/// patch); `top` holds the free-space termination quantities. For an empty
/// stack the patch looks directly into `top`.
struct StackWaveState {
    std::vector<LayerWaveState> layer_states;
    LayerWaveState top; // free-space half-space: Gamma = Phi = 0, Zt = Z, Yt = Y

    /// State presented to the patch plane from above (layer 1, or the
    /// half-space when the stack is empty).
    const LayerWaveState& first() const {
        return layer_states.empty() ? top : layer_states.front();
    }
};

/// Substrate-side boundary quantities at one spectral point.
struct SubstrateBoundary {
    cdouble beta_sub{};  // substrate propagation constant [rad/m]
    cdouble Gamma_sub{}; // exp(-2j beta_sub d1)
    cdouble Phi_sub{};   // -exp(-2j beta_sub d1)
    cdouble a_sub{};     // TM boundary amplitude (diagnostic, per unit Jx)
    cdouble b_sub{};     // TE boundary amplitude (diagnostic, per unit Jy)
    cdouble A{};         // TM denominator; zeros mark TM surface-wave poles
    cdouble B{};         // TE denominator; zeros mark TE surface-wave poles
};

/// The eight dyad components at one spectral point. Units: transverse
/// entries are Ohms (E field per unit surface current); the z-row entries
/// carry the probe-length integration and are Ohm*m.
struct SpectralGreens {
    cdouble Gxx{}, Gxy{}, Gyx{}, Gyy{};
    cdouble Gzx{}, Gzy{};
    cdouble Gxz{}, Gyz{};
};

/// beta = sqrt(k0^2 eps - kt^2) with the branch Im(beta) <= 0.
/// `eps_component` may carry the regularization loss.
cdouble propagation_constant(cdouble eps_component, double f, double kt);

/// TM wave impedance Z = beta/(w eps0 eps) and TE admittance Y = beta/(w mu0).
struct WaveImmittance {
    cdouble Z{};
    cdouble Y{};
};
WaveImmittance wave_impedance_admittance(cdouble beta, cdouble eps, double f);

/// Downward reflection recursion through the stack at transverse wavevector
/// (kt, phi_k). Starts from the free-space half-space above layer L
/// (zero reflection) and yields Gamma_l, Phi_l, Zt_l, Yt_l for l = L..1.
/// Throws std::runtime_error on a non-finite intermediate.
StackWaveState reflection_recursion(const WaimStack& stack, double kt, double phi_k,
                                    double f, double loss_tangent = default_loss_tangent);

/// Substrate boundary quantities given the state of the first coating layer
/// (or the half-space state when uncoated).
SubstrateBoundary substrate_boundary(const SubstrateSpec& substrate,
                                     const LayerWaveState& first_layer, double kt,
                                     double kx, double ky, double f,
                                     double loss_tangent = default_loss_tangent);

/// Full dyad at one spectral point. The kt -> 0 limit is taken along
/// phi_k = 0 where the components are rotation invariant.
SpectralGreens greens_dyad(const SpectralPoint& sp, const SubstrateSpec& substrate,
                           const WaimStack& stack, double f,
                           double loss_tangent = default_loss_tangent);

namespace detail {

/// Fused per-harmonic kernel used by the moment-method assembly: the two
/// parallel line impedances seen by the patch current sheet and the probe
/// coupling factor.
struct NodeResponse {
    cdouble Ztm{};    // TM node impedance Zup*Zdown/(Zup+Zdown) [Ohm]
    cdouble Zte{};    // TE node impedance 1/(Yup+Ydown) [Ohm]
    cdouble Gz_fac{}; // j*Ztm/beta_sub^2; Gzx = Gz_fac*kx, Gzy = Gz_fac*ky
};

/// Same physics as greens_dyad but returning the compact node quantities.
/// `cphi`,`sphi` give the transverse direction (1,0 at kt = 0).
NodeResponse node_response(double kt, double cphi, double sphi,
                           const SubstrateSpec& substrate, const WaimStack& stack,
                           double f, double loss_tangent);

} // namespace detail

} // namespace waimforge

#endif
