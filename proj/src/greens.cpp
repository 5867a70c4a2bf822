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

#include "waimforge/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace waimforge {

namespace {

constexpr cdouble j1i{0.0, 1.0};

// sqrt with the radiation/decay branch Im <= 0. The regularization loss makes
// arguments almost real; a first-order expansion covers that case without a
// complex sqrt, falling back to the exact one near the branch point.
inline cdouble branch_sqrt(cdouble w) {
    const double re = w.real();
    const double im = w.imag();
    const double are = std::abs(re);
    if (std::abs(im) < 1e-6 * are) {
        if (re > 0.0) {
            const double r = std::sqrt(re);
            const cdouble v{r, im / (2.0 * r)};
            return (im > 0.0) ? -v : v;
        }
        const double r = std::sqrt(-re);
        return {-im / (2.0 * r), -r};
    }
    cdouble r = std::sqrt(w);
    if (r.imag() > 0.0) r = -r;
    return r;
}

inline cdouble lossy(double eps, double delta) {
    return cdouble(eps, -eps * delta);
}

// exp(-2j*beta*t) for Im(beta) <= 0; magnitude never exceeds 1.
inline cdouble phase_factor(cdouble beta, double t) {
    const double re = 2.0 * beta.imag() * t;  // <= 0
    const double im = -2.0 * beta.real() * t;
    return std::exp(re) * cdouble(std::cos(im), std::sin(im));
}

struct LayerPrimitives {
    cdouble beta_tm, beta_te, Z, Y;
};

// TM_z / TE_z dispersion and line immittances of one layer at (kt, phi_k).
// The transverse permittivity follows the field orientation of each wave:
// TM (E along u = k_t direction) sees eps_uu, TE (E along v) sees eps_vv.
inline LayerPrimitives layer_primitives(const UniaxialLayer& l, double k0sq,
                                        double omega, double kt, double c2,
                                        double s2, double delta) {
    const cdouble exx = lossy(l.eps_xx, delta);
    const cdouble eyy = lossy(l.eps_yy, delta);
    const cdouble ezz = lossy(l.eps_zz, delta);
    const cdouble euu = exx * c2 + eyy * s2;
    const cdouble evv = exx * s2 + eyy * c2;

    LayerPrimitives lp;
    lp.beta_tm = branch_sqrt(k0sq * euu - (euu / ezz) * (kt * kt));
    lp.beta_te = branch_sqrt(k0sq * evv - kt * kt);
    lp.Z = lp.beta_tm / (omega * constants::eps0 * euu);
    lp.Y = lp.beta_te / (omega * constants::mu0);
    return lp;
}

struct FirstLayerView {
    cdouble beta_tm, beta_te; // of the medium facing the patch from above
    cdouble eps_tm;           // its TM transverse permittivity
    cdouble Gamma, Phi;       // its reflection coefficients (0 for half-space)
    cdouble Zt, Yt;           // impedance/admittance presented to the patch
};

// Probe switch (experimental): literal top-termination reading.
static bool literal_top_termination() {
    static const bool v = std::getenv("WAIMFORGE_PROBE_LITERAL_TOP") != nullptr;
    return v;
}

// Downward walk through the coating. Optionally records per-layer states.
FirstLayerView walk_stack(const WaimStack& stack_in, double kt, double c2, double s2,
                          double f, double delta, std::vector<LayerWaveState>* out,
                          LayerWaveState* out_top) {
    WaimStack stack = stack_in;
    const double omega = 2.0 * constants::pi * f;
    const double k0 = omega / constants::c0;
    const double k0sq = k0 * k0;

    // Free-space termination, treated as one more (semi-infinite) medium so
    // that an eps = 1 layer is exactly invisible.
    cdouble eps_air = lossy(1.0, delta);
    if (literal_top_termination() && !stack.empty()) {
        // Literal Eq-26 reading: the L-th layer's upper face is matched, so
        // the termination medium is the L-th material itself.
        const UniaxialLayer& top_layer = stack.layers.back();
        eps_air = lossy(top_layer.eps_xx * c2 + top_layer.eps_yy * s2, delta);
        stack.layers.pop_back();
    }
    const cdouble beta_air = branch_sqrt(k0sq * eps_air - kt * kt);
    LayerWaveState top;
    top.beta_tm = top.beta_te = beta_air;
    top.Z = beta_air / (omega * constants::eps0 * eps_air);
    top.Y = beta_air / (omega * constants::mu0);
    top.Gamma = top.Phi = 0.0;
    top.Zt = top.Z;
    top.Yt = top.Y;
    if (out_top) *out_top = top;

    cdouble Zt_above = top.Zt;
    cdouble Yt_above = top.Yt;
    FirstLayerView first;
    first.beta_tm = first.beta_te = beta_air;
    first.eps_tm = eps_air;
    first.Gamma = first.Phi = 0.0;
    first.Zt = Zt_above;
    first.Yt = Yt_above;

    if (out) out->assign(stack.size(), LayerWaveState{});

    for (std::size_t i = stack.size(); i-- > 0;) {
        const UniaxialLayer& l = stack.layers[i];
        const LayerPrimitives lp =
            layer_primitives(l, k0sq, omega, kt, c2, s2, delta);

        const cdouble den_z = lp.Z + Zt_above;
        const cdouble den_y = lp.Y + Yt_above;
        if (std::abs(den_z) < 1e-300 || std::abs(den_y) < 1e-300)
            throw std::runtime_error("reflection_recursion: vanishing interface denominator");

        const cdouble Gamma = phase_factor(lp.beta_tm, l.t) * (lp.Z - Zt_above) / den_z;
        const cdouble Phi = phase_factor(lp.beta_te, l.t) * (lp.Y - Yt_above) / den_y;
        const cdouble one_pg = 1.0 + Gamma;
        const cdouble one_pp = 1.0 + Phi;
        if (std::abs(one_pg) < 1e-300 || std::abs(one_pp) < 1e-300)
            throw std::runtime_error("reflection_recursion: vanishing transfer denominator");

        Zt_above = lp.Z * (1.0 - Gamma) / one_pg;
        Yt_above = lp.Y * (1.0 - Phi) / one_pp;

        if (out) {
            LayerWaveState& st = (*out)[i];
            st.beta_tm = lp.beta_tm;
            st.beta_te = lp.beta_te;
            st.Z = lp.Z;
            st.Y = lp.Y;
            st.Gamma = Gamma;
            st.Phi = Phi;
            st.Zt = Zt_above;
            st.Yt = Yt_above;
        }
        if (i == 0) {
            const cdouble exx = lossy(l.eps_xx, delta);
            const cdouble eyy = lossy(l.eps_yy, delta);
            first.beta_tm = lp.beta_tm;
            first.beta_te = lp.beta_te;
            first.eps_tm = exx * c2 + eyy * s2;
            first.Gamma = Gamma;
            first.Phi = Phi;
        }
    }
    first.Zt = Zt_above;
    first.Yt = Yt_above;
    return first;
}

struct PatchNode {
    cdouble Ztm, Zte;  // parallel node impedances seen by the current sheet
    cdouble beta_sub;
    cdouble A, B;      // surface-wave denominators
    cdouble Gamma_sub, Phi_sub;
};

// Closes the network with the shorted substrate line under the patch plane.
// The parallel impedances are expressed through the pole denominators A, B
// so that no intermediate blows up at the quarter-wave substrate condition.
PatchNode close_node(const SubstrateSpec& sub, const FirstLayerView& first,
                     double kt, double f, double delta) {
    const double omega = 2.0 * constants::pi * f;
    const double k0 = omega / constants::c0;
    const cdouble eps_s = lossy(sub.permittivity, delta);

    PatchNode n;
    n.beta_sub = branch_sqrt(k0 * k0 * eps_s - kt * kt);
    n.Gamma_sub = phase_factor(n.beta_sub, sub.thickness);
    n.Phi_sub = -n.Gamma_sub;

    const cdouble om_g = 1.0 - n.Gamma_sub, op_g = 1.0 + n.Gamma_sub;
    const cdouble om_p = 1.0 - n.Phi_sub, op_p = 1.0 + n.Phi_sub;
    const cdouble om_1 = 1.0 - first.Gamma, op_1 = 1.0 + first.Gamma;
    const cdouble om_f = 1.0 - first.Phi, op_f = 1.0 + first.Phi;

    n.A = j1i * ((n.beta_sub / eps_s) * op_1 * om_g +
                 (first.beta_tm / first.eps_tm) * op_g * om_1);
    n.B = j1i * (n.beta_sub * op_f * om_p + first.beta_te * op_p * om_f);
    if (std::abs(n.A) < 1e-300 || std::abs(n.B) < 1e-300)
        throw std::runtime_error("substrate_boundary: surface-wave pole hit (A or B ~ 0)");

    n.Ztm = j1i * first.beta_tm * n.beta_sub * om_1 * om_g /
            (omega * constants::eps0 * first.eps_tm * eps_s * n.A);
    n.Zte = j1i * omega * constants::mu0 * op_f * op_p / n.B;
    return n;
}

} // namespace

cdouble propagation_constant(cdouble eps_component, double f, double kt) {
    const double k0 = 2.0 * constants::pi * f / constants::c0;
    return branch_sqrt(k0 * k0 * eps_component - kt * kt);
}

WaveImmittance wave_impedance_admittance(cdouble beta, cdouble eps, double f) {
    const double omega = 2.0 * constants::pi * f;
    WaveImmittance wi;
    wi.Z = beta / (omega * constants::eps0 * eps);
    wi.Y = beta / (omega * constants::mu0);
    return wi;
}

StackWaveState reflection_recursion(const WaimStack& stack, double kt, double phi_k,
                                    double f, double loss_tangent) {
    StackWaveState s;
    const double c = std::cos(phi_k);
    const double sn = std::sin(phi_k);
    walk_stack(stack, kt, c * c, sn * sn, f, loss_tangent, &s.layer_states, &s.top);
    return s;
}

SubstrateBoundary substrate_boundary(const SubstrateSpec& substrate,
                                     const LayerWaveState& first_layer, double kt,
                                     double kx, double ky, double f,
                                     double loss_tangent) {
    // Rebuild the first-layer view from the recorded state. The TM transverse
    // permittivity is recovered from Z = beta/(w eps0 eps).
    FirstLayerView first;
    first.beta_tm = first_layer.beta_tm;
    first.beta_te = first_layer.beta_te;
    first.Gamma = first_layer.Gamma;
    first.Phi = first_layer.Phi;
    first.Zt = first_layer.Zt;
    first.Yt = first_layer.Yt;
    const double omega = 2.0 * constants::pi * f;
    first.eps_tm = first_layer.beta_tm / (omega * constants::eps0 * first_layer.Z);

    const PatchNode n = close_node(substrate, first, kt, f, loss_tangent);

    SubstrateBoundary b;
    b.beta_sub = n.beta_sub;
    b.Gamma_sub = n.Gamma_sub;
    b.Phi_sub = n.Phi_sub;
    b.A = n.A;
    b.B = n.B;
    b.a_sub = -kx * kt * (1.0 - first.Gamma) * (first.beta_tm / first.eps_tm) / n.A;
    b.b_sub = omega * constants::mu0 * ky * kt * (1.0 + first.Phi) / n.B;
    return b;
}

SpectralGreens greens_dyad(const SpectralPoint& sp, const SubstrateSpec& substrate,
                           const WaimStack& stack, double f, double loss_tangent) {
    double cphi = 1.0, sphi = 0.0;
    if (sp.kt > 0.0) {
        cphi = sp.kx / sp.kt;
        sphi = sp.ky / sp.kt;
    }
    const detail::NodeResponse nr =
        detail::node_response(sp.kt, cphi, sphi, substrate, stack, f, loss_tangent);

    const double c2 = cphi * cphi, s2 = sphi * sphi, cs = cphi * sphi;
    SpectralGreens g;
    g.Gxx = -(nr.Ztm * c2 + nr.Zte * s2);
    g.Gyy = -(nr.Ztm * s2 + nr.Zte * c2);
    g.Gxy = g.Gyx = -(nr.Ztm - nr.Zte) * cs;
    g.Gzx = nr.Gz_fac * sp.kx;
    g.Gzy = nr.Gz_fac * sp.ky;
    g.Gxz = -g.Gzx;
    g.Gyz = -g.Gzy;
    return g;
}

namespace detail {

NodeResponse node_response(double kt, double cphi, double sphi,
                           const SubstrateSpec& substrate, const WaimStack& stack,
                           double f, double loss_tangent) {
    const FirstLayerView first = walk_stack(stack, kt, cphi * cphi, sphi * sphi, f,
                                            loss_tangent, nullptr, nullptr);
    const PatchNode n = close_node(substrate, first, kt, f, loss_tangent);
    NodeResponse nr;
    nr.Ztm = n.Ztm;
    nr.Zte = n.Zte;
    nr.Gz_fac = j1i * n.Ztm / (n.beta_sub * n.beta_sub);
    return nr;
}

} // namespace detail

} // namespace waimforge
