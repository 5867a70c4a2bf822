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

#include "waimforge/moments.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace waimforge {

void TruncationConfig::validate() const {
    if (P < 1 || Q < 1)
        throw std::invalid_argument("truncation: P and Q must be >= 1");
    if (modes < 1 || modes > 6)
        throw std::invalid_argument("truncation: mode count must lie in [1, 6]");
    if (loss_tangent < 0.0)
        throw std::invalid_argument("truncation: loss tangent must be >= 0");
}

namespace {

constexpr std::size_t max_modes = 6;

// The basis transforms are real for odd sine harmonics and purely imaginary
// for even ones. Carrying the real magnitude plus a unit-rotation flag keeps
// the per-harmonic accumulation in mostly-real arithmetic.
struct ModeMeta {
    bool along_x = true;
    int harmonic = 1;
    bool imag = false; // transform = j * (real magnitude)
};

struct Assembly {
    std::array<cdouble, max_modes * max_modes> sigma{};
    std::array<cdouble, max_modes> U{};
    std::array<cdouble, max_modes> V{};
};

inline void add_rotated(cdouble& dst, const cdouble& v, int rot) {
    // rot: 0 -> +1, +1 -> *j, -1 -> *(-j)
    if (rot == 0)
        dst += v;
    else if (rot > 0)
        dst += cdouble(-v.imag(), v.real());
    else
        dst += cdouble(v.imag(), -v.real());
}

// One pass over the (2P+1)x(2Q+1) harmonic grid accumulating sigma, U, V.
Assembly fused_assembly(const SteeringPoint& steer, const ArrayDescriptors& d,
                        const WaimStack& stack, const TruncationConfig& trunc,
                        const ModalBasis& basis, const ReciprocalLattice& rl) {
    const std::size_t M = basis.size();
    const SubstrateSpec sub{d.substrate_thickness, d.substrate_permittivity};

    std::array<ModeMeta, max_modes> meta{};
    for (std::size_t m = 0; m < M; ++m) {
        const PatchMode& pm = basis.modes[m];
        meta[m].along_x = (pm.dir == PatchMode::Direction::x);
        meta[m].harmonic = pm.harmonic;
        meta[m].imag = (pm.harmonic % 2) == 0;
    }

    const double k0 = 2.0 * constants::pi / steer.lambda;
    const double th = steer.theta_deg * constants::deg2rad;
    const double ph = steer.phi_deg * constants::deg2rad;
    const double kx0 = k0 * std::sin(th) * std::cos(ph);
    const double ky0 = k0 * std::sin(th) * std::sin(ph);

    const double ax = d.patch_size_x;
    const double ay = d.patch_size_y;
    const double px = d.feed_offset_x;
    const double py = d.feed_offset_y;

    Assembly acc;
    std::array<double, max_modes> u_r{}, v_r{}, w_r{};

    for (int p = -trunc.P; p <= trunc.P; ++p) {
        for (int q = -trunc.Q; q <= trunc.Q; ++q) {
            const double kx = kx0 + p * rl.nu1.x + q * rl.nu2.x;
            const double ky = ky0 + p * rl.nu1.y + q * rl.nu2.y;
            const double kt = std::sqrt(kx * kx + ky * ky);
            const double cphi = kt > 0.0 ? kx / kt : 1.0;
            const double sphi = kt > 0.0 ? ky / kt : 0.0;

            detail::NodeResponse nr;
            try {
                nr = detail::node_response(kt, cphi, sphi, sub, stack, steer.f,
                                           trunc.loss_tangent);
            } catch (const std::exception& e) {
                throw std::runtime_error("assembly at harmonic (p=" + std::to_string(p) +
                                         ", q=" + std::to_string(q) + "): " + e.what());
            }

            // Shared 1-D transform pieces for this harmonic.
            const double hx = 0.5 * kx * ax, hy = 0.5 * ky * ay;
            const double cx = std::cos(hx), sx = std::sin(hx);
            const double cy = std::cos(hy), sy = std::sin(hy);
            const double Rx = detail::uniform_transform_core(ax, kx, sx);
            const double Ry = detail::uniform_transform_core(ay, ky, sy);

            for (std::size_t m = 0; m < M; ++m) {
                const ModeMeta& mm = meta[m];
                double jr; // real magnitude of the (possibly j-rotated) transform
                if (mm.along_x) {
                    const cdouble S = detail::sine_transform_core(mm.harmonic, ax, kx, cx, sx);
                    jr = (mm.imag ? S.imag() : S.real()) * Ry;
                    u_r[m] = jr * cphi;
                    v_r[m] = -jr * sphi;
                    w_r[m] = jr * kx;
                } else {
                    const cdouble S = detail::sine_transform_core(mm.harmonic, ay, ky, cy, sy);
                    jr = (mm.imag ? S.imag() : S.real()) * Rx;
                    u_r[m] = jr * sphi;
                    v_r[m] = jr * cphi;
                    w_r[m] = jr * ky;
                }
            }

            // sigma(h,m) += iota_m * conj(iota_h) * (Ztm u_m u_h + Zte v_m v_h)
            for (std::size_t m = 0; m < M; ++m) {
                for (std::size_t h = m; h < M; ++h) {
                    const cdouble base =
                        nr.Ztm * (u_r[m] * u_r[h]) + nr.Zte * (v_r[m] * v_r[h]);
                    const int rot = int(meta[m].imag) - int(meta[h].imag);
                    add_rotated(acc.sigma[h * max_modes + m], base, rot);
                    if (h != m) add_rotated(acc.sigma[m * max_modes + h], base, -rot);
                }
            }

            // Probe phase factors: V uses e^{-j k.rp}, U its conjugate.
            const double arg = kx * px + ky * py;
            const cdouble phase(std::cos(arg), -std::sin(arg));
            const cdouble gv = nr.Gz_fac * phase;
            const cdouble gu = -nr.Gz_fac * std::conj(phase);
            for (std::size_t m = 0; m < M; ++m) {
                add_rotated(acc.V[m], w_r[m] * gv, meta[m].imag ? 1 : 0);
                add_rotated(acc.U[m], w_r[m] * gu, meta[m].imag ? -1 : 0);
            }
        }
    }
    return acc;
}

MomentSystem build_system(const SteeringPoint& steer, const ArrayDescriptors& d,
                          const WaimStack& stack, const TruncationConfig& trunc) {
    d.validate();
    steer.validate();
    trunc.validate();
    const ReciprocalLattice rl = reciprocal_lattice(d.lattice_w1, d.lattice_w2);
    const ModalBasis basis =
        ModalBasis::make_default(d.patch_size_x, d.patch_size_y, trunc.modes);
    const std::size_t M = basis.size();

    const Assembly acc = fused_assembly(steer, d, stack, trunc, basis, rl);

    MomentSystem sys;
    sys.steer = steer;
    sys.P = trunc.P;
    sys.Q = trunc.Q;
    sys.sigma = CMatrix(M);
    sys.U.resize(M);
    sys.V.resize(M);
    const double invA = 1.0 / rl.cell_area;
    for (std::size_t h = 0; h < M; ++h) {
        for (std::size_t m = 0; m < M; ++m)
            sys.sigma(h, m) = invA * acc.sigma[h * max_modes + m];
        sys.U[h] = invA * acc.U[h];
        sys.V[h] = invA * acc.V[h];
    }
    return sys;
}

} // namespace

MomentSystem assemble_moment_system(const SteeringPoint& steer,
                                    const ArrayDescriptors& d, const WaimStack& stack,
                                    const TruncationConfig& trunc) {
    return build_system(steer, d, stack, trunc);
}

std::vector<cdouble> solve_mode_currents(const MomentSystem& sys) {
    std::vector<cdouble> c;
    try {
        c = lu_solve(sys.sigma, sys.U);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string(e.what()) + " at theta=" +
                                 std::to_string(sys.steer.theta_deg) + " phi=" +
                                 std::to_string(sys.steer.phi_deg) + " f=" +
                                 std::to_string(sys.steer.f));
    }
    const double res = solve_residual(sys.sigma, c, sys.U);
    if (!(res <= 1e-10))
        throw std::runtime_error("solve_mode_currents: residual " + std::to_string(res) +
                                 " exceeds contract");
    return c;
}

std::vector<cdouble> expansion_voltages(const SteeringPoint& steer,
                                        const ArrayDescriptors& d,
                                        const WaimStack& stack,
                                        const TruncationConfig& trunc) {
    return build_system(steer, d, stack, trunc).V;
}

cdouble active_impedance(const SteeringPoint& steer, const ArrayDescriptors& d,
                         const WaimStack& stack, const TruncationConfig& trunc) {
    const MomentSystem sys = build_system(steer, d, stack, trunc);
    const std::vector<cdouble> c = solve_mode_currents(sys);
    cdouble z = 0.0;
    for (std::size_t m = 0; m < c.size(); ++m) z -= c[m] * sys.V[m];
    return z;
}

ActiveResponse active_response_from_impedance(cdouble z, cdouble z_broadside,
                                              double arl_cap) {
    const cdouble den = z_broadside + z;
    if (std::abs(den) < 1e-300)
        throw std::runtime_error("active_response: degenerate impedance sum");
    ActiveResponse r;
    r.Z = z;
    r.Gamma = (z_broadside - z) / den;
    const double g2 = std::norm(r.Gamma);
    r.ATC = 1.0 - g2;
    r.ARL = g2 > 0.0 ? std::min(1.0 / g2, arl_cap) : arl_cap;
    return r;
}

ActiveResponse active_response(const SteeringPoint& steer, const ArrayDescriptors& d,
                               const WaimStack& stack, const TruncationConfig& trunc,
                               cdouble z_broadside, double arl_cap) {
    const cdouble z = active_impedance(steer, d, stack, trunc);
    return active_response_from_impedance(z, z_broadside, arl_cap);
}

} // namespace waimforge
