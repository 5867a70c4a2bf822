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

#include "oracles.hpp"

#include <array>
#include <cmath>

namespace waimforge::oracle {

namespace {

constexpr cdouble jj{0.0, 1.0};

cdouble kz_branch(double eps, double k0, double kt) {
    const cdouble w = cdouble(eps * k0 * k0 - kt * kt, 0.0);
    cdouble r = std::sqrt(w);
    if (r.imag() > 0.0) r = -r;
    return r;
}

cdouble line_impedance(Pol pol, cdouble kz, double eps, double omega) {
    if (pol == Pol::tm) return kz / (omega * constants::eps0 * eps);
    return omega * constants::mu0 / kz;
}

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration.
struct GaussRule {
    std::array<double, 16> x{};
    std::array<double, 16> w{};
    GaussRule() {
        const int n = 16;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-15) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

const GaussRule& rule() {
    static const GaussRule r;
    return r;
}

} // namespace

cdouble plane_wave_reflection(double eps_incident, const std::vector<SlabLayer>& slabs,
                              double eps_exit, double f, double kt, Pol pol) {
    const double omega = 2.0 * constants::pi * f;
    const double k0 = omega / constants::c0;

    // Chain ABCD matrices of the slabs, then terminate with the exit medium.
    cdouble A = 1.0, B = 0.0, C = 0.0, D = 1.0;
    for (const SlabLayer& s : slabs) {
        const cdouble kz = kz_branch(s.eps, k0, kt);
        const cdouble zc = line_impedance(pol, kz, s.eps, omega);
        const cdouble th = kz * s.t;
        const cdouble cs = std::cos(th);
        const cdouble sn = std::sin(th);
        const cdouble a = cs, b = jj * zc * sn, c = jj * sn / zc, d = cs;
        const cdouble A2 = A * a + B * c, B2 = A * b + B * d;
        const cdouble C2 = C * a + D * c, D2 = C * b + D * d;
        A = A2; B = B2; C = C2; D = D2;
    }
    const cdouble z_exit =
        line_impedance(pol, kz_branch(eps_exit, k0, kt), eps_exit, omega);
    const cdouble z_in = (A * z_exit + B) / (C * z_exit + D);
    const cdouble z_inc =
        line_impedance(pol, kz_branch(eps_incident, k0, kt), eps_incident, omega);
    return (z_in - z_inc) / (z_in + z_inc);
}

SlabGreens grounded_slab_greens(double kx, double ky, double eps_sub, double d,
                                double f) {
    const double omega = 2.0 * constants::pi * f;
    const double k0 = omega / constants::c0;
    const double kt = std::sqrt(kx * kx + ky * ky);
    const double c = kt > 0.0 ? kx / kt : 1.0;
    const double s = kt > 0.0 ? ky / kt : 0.0;

    const cdouble b0 = kz_branch(1.0, k0, kt);
    const cdouble b1 = kz_branch(eps_sub, k0, kt);
    const cdouble sn = std::sin(b1 * d);
    const cdouble cs = std::cos(b1 * d);

    // Parallel combination of the air half-space and the shorted slab,
    // written over the classic TM/TE pole denominators.
    const cdouble Ztm = jj * b0 * b1 * sn /
                        (omega * constants::eps0 * (eps_sub * b0 * cs + jj * b1 * sn));
    const cdouble Zte = omega * constants::mu0 * sn / (b0 * sn - jj * b1 * cs);

    SlabGreens g;
    g.Gxx = -(Ztm * (c * c) + Zte * (s * s));
    g.Gyy = -(Ztm * (s * s) + Zte * (c * c));
    g.Gxy = -(Ztm - Zte) * (c * s);
    g.Gzx = jj * kx * Ztm / (b1 * b1);
    g.Gzy = jj * ky * Ztm / (b1 * b1);
    return g;
}

QuadTransform quad_mode_transform(std::size_t m, const ModalBasis& basis, double kx,
                                  double ky, double size_x, double size_y) {
    const GaussRule& gr = rule();

    const int panels_x = 2 + static_cast<int>(std::abs(kx) * size_x / (2.0 * constants::pi));
    const int panels_y = 2 + static_cast<int>(std::abs(ky) * size_y / (2.0 * constants::pi));

    QuadTransform out;
    for (int px = 0; px < panels_x; ++px) {
        const double x0 = -0.5 * size_x + size_x * px / panels_x;
        const double x1 = -0.5 * size_x + size_x * (px + 1) / panels_x;
        for (int py = 0; py < panels_y; ++py) {
            const double y0 = -0.5 * size_y + size_y * py / panels_y;
            const double y1 = -0.5 * size_y + size_y * (py + 1) / panels_y;
            for (int i = 0; i < 16; ++i) {
                const double x = 0.5 * (x0 + x1) + 0.5 * (x1 - x0) * gr.x[i];
                for (int j = 0; j < 16; ++j) {
                    const double y = 0.5 * (y0 + y1) + 0.5 * (y1 - y0) * gr.x[j];
                    const auto chi = basis_mode_eval(m, x, y, basis);
                    if (chi[0] == 0.0 && chi[1] == 0.0) continue;
                    const double ph = kx * x + ky * y;
                    const cdouble e(std::cos(ph), std::sin(ph));
                    const double w =
                        0.25 * (x1 - x0) * (y1 - y0) * gr.w[i] * gr.w[j];
                    out.Jx += w * chi[0] * e;
                    out.Jy += w * chi[1] * e;
                }
            }
        }
    }
    return out;
}

} // namespace waimforge::oracle
