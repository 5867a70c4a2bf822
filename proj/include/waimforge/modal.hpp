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

#ifndef WAIMFORGE_MODAL_HPP
#define WAIMFORGE_MODAL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "waimforge/constants.hpp"
#include "waimforge/lattice.hpp"

namespace waimforge {

/// One entire-domain sinusoidal patch mode: current along `dir`, sine of
/// harmonic `n` across the resonant extent, uniform across the transverse
/// extent. Zero outside the patch.
struct PatchMode {
    enum class Direction { x, y };
    Direction dir = Direction::x;
    int harmonic = 1;        // sine harmonic along the resonant axis
    double resonant = 0.0;   // extent along the current direction [m]
    double transverse = 0.0; // extent across it [m]
};

/// Entire-domain basis on the patch. The default set carries four x-directed
/// odd harmonics (1,3,5,7) across the patch x-extent and two y-directed
/// harmonics (1,2) across the y-extent.
struct ModalBasis {
    std::vector<PatchMode> modes;

    std::size_t size() const { return modes.size(); }

    /// Default basis for a patch of extents (size_x, size_y), truncated to
    /// `count` modes (1..6).
    static ModalBasis make_default(double size_x, double size_y, std::size_t count = 6);
};

/// Surface-current direction vector of mode m (1-based) at a point measured
/// from the patch center. Zero outside the patch extents.
/// Throws std::out_of_range for an invalid mode index.
std::array<double, 2> basis_mode_eval(std::size_t m, double x, double y,
                                      const ModalBasis& basis);

/// Closed-form spatial Fourier transform of one basis mode at a spectral
/// point: J_m(k) = integral of chi_m(x,y) * exp(+j(kx x + ky y)) over the
/// patch. Units m^2.
struct ModeTransform {
    cdouble Jx{};
    cdouble Jy{};
};
ModeTransform mode_transform(std::size_t m, const SpectralPoint& sp,
                             const ModalBasis& basis);

namespace detail {

/// Core of the sine-interval transform with precomputed cos/sin of k*a/2,
/// so that one sincos per axis serves every harmonic sharing that axis.
/// Odd n gives a real even function of k, even n an imaginary odd one; the
/// kernel resonance at |k| = n*pi/a is a removable singularity evaluated by
/// an exact sinc rewrite.
inline cdouble sine_transform_core(int n, double a, double k, double cos_half,
                                   double sin_half) {
    const double kappa = n * constants::pi / a;
    const bool odd = (n % 2) != 0;
    const double ak = std::abs(k);

    if (std::abs(ak - kappa) * a >= 1e-5) {
        const double den = kappa * kappa - k * k;
        if (odd) return cdouble(2.0 * kappa * cos_half / den, 0.0);
        return cdouble(0.0, -2.0 * kappa * sin_half / den);
    }
    const double xi = 0.5 * (ak - kappa) * a;
    const double sinc = (xi == 0.0) ? 1.0 : std::sin(xi) / xi;
    const double parity = ((n / 2) % 2 == 0) ? 1.0 : -1.0; // sin/cos of n*pi/2
    const double mag = a * kappa / (ak + kappa) * sinc;
    if (odd) return cdouble(parity * mag, 0.0);
    return cdouble(0.0, (k >= 0.0 ? 1.0 : -1.0) * parity * mag);
}

/// 1-D transform of sin(n*pi*(x + a/2)/a) on [-a/2, a/2] against e^{+jkx}.
cdouble sine_interval_transform(int n, double a, double k);

/// 1-D transform of the uniform profile on [-b/2, b/2]: 2*sin(k b/2)/k.
inline double uniform_transform_core(double b, double k, double sin_half) {
    if (std::abs(k) * b < 1e-9) return b;
    return 2.0 * sin_half / k;
}
double uniform_interval_transform(double b, double k);

} // namespace detail

} // namespace waimforge

#endif
