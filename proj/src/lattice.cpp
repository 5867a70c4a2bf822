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

#include "waimforge/lattice.hpp"

#include <cmath>

namespace waimforge {

void ArrayDescriptors::validate() const {
    if (!(substrate_thickness > 0.0))
        throw std::invalid_argument("array: substrate_thickness must be > 0");
    if (!(substrate_permittivity >= 1.0))
        throw std::invalid_argument("array: substrate_permittivity must be >= 1");
    if (!(patch_size_x > 0.0) || !(patch_size_y > 0.0))
        throw std::invalid_argument("array: patch extents must be > 0");
    if (std::abs(cross_z(lattice_w1, lattice_w2)) <= 1e-18)
        throw std::invalid_argument("array: degenerate lattice (|w1 x w2| ~ 0)");
    if (std::abs(feed_offset_x) > 0.5 * patch_size_x + 1e-15)
        throw std::invalid_argument("array: feed_offset_x outside the patch");
    if (std::abs(feed_offset_y) > 0.5 * patch_size_y + 1e-15)
        throw std::invalid_argument("array: feed_offset_y outside the patch");
}

SteeringPoint SteeringPoint::make(double theta_deg, double phi_deg, double f_hz) {
    SteeringPoint s;
    s.theta_deg = theta_deg;
    s.phi_deg = phi_deg;
    s.f = f_hz;
    s.lambda = constants::c0 / f_hz;
    s.validate();
    return s;
}

void SteeringPoint::validate() const {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::invalid_argument("steer: theta must lie in [0, 90] deg");
    if (!(f > 0.0))
        throw std::invalid_argument("steer: frequency must be > 0");
}

ReciprocalLattice reciprocal_lattice(Vec2 w1, Vec2 w2) {
    const double det = cross_z(w1, w2); // w1 . (w2 x z) = w1 x w2 along z
    if (std::abs(det) <= 1e-18)
        throw std::invalid_argument("reciprocal_lattice: degenerate lattice");

    const double two_pi = 2.0 * constants::pi;
    // nu1 = 2*pi*(w2 x z)/det, nu2 = 2*pi*(z x w1)/det, with det = w1.(w2 x z)
    ReciprocalLattice rl;
    rl.nu1 = {two_pi * w2.y / det, -two_pi * w2.x / det};
    rl.nu2 = {-two_pi * w1.y / det, two_pi * w1.x / det};
    rl.cell_area = std::abs(det);
    return rl;
}

SpectralPoint floquet_wavevector(int p, int q, const SteeringPoint& steer,
                                 const ReciprocalLattice& rl) {
    const double k0 = 2.0 * constants::pi / steer.lambda;
    const double th = steer.theta_deg * constants::deg2rad;
    const double ph = steer.phi_deg * constants::deg2rad;
    const double kx0 = k0 * std::sin(th) * std::cos(ph);
    const double ky0 = k0 * std::sin(th) * std::sin(ph);

    SpectralPoint sp;
    sp.p = p;
    sp.q = q;
    sp.kx = p * rl.nu1.x + q * rl.nu2.x + kx0;
    sp.ky = p * rl.nu1.y + q * rl.nu2.y + ky0;
    sp.kt = std::hypot(sp.kx, sp.ky);
    return sp;
}

} // namespace waimforge
