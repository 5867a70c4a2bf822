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

#ifndef WAIMFORGE_LATTICE_HPP
#define WAIMFORGE_LATTICE_HPP

#include <stdexcept>
#include <string>

#include "waimforge/constants.hpp"

namespace waimforge {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross_z(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Fixed geometry of the printed patch array: grounded substrate, rectangular
/// patch, probe feed offsets, and the two planar lattice vectors. All lengths
/// in meters, permittivity dimensionless.
struct ArrayDescriptors {
    double substrate_thickness = 0.0;    // below the patch metallization
    double substrate_permittivity = 1.0; // relative, isotropic
    double patch_size_x = 0.0;           // patch extent along x
    double patch_size_y = 0.0;           // patch extent along y
    double feed_offset_x = 0.0;          // probe offset from patch center
    double feed_offset_y = 0.0;
    Vec2 lattice_w1{};
    Vec2 lattice_w2{};

    /// Throws std::invalid_argument listing the first violated constraint.
    void validate() const;
};

/// Reciprocal lattice vectors nu1, nu2 with nu_i . w_j = 2*pi*delta_ij,
/// plus the unit-cell area.
struct ReciprocalLattice {
    Vec2 nu1{};
    Vec2 nu2{};
    double cell_area = 0.0; // |w1 x w2| [m^2]
};

/// One steering/frequency sample. Angles are stored in degrees, as given at
/// the API boundary; radians are derived where needed.
struct SteeringPoint {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double f = 0.0;      // [Hz]
    double lambda = 0.0; // c0 / f [m]

    static SteeringPoint make(double theta_deg, double phi_deg, double f_hz);
    void validate() const;
};

/// Transverse wavevector of one Floquet harmonic.
struct SpectralPoint {
    int p = 0;
    int q = 0;
    double kx = 0.0; // [rad/m]
    double ky = 0.0;
    double kt = 0.0; // sqrt(kx^2 + ky^2)
};

/// Reciprocal lattice vectors of the planar lattice spanned by w1, w2.
/// Throws std::invalid_argument if the lattice is degenerate
/// (|w1 x w2| <= 1e-18 m^2).
ReciprocalLattice reciprocal_lattice(Vec2 w1, Vec2 w2);

/// Spectral wavevector of harmonic (p, q) at the given steering point:
/// kx = p*nu1x + q*nu2x + (2*pi/lambda)*sin(theta)*cos(phi), analogous for ky.
SpectralPoint floquet_wavevector(int p, int q, const SteeringPoint& steer,
                                 const ReciprocalLattice& rl);

} // namespace waimforge

#endif
