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

#ifndef WAIMFORGE_CONSTANTS_HPP
#define WAIMFORGE_CONSTANTS_HPP

#include <complex>

namespace waimforge {

using cdouble = std::complex<double>;

namespace constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// SI defining values
inline constexpr double c0 = 299792458.0;          // speed of light [m/s]
inline constexpr double mu0 = 1.25663706212e-6;    // vacuum permeability [H/m]
inline constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity [F/m]

inline constexpr double deg2rad = pi / 180.0;
inline constexpr double rad2deg = 180.0 / pi;

} // namespace constants

/// Angular frequency and free-space wavenumber bundle for one evaluation frequency.
struct PhysicalConstants {
    double f = 0.0;      // frequency [Hz]
    double omega = 0.0;  // 2*pi*f [rad/s]
    double k0 = 0.0;     // free-space wavenumber [rad/m]
    double lambda = 0.0; // free-space wavelength [m]

    static PhysicalConstants at_frequency(double f_hz) {
        PhysicalConstants pc;
        pc.f = f_hz;
        pc.omega = 2.0 * constants::pi * f_hz;
        pc.lambda = constants::c0 / f_hz;
        pc.k0 = 2.0 * constants::pi / pc.lambda;
        return pc;
    }
};

} // namespace waimforge

#endif
