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

#include "waimforge/modal.hpp"

#include <cmath>
#include <stdexcept>

namespace waimforge {

ModalBasis ModalBasis::make_default(double size_x, double size_y, std::size_t count) {
    if (count < 1 || count > 6)
        throw std::invalid_argument("ModalBasis: mode count must lie in [1, 6]");
    ModalBasis b;
    const int x_harmonics[4] = {1, 3, 5, 7};
    for (int n : x_harmonics)
        b.modes.push_back({PatchMode::Direction::x, n, size_x, size_y});
    for (int n : {1, 2})
        b.modes.push_back({PatchMode::Direction::y, n, size_y, size_x});
    b.modes.resize(count);
    return b;
}

std::array<double, 2> basis_mode_eval(std::size_t m, double x, double y,
                                      const ModalBasis& basis) {
    if (m < 1 || m > basis.size())
        throw std::out_of_range("basis_mode_eval: mode index out of range");
    const PatchMode& mode = basis.modes[m - 1];

    const double along = (mode.dir == PatchMode::Direction::x) ? x : y;
    const double across = (mode.dir == PatchMode::Direction::x) ? y : x;
    if (std::abs(along) > 0.5 * mode.resonant || std::abs(across) > 0.5 * mode.transverse)
        return {0.0, 0.0};

    const double s = std::sin(constants::pi * mode.harmonic *
                              (along + 0.5 * mode.resonant) / mode.resonant);
    if (mode.dir == PatchMode::Direction::x) return {s, 0.0};
    return {0.0, s};
}

namespace detail {

cdouble sine_interval_transform(int n, double a, double k) {
    return sine_transform_core(n, a, k, std::cos(0.5 * k * a), std::sin(0.5 * k * a));
}

double uniform_interval_transform(double b, double k) {
    return uniform_transform_core(b, k, std::sin(0.5 * k * b));
}

} // namespace detail

ModeTransform mode_transform(std::size_t m, const SpectralPoint& sp,
                             const ModalBasis& basis) {
    if (m < 1 || m > basis.size())
        throw std::out_of_range("mode_transform: mode index out of range");
    const PatchMode& mode = basis.modes[m - 1];

    ModeTransform mt;
    if (mode.dir == PatchMode::Direction::x) {
        mt.Jx = detail::sine_interval_transform(mode.harmonic, mode.resonant, sp.kx) *
                detail::uniform_interval_transform(mode.transverse, sp.ky);
    } else {
        mt.Jy = detail::sine_interval_transform(mode.harmonic, mode.resonant, sp.ky) *
                detail::uniform_interval_transform(mode.transverse, sp.kx);
    }
    return mt;
}

} // namespace waimforge
