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

#ifndef WAIMFORGE_TESTS_FIXTURES_HPP
#define WAIMFORGE_TESTS_FIXTURES_HPP

#include "waimforge/lattice.hpp"
#include "waimforge/layers.hpp"

namespace waimforge::tests {

/// Square-lattice low-permittivity reference setup.
inline ArrayDescriptors example1_array() {
    ArrayDescriptors d;
    d.substrate_thickness = 1.575e-3;
    d.substrate_permittivity = 2.2;
    d.patch_size_x = 1.185e-2;
    d.patch_size_y = 9.06e-3;
    d.feed_offset_x = 5.925e-3;
    d.feed_offset_y = 2.298e-3;
    d.lattice_w1 = {1.5e-2, 0.0};
    d.lattice_w2 = {0.0, 1.5e-2};
    return d;
}

/// Same radiator on the triangular lattice.
inline ArrayDescriptors example2_array() {
    ArrayDescriptors d = example1_array();
    d.lattice_w2 = {1.3e-2, 7.5e-3};
    return d;
}

/// High-permittivity square-lattice setup.
inline ArrayDescriptors example4_array() {
    ArrayDescriptors d;
    d.substrate_thickness = 1.80e-3;
    d.substrate_permittivity = 12.8;
    d.patch_size_x = 4.50e-3;
    d.patch_size_y = 2.94e-3;
    d.feed_offset_x = 1.47e-3;
    d.feed_offset_y = 0.0;
    d.lattice_w1 = {1.5e-2, 0.0};
    d.lattice_w2 = {0.0, 1.5e-2};
    return d;
}

inline WaimStack table1_row1_stack() {
    WaimStack s;
    s.layers.push_back(UniaxialLayer::isotropic(4.65e-3, 1.04));
    s.layers.push_back(UniaxialLayer::isotropic(1.34e-2, 3.13));
    return s;
}

inline WaimStack table1_row2_stack() {
    WaimStack s;
    s.layers.push_back(UniaxialLayer::isotropic(3.54e-3, 1.03));
    s.layers.push_back(UniaxialLayer::isotropic(1.33e-2, 3.42));
    return s;
}

inline WaimStack table1_row3_stack() {
    WaimStack s;
    s.layers.push_back(UniaxialLayer::isotropic(9.95e-4, 29.28));
    s.layers.push_back(UniaxialLayer::isotropic(9.87e-4, 23.84));
    return s;
}

} // namespace waimforge::tests

#endif
