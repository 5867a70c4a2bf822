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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "waimforge/lattice.hpp"
#include "waimforge/rng.hpp"

using namespace waimforge;

TEST_CASE("reciprocal lattice of the axis-aligned square cell") {
    const auto rl = reciprocal_lattice({0.015, 0.0}, {0.0, 0.015});
    const double expect = 2.0 * constants::pi / 0.015; // 418.879...
    CHECK(rl.nu1.x == doctest::Approx(expect).epsilon(1e-12));
    CHECK(rl.nu1.y == doctest::Approx(0.0));
    CHECK(rl.nu2.x == doctest::Approx(0.0));
    CHECK(rl.nu2.y == doctest::Approx(expect).epsilon(1e-12));
    CHECK(rl.cell_area == doctest::Approx(2.25e-4).epsilon(1e-12));
}

TEST_CASE("triangular cell area") {
    const auto rl = reciprocal_lattice({0.015, 0.0}, {0.013, 0.0075});
    CHECK(rl.cell_area == doctest::Approx(1.125e-4).epsilon(1e-12));
}

TEST_CASE("degenerate lattice is rejected") {
    CHECK_THROWS_AS(reciprocal_lattice({0.015, 0.0}, {0.015, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(reciprocal_lattice({0.0, 0.0}, {0.015, 0.0}), std::invalid_argument);
}

TEST_CASE("biorthogonality on random non-degenerate lattices") {
    Rng rng(42);
    const double two_pi = 2.0 * constants::pi;
    int tested = 0;
    while (tested < 200) {
        Vec2 w1{rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)};
        Vec2 w2{rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)};
        if (std::abs(cross_z(w1, w2)) < 1e-6) continue;
        const auto rl = reciprocal_lattice(w1, w2);
        CHECK(dot(rl.nu1, w1) == doctest::Approx(two_pi).epsilon(1e-12));
        CHECK(dot(rl.nu2, w2) == doctest::Approx(two_pi).epsilon(1e-12));
        CHECK(std::abs(dot(rl.nu1, w2)) < two_pi * 1e-12);
        CHECK(std::abs(dot(rl.nu2, w1)) < two_pi * 1e-12);
        ++tested;
    }
}

TEST_CASE("floquet wavevector basics") {
    const auto rl = reciprocal_lattice({0.015, 0.0}, {0.0, 0.015});

    SUBCASE("broadside (0,0) harmonic has zero transverse wavevector") {
        const auto sp = floquet_wavevector(0, 0, SteeringPoint::make(0, 0, 10e9), rl);
        CHECK(sp.kx == 0.0);
        CHECK(sp.ky == 0.0);
        CHECK(sp.kt == 0.0);
    }
    SUBCASE("endfire fundamental equals k0") {
        const auto sp = floquet_wavevector(0, 0, SteeringPoint::make(90, 0, 10e9), rl);
        CHECK(sp.kx == doctest::Approx(2.0 * constants::pi / 0.0299792458).epsilon(1e-12));
        CHECK(std::abs(sp.ky) < 1e-9);
    }
    SUBCASE("one reciprocal step at broadside") {
        const auto sp = floquet_wavevector(1, 0, SteeringPoint::make(0, 0, 10e9), rl);
        CHECK(sp.kx == doctest::Approx(418.879020478639).epsilon(1e-12));
        CHECK(sp.ky == 0.0);
    }
}

TEST_CASE("harmonic increments equal the reciprocal vectors (linearity)") {
    Rng rng(7);
    const auto rl = reciprocal_lattice({0.015, 0.002}, {0.004, 0.012});
    for (int i = 0; i < 50; ++i) {
        const auto steer = SteeringPoint::make(rng.uniform(0, 90), rng.uniform(0, 360), 10e9);
        const int p = static_cast<int>(rng.uniform(-40, 40));
        const int q = static_cast<int>(rng.uniform(-40, 40));
        const auto a = floquet_wavevector(p, q, steer, rl);
        const auto b = floquet_wavevector(p + 1, q, steer, rl);
        CHECK(b.kx - a.kx == doctest::Approx(rl.nu1.x).epsilon(1e-12));
        CHECK(b.ky - a.ky == doctest::Approx(rl.nu1.y).epsilon(1e-12));
    }
}

TEST_CASE("array descriptor validation") {
    auto d = tests::example1_array();
    CHECK_NOTHROW(d.validate());

    SUBCASE("feed outside the patch") {
        d.feed_offset_y = 6.0e-3;
        CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    }
    SUBCASE("feed at the patch edge is allowed") {
        d.feed_offset_x = 0.5 * d.patch_size_x;
        CHECK_NOTHROW(d.validate());
    }
    SUBCASE("non-positive substrate") {
        d.substrate_thickness = 0.0;
        CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    }
    SUBCASE("sub-unity substrate permittivity") {
        d.substrate_permittivity = 0.9;
        CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    }
}

TEST_CASE("steering point validation") {
    CHECK_THROWS_AS(SteeringPoint::make(-1, 0, 10e9), std::invalid_argument);
    CHECK_THROWS_AS(SteeringPoint::make(91, 0, 10e9), std::invalid_argument);
    CHECK_THROWS_AS(SteeringPoint::make(10, 0, 0.0), std::invalid_argument);
    const auto s = SteeringPoint::make(30, 45, 10e9);
    CHECK(s.lambda == doctest::Approx(0.0299792458).epsilon(1e-15));
}
