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

#include "oracles.hpp"
#include "waimforge/modal.hpp"
#include "waimforge/rng.hpp"

using namespace waimforge;

namespace {
constexpr double ax = 1.185e-2; // patch x extent
constexpr double ay = 9.06e-3;  // patch y extent

double rel_err(cdouble a, cdouble b, double floor_scale) {
    const double scale = std::max({std::abs(a), std::abs(b), floor_scale});
    return std::abs(a - b) / scale;
}
} // namespace

TEST_CASE("default basis layout") {
    const auto basis = ModalBasis::make_default(ax, ay);
    REQUIRE(basis.size() == 6);
    CHECK(basis.modes[0].dir == PatchMode::Direction::x);
    CHECK(basis.modes[0].harmonic == 1);
    CHECK(basis.modes[3].harmonic == 7);
    CHECK(basis.modes[4].dir == PatchMode::Direction::y);
    CHECK(basis.modes[4].harmonic == 1);
    CHECK(basis.modes[5].harmonic == 2);
    CHECK(ModalBasis::make_default(ax, ay, 1).size() == 1);
    CHECK_THROWS_AS(ModalBasis::make_default(ax, ay, 7), std::invalid_argument);
}

TEST_CASE("mode shapes") {
    const auto basis = ModalBasis::make_default(ax, ay);

    SUBCASE("dominant mode peaks at the patch center") {
        const auto v = basis_mode_eval(1, 0.0, 0.0, basis);
        CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(v[1] == 0.0);
    }
    SUBCASE("dominant mode vanishes at the resonant-axis edge") {
        const auto v = basis_mode_eval(1, -0.5 * ax, 0.0, basis);
        CHECK(std::abs(v[0]) < 1e-12);
    }
    SUBCASE("zero outside the patch") {
        const auto v = basis_mode_eval(1, 0.51 * ax, 0.0, basis);
        CHECK(v[0] == 0.0);
        const auto w = basis_mode_eval(5, 0.0, 0.51 * ay, basis);
        CHECK(w[1] == 0.0);
    }
    SUBCASE("mode index is validated") {
        CHECK_THROWS_AS(basis_mode_eval(0, 0, 0, basis), std::out_of_range);
        CHECK_THROWS_AS(basis_mode_eval(7, 0, 0, basis), std::out_of_range);
    }
}

TEST_CASE("harmonic orthogonality on the patch") {
    // integral of chi_1 . chi_3 over the patch vanishes (odd sine harmonics).
    const auto basis = ModalBasis::make_default(ax, ay);
    const int n = 400;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -0.5 * ax + (i + 0.5) * ax / n;
        const auto a = basis_mode_eval(1, x, 0.0, basis);
        const auto b = basis_mode_eval(2, x, 0.0, basis); // harmonic 3
        acc += a[0] * b[0] * (ax / n);
    }
    CHECK(std::abs(acc) < 1e-12);
}

TEST_CASE("transform at k = 0") {
    // y-directed dominant mode: resonant extent 9.06e-3, transverse 1.185e-2.
    const auto basis = ModalBasis::make_default(ax, ay);
    SpectralPoint sp{};
    const auto mt = mode_transform(5, sp, basis);
    CHECK(std::abs(mt.Jy) ==
          doctest::Approx(2.0 * ay / constants::pi * ax).epsilon(1e-12)); // 6.8349e-5
    CHECK(std::abs(mt.Jy) == doctest::Approx(6.835e-5).epsilon(1e-3));
    CHECK(std::abs(mt.Jx) == 0.0);

    // even harmonic integrates to zero at DC
    const auto mt6 = mode_transform(6, sp, basis);
    CHECK(std::abs(mt6.Jy) < 1e-18);
}

TEST_CASE("conjugate symmetry of the transforms") {
    const auto basis = ModalBasis::make_default(ax, ay);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 6));
        SpectralPoint sp;
        sp.kx = rng.uniform(-3000, 3000);
        sp.ky = rng.uniform(-3000, 3000);
        SpectralPoint sm;
        sm.kx = -sp.kx;
        sm.ky = -sp.ky;
        const auto a = mode_transform(m, sp, basis);
        const auto b = mode_transform(m, sm, basis);
        CHECK(std::abs(a.Jx - std::conj(b.Jx)) <= 1e-10 * (std::abs(a.Jx) + 1e-30));
        CHECK(std::abs(a.Jy - std::conj(b.Jy)) <= 1e-10 * (std::abs(a.Jy) + 1e-30));
    }
}

TEST_CASE("closed forms match 2-D quadrature, including kernel resonances") {
    const auto basis = ModalBasis::make_default(ax, ay);
    Rng rng(77);
    const double scale = ax * ay; // transform magnitude scale for rel errors

    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 6));
        SpectralPoint sp;
        sp.kx = rng.uniform(-2500, 2500);
        sp.ky = rng.uniform(-2500, 2500);
        const auto cf = mode_transform(m, sp, basis);
        const auto q = oracle::quad_mode_transform(m, basis, sp.kx, sp.ky, ax, ay);
        CHECK(rel_err(cf.Jx, q.Jx, 1e-4 * scale) < 1e-8);
        CHECK(rel_err(cf.Jy, q.Jy, 1e-4 * scale) < 1e-8);
    }

    SUBCASE("exactly at the kernel resonance") {
        for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{6}}) {
            const PatchMode& pm = basis.modes[m - 1];
            const double kappa = pm.harmonic * constants::pi / pm.resonant;
            SpectralPoint sp;
            if (pm.dir == PatchMode::Direction::x) {
                sp.kx = kappa;
                sp.ky = 137.0;
            } else {
                sp.kx = 137.0;
                sp.ky = kappa;
            }
            const auto cf = mode_transform(m, sp, basis);
            const auto q = oracle::quad_mode_transform(m, basis, sp.kx, sp.ky, ax, ay);
            CHECK(rel_err(cf.Jx, q.Jx, 1e-4 * scale) < 1e-8);
            CHECK(rel_err(cf.Jy, q.Jy, 1e-4 * scale) < 1e-8);
        }
    }
    SUBCASE("just off the kernel resonance (stable evaluation)") {
        const PatchMode& pm = basis.modes[0];
        const double kappa = pm.harmonic * constants::pi / pm.resonant;
        for (double off : {1e-9, 1e-6, 1e-3}) {
            SpectralPoint sp;
            sp.kx = kappa * (1.0 + off);
            sp.ky = -250.0;
            const auto cf = mode_transform(1, sp, basis);
            const auto q = oracle::quad_mode_transform(1, basis, sp.kx, sp.ky, ax, ay);
            CHECK(rel_err(cf.Jx, q.Jx, 1e-4 * scale) < 1e-8);
        }
    }
}
