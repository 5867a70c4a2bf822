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

#ifndef WAIMFORGE_LINSOLVE_HPP
#define WAIMFORGE_LINSOLVE_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "waimforge/constants.hpp"

namespace waimforge {

/// Dense row-major complex matrix, sized for small moment systems.
struct CMatrix {
    std::size_t n = 0;
    std::vector<cdouble> a;

    explicit CMatrix(std::size_t n_ = 0) : n(n_), a(n_ * n_) {}
    cdouble& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const cdouble& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// Gaussian elimination with partial pivoting. Throws std::runtime_error if a
/// pivot magnitude drops below 1e-300.
inline std::vector<cdouble> lu_solve(CMatrix m, std::vector<cdouble> rhs) {
    const std::size_t n = m.n;
    if (rhs.size() != n) throw std::invalid_argument("lu_solve: size mismatch");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(m(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < 1e-300) throw std::runtime_error("lu_solve: singular matrix");
        if (piv != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(piv, c), m(col, c));
            std::swap(rhs[piv], rhs[col]);
        }
        const cdouble d = m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cdouble f = m(r, col) / d;
            if (f == cdouble{}) continue;
            for (std::size_t c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        cdouble s = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= m(r, c) * rhs[c];
        rhs[r] = s / m(r, r);
    }
    return rhs;
}

/// 1-norm condition estimate via the explicit inverse (fine at moment-system
/// sizes). Returns +inf for a singular matrix.
inline double estimate_condition_1norm(const CMatrix& m) {
    const std::size_t n = m.n;
    double norm_a = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += std::abs(m(r, c));
        norm_a = std::max(norm_a, s);
    }
    double norm_inv = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<cdouble> e(n);
        e[c] = 1.0;
        std::vector<cdouble> x;
        try {
            x = lu_solve(m, std::move(e));
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
        double s = 0.0;
        for (const auto& v : x) s += std::abs(v);
        norm_inv = std::max(norm_inv, s);
    }
    return norm_a * norm_inv;
}

/// ||A x - b|| / ||b||.
inline double solve_residual(const CMatrix& m, const std::vector<cdouble>& x,
                             const std::vector<cdouble>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t r = 0; r < m.n; ++r) {
        cdouble s = -b[r];
        for (std::size_t c = 0; c < m.n; ++c) s += m(r, c) * x[c];
        num += std::norm(s);
        den += std::norm(b[r]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

} // namespace waimforge

#endif
