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
//
// Task-oriented cost: midpoint-rule quadrature of the active return loss
// over the scan ranges and band, its reciprocal as the cost, and the
// normalized improvement metrics against the uncoated array.

#ifndef WAIMFORGE_OBJECTIVE_HPP
#define WAIMFORGE_OBJECTIVE_HPP

#include <string>
#include <utility>
#include <vector>

#include "waimforge/lattice.hpp"
#include "waimforge/layers.hpp"
#include "waimforge/moments.hpp"

namespace waimforge {

/// How the per-node return loss enters the scan integral. The decibel form
/// clamps to [0, 10*log10(cap)] and is stable under grid and cap changes;
/// the linear form integrates the capped ARL as-is, which is dominated by
/// the self-referenced broadside spike and kept only as a diagnostic.
enum class ArlIntegrand { db, linear };

/// Scan/band ranges with midpoint-rule sample counts. Angles in degrees,
/// frequencies in Hz.
struct ScanSpec {
    double theta_min_deg = 0.0;
    double theta_max_deg = 90.0;
    double phi_min_deg = 0.0;
    double phi_max_deg = 90.0;
    double f_min = 0.0;
    double f_max = 0.0;
    std::size_t n_theta = 30;
    std::size_t n_phi = 30;
    std::size_t n_freq = 1;
    /// Optional solid-angle weighting (sin(theta) Jacobian); the cost
    /// integral is taken literally in d(theta) d(phi) when off.
    bool solid_angle_weight = false;
    ArlIntegrand integrand = ArlIntegrand::db;

    void validate() const;
};

/// Quadrature axes: midpoint nodes and the shared per-node weight. An axis
/// is degenerate (single node, unit weight) when its range collapses or its
/// count is 1.
struct QuadratureAxis {
    std::vector<double> nodes;
    double weight = 1.0;
};

QuadratureAxis midpoint_axis(double lo, double hi, std::size_t n, double unit_scale);

/// Flattened (steer, weight) sequence over the full theta x phi x f grid.
/// Weights are the product measure (rad^2 per angle cell, Hz per band cell;
/// degenerate axes contribute 1). theta = 0 is never a node.
std::vector<std::pair<SteeringPoint, double>> scan_grid(const ScanSpec& spec);

/// Per-frequency integral ARL.
struct PsiPerFrequency {
    double f = 0.0;
    double psi = 0.0; // integral of capped ARL over the angular grid
};

/// psi(f) = sum of weights * ARL over the angular grid, with the broadside
/// reference impedance computed once per frequency. Angle nodes may be
/// evaluated concurrently; the reduction order is fixed.
std::vector<PsiPerFrequency> integral_arl(const WaimStack& stack,
                                          const ArrayDescriptors& d,
                                          const ScanSpec& spec,
                                          const TruncationConfig& trunc,
                                          double arl_cap = default_arl_cap);

struct CostReport {
    std::vector<PsiPerFrequency> psi_f;
    double Psi = 0.0;       // 1 / integral_f psi(f) df
    double Psi_norm = 0.0;  // Psi / Psi_no_waim
    double delta_psi = 0.0; // Psi_norm - 1
};

/// Full cost evaluation. `psi_no_waim` is the uncoated cost Psi^(No WAIM)
/// used for normalization; pass 0 to have it computed in place.
CostReport cost(const WaimStack& stack, const ArrayDescriptors& d,
                const ScanSpec& spec, const TruncationConfig& trunc,
                double psi_no_waim = 0.0, double arl_cap = default_arl_cap);

/// ATC/impedance samples along one phi plane.
struct CutCurve {
    double phi_deg = 0.0;
    double f = 0.0;
    std::vector<double> theta_deg;
    std::vector<ActiveResponse> response;
};

CutCurve atc_cut(const WaimStack& stack, const ArrayDescriptors& d,
                 const TruncationConfig& trunc, double f, double phi_deg,
                 const std::vector<double>& thetas_deg,
                 double arl_cap = default_arl_cap);

/// One perturbed variant of a tolerance sweep.
struct SweepVariant {
    std::string label;     // "nominal" or a +/- sign per layer, e.g. "+-"
    WaimStack stack;
    FeasibilityReport feasibility;
    CostReport cost;
    std::vector<CutCurve> cuts;
};

/// Nominal stack plus all 2^L thickness sign combinations at the given
/// fractional perturbation. Infeasible variants are evaluated and flagged.
std::vector<SweepVariant> tolerance_sweep(const WaimStack& stack,
                                          const ArrayDescriptors& d,
                                          const ScanSpec& spec,
                                          const TruncationConfig& trunc,
                                          double perturbation,
                                          const FeasibilitySets& sets,
                                          const std::vector<double>& cut_phis_deg,
                                          std::size_t n_cut_theta = 91,
                                          double arl_cap = default_arl_cap);

} // namespace waimforge

#endif
