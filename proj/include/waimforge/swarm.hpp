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
// Inertial-weight particle swarm over box-bounded continuous descriptors,
// with reflecting walls, a trailing-window stagnation rule on the
// normalized best-ever trace, and deterministic seeded randomness. All
// random draws happen on the sequential loop before fitness dispatch, so
// evaluation concurrency cannot perturb a run.

#ifndef WAIMFORGE_SWARM_HPP
#define WAIMFORGE_SWARM_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "waimforge/layers.hpp"
#include "waimforge/objective.hpp"
#include "waimforge/rng.hpp"

namespace waimforge {

struct SwarmConfig {
    std::size_t agents = 10;          // R
    double inertia = 0.4;             // zeta1
    double cognitive = 2.0;           // zeta2
    double social = 2.0;              // zeta3
    std::size_t max_iterations = 200; // K (trace length including the initial sampling)
    std::size_t window = 30;          // stagnation window
    double threshold = 1e-4;          // stagnation threshold on the normalized trace
    std::uint64_t seed = 1;
    double v_max_fraction = 0.5;      // max |v| as a fraction of each range

    void validate() const;
};

struct Agent {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_cost = 0.0;
    double cost = 0.0;
};

struct SwarmState {
    std::vector<Agent> agents;
    std::vector<std::pair<double, double>> bounds;
    std::vector<double> best_position; // best-ever across the swarm
    double best_cost = 0.0;
    std::size_t evaluations = 0;
    Rng rng{1};
};

struct TraceEntry {
    std::size_t iteration = 0;  // 1-based; 1 = initial sampling
    double best_cost = 0.0;     // best-ever raw cost
    double best_cost_norm = 0.0;
    std::vector<double> best_position;
    std::size_t evaluations = 0;
    double elapsed_s = 0.0;
};

struct RunTrace {
    std::vector<TraceEntry> entries;
    double normalization = 1.0; // divisor used for best_cost_norm
};

/// Wall-time split mirroring the exploration / linkage / model accounting.
struct TimingBreakdown {
    double total_s = 0.0;
    double exploration_s = 0.0; // swarm updates and randomness
    double linkage_s = 0.0;     // cost bookkeeping, feasibility, stagnation
    double em_model_s = 0.0;    // fitness evaluations
};

using CostFunction = std::function<double(const std::vector<double>&)>;

/// Uniform-random initialization inside the bounds; velocities uniform in
/// +/- v_max; personal bests at the initial positions (not yet evaluated).
SwarmState init_swarm(const SwarmConfig& config,
                      const std::vector<std::pair<double, double>>& bounds);

/// Evaluate every agent (used for the initial sampling) and refresh bests.
/// Failed evaluations receive +inf cost.
void evaluate_swarm(SwarmState& state, const CostFunction& evaluate);

/// One velocity/position update followed by evaluation and a synchronous
/// best refresh. Returns the number of failed evaluations.
std::size_t swarm_step(SwarmState& state, const SwarmConfig& config,
                       const CostFunction& evaluate);

/// Trailing-window mean rule: |trace(K) - mean(trace(K-1..K-w))| <= C on the
/// normalized best-ever values. False while history is insufficient.
bool stagnation_check(const RunTrace& trace, const SwarmConfig& config);

struct SynthesisProblem {
    std::vector<std::pair<double, double>> bounds;
    CostFunction evaluate;
    double normalization = 1.0; // e.g. the uncoated cost; 1 for benchmarks
};

struct SynthesisResult {
    std::vector<double> best_position;
    double best_cost = 0.0;
    RunTrace trace;
    TimingBreakdown timing;
    std::size_t evaluations = 0;
    std::size_t iterations = 0; // executed trace entries
    std::size_t failures = 0;
};

/// Full run: initial sampling plus updates until max_iterations trace
/// entries or stagnation, whichever first.
SynthesisResult run_synthesis(const SynthesisProblem& problem, const SwarmConfig& config);

// --- WAIM descriptor encoding -------------------------------------------

/// Position layout: t_1..t_L, then per-layer permittivities (one value per
/// layer when isotropic, the (xx, yy, zz) triple when not).
std::size_t waim_dimensions(std::size_t layer_count, bool isotropic);

std::vector<std::pair<double, double>> waim_bounds(const FeasibilitySets& sets,
                                                   std::size_t layer_count,
                                                   bool isotropic);

WaimStack decode_waim_position(const std::vector<double>& position,
                               std::size_t layer_count, bool isotropic);

std::vector<double> encode_waim_stack(const WaimStack& stack, bool isotropic);

/// Bundles the cost evaluator over the scan spec with the uncoated
/// normalization; `psi_no_waim_cost` receives Psi^(No WAIM).
SynthesisProblem make_waim_problem(const ArrayDescriptors& d, const ScanSpec& spec,
                                   const TruncationConfig& trunc,
                                   const FeasibilitySets& sets, std::size_t layer_count,
                                   bool isotropic, double arl_cap,
                                   double* psi_no_waim_cost = nullptr);

} // namespace waimforge

#endif
