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

#include "waimforge/swarm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace waimforge {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double guarded_eval(const CostFunction& evaluate, const std::vector<double>& x,
                    std::size_t* failures) {
    try {
        const double c = evaluate(x);
        if (std::isfinite(c)) return c;
    } catch (const std::exception&) {
        // fall through: the agent simply scores worst this iteration
    }
    if (failures) ++*failures;
    return std::numeric_limits<double>::infinity();
}

void refresh_bests(SwarmState& state) {
    for (Agent& a : state.agents) {
        if (a.cost < a.best_cost) {
            a.best_cost = a.cost;
            a.best_position = a.position;
        }
        if (a.cost < state.best_cost) {
            state.best_cost = a.cost;
            state.best_position = a.position;
        }
    }
}

} // namespace

void SwarmConfig::validate() const {
    if (agents < 1) throw std::invalid_argument("swarm: agents must be >= 1");
    if (!(inertia >= 0.0 && inertia < 1.0))
        throw std::invalid_argument("swarm: inertia must lie in [0, 1)");
    if (max_iterations < 1) throw std::invalid_argument("swarm: max_iterations must be >= 1");
    if (window < 1) throw std::invalid_argument("swarm: window must be >= 1");
    if (!(threshold > 0.0)) throw std::invalid_argument("swarm: threshold must be > 0");
    if (!(v_max_fraction > 0.0 && v_max_fraction <= 1.0))
        throw std::invalid_argument("swarm: v_max_fraction must lie in (0, 1]");
}

SwarmState init_swarm(const SwarmConfig& config,
                      const std::vector<std::pair<double, double>>& bounds) {
    config.validate();
    if (bounds.empty()) throw std::invalid_argument("init_swarm: empty bounds");
    for (const auto& [lo, hi] : bounds)
        if (!(lo <= hi)) throw std::invalid_argument("init_swarm: inverted bound");

    SwarmState state;
    state.bounds = bounds;
    state.rng = Rng(config.seed);
    state.best_cost = std::numeric_limits<double>::infinity();
    state.agents.resize(config.agents);

    const std::size_t dims = bounds.size();
    for (Agent& a : state.agents) {
        a.position.resize(dims);
        a.velocity.resize(dims);
        for (std::size_t i = 0; i < dims; ++i) {
            const auto [lo, hi] = bounds[i];
            a.position[i] = state.rng.uniform(lo, hi);
            const double vmax = config.v_max_fraction * (hi - lo);
            a.velocity[i] = state.rng.uniform(-vmax, vmax);
        }
        a.best_position = a.position;
        a.best_cost = std::numeric_limits<double>::infinity();
        a.cost = std::numeric_limits<double>::infinity();
    }
    return state;
}

void evaluate_swarm(SwarmState& state, const CostFunction& evaluate) {
    for (Agent& a : state.agents) {
        a.cost = guarded_eval(evaluate, a.position, nullptr);
        ++state.evaluations;
    }
    refresh_bests(state);
}

std::size_t swarm_step(SwarmState& state, const SwarmConfig& config,
                       const CostFunction& evaluate) {
    const std::size_t dims = state.bounds.size();

    // All randomness drawn here, agent-major and dimension-minor, before any
    // evaluation; bests are updated only after the whole sweep.
    for (Agent& a : state.agents) {
        for (std::size_t i = 0; i < dims; ++i) {
            const auto [lo, hi] = state.bounds[i];
            const double r1 = state.rng.uniform();
            const double r2 = state.rng.uniform();
            double v = config.inertia * a.velocity[i] +
                       config.cognitive * r1 * (a.best_position[i] - a.position[i]) +
                       config.social * r2 * (state.best_position[i] - a.position[i]);
            const double vmax = config.v_max_fraction * (hi - lo);
            v = std::clamp(v, -vmax, vmax);

            double x = a.position[i] + v;
            // Reflecting walls: fold back into the interval, flip velocity.
            while (x < lo || x > hi) {
                if (x < lo) x = 2.0 * lo - x;
                if (x > hi) x = 2.0 * hi - x;
                v = -v;
            }
            a.position[i] = x;
            a.velocity[i] = v;
        }
    }

    std::size_t failures = 0;
    for (Agent& a : state.agents) {
        a.cost = guarded_eval(evaluate, a.position, &failures);
        ++state.evaluations;
    }
    refresh_bests(state);
    return failures;
}

bool stagnation_check(const RunTrace& trace, const SwarmConfig& config) {
    const std::size_t n = trace.entries.size();
    if (n < config.window + 1) return false;
    const double current = trace.entries[n - 1].best_cost_norm;
    double mean = 0.0;
    for (std::size_t j = 1; j <= config.window; ++j)
        mean += trace.entries[n - 1 - j].best_cost_norm;
    mean /= static_cast<double>(config.window);
    return std::abs(current - mean) <= config.threshold;
}

SynthesisResult run_synthesis(const SynthesisProblem& problem, const SwarmConfig& config) {
    config.validate();
    if (!problem.evaluate) throw std::invalid_argument("run_synthesis: missing evaluator");
    if (!(problem.normalization > 0.0))
        throw std::invalid_argument("run_synthesis: normalization must be > 0");

    const auto t0 = clock_type::now();
    SynthesisResult result;
    result.trace.normalization = problem.normalization;

    double em_time = 0.0;
    auto timed_eval = [&](const std::vector<double>& x) {
        const auto te = clock_type::now();
        const double c = problem.evaluate(x);
        em_time += seconds_since(te);
        return c;
    };

    SwarmState state = init_swarm(config, problem.bounds);

    auto record = [&](std::size_t iteration) {
        TraceEntry e;
        e.iteration = iteration;
        e.best_cost = state.best_cost;
        e.best_cost_norm = state.best_cost / problem.normalization;
        e.best_position = state.best_position;
        e.evaluations = state.evaluations;
        e.elapsed_s = seconds_since(t0);
        result.trace.entries.push_back(e);
    };

    evaluate_swarm(state, timed_eval);
    record(1);

    double linkage_time = 0.0;
    for (std::size_t k = 2; k <= config.max_iterations; ++k) {
        {
            const auto tl = clock_type::now();
            const bool stop = stagnation_check(result.trace, config);
            linkage_time += seconds_since(tl);
            if (stop) break;
        }
        result.failures += swarm_step(state, config, timed_eval);
        record(k);
    }

    result.best_position = state.best_position;
    result.best_cost = state.best_cost;
    result.evaluations = state.evaluations;
    result.iterations = result.trace.entries.size();
    result.timing.total_s = seconds_since(t0);
    result.timing.em_model_s = em_time;
    result.timing.linkage_s = linkage_time;
    result.timing.exploration_s =
        std::max(0.0, result.timing.total_s - em_time - linkage_time);
    return result;
}

std::size_t waim_dimensions(std::size_t layer_count, bool isotropic) {
    return layer_count * (isotropic ? 2 : 4);
}

std::vector<std::pair<double, double>> waim_bounds(const FeasibilitySets& sets,
                                                   std::size_t layer_count,
                                                   bool isotropic) {
    std::vector<std::pair<double, double>> b;
    b.reserve(waim_dimensions(layer_count, isotropic));
    for (std::size_t l = 0; l < layer_count; ++l) b.emplace_back(sets.t_min, sets.t_max);
    const std::size_t eps_per_layer = isotropic ? 1 : 3;
    for (std::size_t l = 0; l < layer_count * eps_per_layer; ++l)
        b.emplace_back(sets.eps_min, sets.eps_max);
    return b;
}

WaimStack decode_waim_position(const std::vector<double>& position,
                               std::size_t layer_count, bool isotropic) {
    if (position.size() != waim_dimensions(layer_count, isotropic))
        throw std::invalid_argument("decode_waim_position: dimension mismatch");
    WaimStack stack;
    stack.isotropic_flag = isotropic;
    stack.layers.reserve(layer_count);
    for (std::size_t l = 0; l < layer_count; ++l) {
        UniaxialLayer layer;
        layer.t = position[l];
        if (isotropic) {
            layer.eps_xx = layer.eps_yy = layer.eps_zz = position[layer_count + l];
        } else {
            layer.eps_xx = position[layer_count + 3 * l + 0];
            layer.eps_yy = position[layer_count + 3 * l + 1];
            layer.eps_zz = position[layer_count + 3 * l + 2];
        }
        stack.layers.push_back(layer);
    }
    return stack;
}

std::vector<double> encode_waim_stack(const WaimStack& stack, bool isotropic) {
    std::vector<double> x;
    x.reserve(waim_dimensions(stack.size(), isotropic));
    for (const auto& l : stack.layers) x.push_back(l.t);
    for (const auto& l : stack.layers) {
        if (isotropic) {
            x.push_back(l.eps_xx);
        } else {
            x.push_back(l.eps_xx);
            x.push_back(l.eps_yy);
            x.push_back(l.eps_zz);
        }
    }
    return x;
}

SynthesisProblem make_waim_problem(const ArrayDescriptors& d, const ScanSpec& spec,
                                   const TruncationConfig& trunc,
                                   const FeasibilitySets& sets, std::size_t layer_count,
                                   bool isotropic, double arl_cap,
                                   double* psi_no_waim_cost) {
    const double psi_no = cost(WaimStack{}, d, spec, trunc, 0.0, arl_cap).Psi;
    if (psi_no_waim_cost) *psi_no_waim_cost = psi_no;

    SynthesisProblem p;
    p.bounds = waim_bounds(sets, layer_count, isotropic);
    p.normalization = psi_no;
    p.evaluate = [d, spec, trunc, psi_no, arl_cap, layer_count,
                  isotropic](const std::vector<double>& x) {
        const WaimStack stack = decode_waim_position(x, layer_count, isotropic);
        return cost(stack, d, spec, trunc, psi_no, arl_cap).Psi;
    };
    return p;
}

} // namespace waimforge
