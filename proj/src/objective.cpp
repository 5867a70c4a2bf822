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

#include "waimforge/objective.hpp"

#include <cmath>
#include <stdexcept>

#include "waimforge/threading.hpp"

namespace waimforge {

void ScanSpec::validate() const {
    if (theta_min_deg > theta_max_deg || theta_min_deg < 0.0 || theta_max_deg > 90.0)
        throw std::invalid_argument("scan: theta range must satisfy 0 <= min <= max <= 90");
    if (phi_min_deg > phi_max_deg)
        throw std::invalid_argument("scan: phi range must satisfy min <= max");
    if (!(f_min > 0.0) || f_min > f_max)
        throw std::invalid_argument("scan: frequency range must satisfy 0 < min <= max");
    if (n_theta < 1 || n_phi < 1 || n_freq < 1)
        throw std::invalid_argument("scan: sample counts must be >= 1");
    if (theta_min_deg == theta_max_deg && n_theta != 1)
        throw std::invalid_argument("scan: collapsed theta range requires n_theta = 1");
    if (phi_min_deg == phi_max_deg && n_phi != 1)
        throw std::invalid_argument("scan: collapsed phi range requires n_phi = 1");
    if (f_min == f_max && n_freq != 1)
        throw std::invalid_argument("scan: collapsed band requires n_freq = 1");
}

QuadratureAxis midpoint_axis(double lo, double hi, std::size_t n, double unit_scale) {
    if (hi < lo || n < 1) throw std::invalid_argument("midpoint_axis: invalid range");
    QuadratureAxis ax;
    if (lo == hi || n == 1) {
        ax.nodes.push_back(0.5 * (lo + hi));
        ax.weight = 1.0; // degenerate axis contributes unit measure
        return ax;
    }
    const double step = (hi - lo) / static_cast<double>(n);
    ax.nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        ax.nodes.push_back(lo + (static_cast<double>(i) + 0.5) * step);
    ax.weight = step * unit_scale;
    return ax;
}

std::vector<std::pair<SteeringPoint, double>> scan_grid(const ScanSpec& spec) {
    spec.validate();
    const QuadratureAxis th =
        midpoint_axis(spec.theta_min_deg, spec.theta_max_deg, spec.n_theta, constants::deg2rad);
    const QuadratureAxis ph =
        midpoint_axis(spec.phi_min_deg, spec.phi_max_deg, spec.n_phi, constants::deg2rad);
    const QuadratureAxis fr = midpoint_axis(spec.f_min, spec.f_max, spec.n_freq, 1.0);

    std::vector<std::pair<SteeringPoint, double>> grid;
    grid.reserve(th.nodes.size() * ph.nodes.size() * fr.nodes.size());
    for (double f : fr.nodes)
        for (double t : th.nodes)
            for (double p : ph.nodes) {
                double w = th.weight * ph.weight * fr.weight;
                if (spec.solid_angle_weight) w *= std::sin(t * constants::deg2rad);
                grid.emplace_back(SteeringPoint::make(t, p, f), w);
            }
    return grid;
}

std::vector<PsiPerFrequency> integral_arl(const WaimStack& stack,
                                          const ArrayDescriptors& d,
                                          const ScanSpec& spec,
                                          const TruncationConfig& trunc,
                                          double arl_cap) {
    spec.validate();
    const QuadratureAxis th =
        midpoint_axis(spec.theta_min_deg, spec.theta_max_deg, spec.n_theta, constants::deg2rad);
    const QuadratureAxis ph =
        midpoint_axis(spec.phi_min_deg, spec.phi_max_deg, spec.n_phi, constants::deg2rad);
    const QuadratureAxis fr = midpoint_axis(spec.f_min, spec.f_max, spec.n_freq, 1.0);

    std::vector<PsiPerFrequency> out;
    out.reserve(fr.nodes.size());

    const std::size_t n_nodes = th.nodes.size() * ph.nodes.size();
    std::vector<double> arl(n_nodes);

    for (double f : fr.nodes) {
        const cdouble zb =
            active_impedance(SteeringPoint::make(0.0, 0.0, f), d, stack, trunc);

        parallel_for(n_nodes, [&](std::size_t i) {
            const double t = th.nodes[i / ph.nodes.size()];
            const double p = ph.nodes[i % ph.nodes.size()];
            const SteeringPoint steer = SteeringPoint::make(t, p, f);
            ActiveResponse r;
            try {
                r = active_response(steer, d, stack, trunc, zb, arl_cap);
            } catch (const std::exception& e) {
                throw std::runtime_error("integral_arl node theta=" + std::to_string(t) +
                                         " phi=" + std::to_string(p) + ": " + e.what());
            }
            double v = r.ARL;
            if (spec.integrand == ArlIntegrand::db)
                v = std::max(0.0, 10.0 * std::log10(v)); // clamp below at 0 dB
            if (spec.solid_angle_weight) v *= std::sin(t * constants::deg2rad);
            arl[i] = v;
        });

        double psi = 0.0;
        for (double v : arl) psi += v; // fixed order: deterministic
        psi *= th.weight * ph.weight;
        out.push_back({f, psi});
    }
    return out;
}

CostReport cost(const WaimStack& stack, const ArrayDescriptors& d, const ScanSpec& spec,
                const TruncationConfig& trunc, double psi_no_waim, double arl_cap) {
    CostReport rep;
    rep.psi_f = integral_arl(stack, d, spec, trunc, arl_cap);

    const QuadratureAxis fr = midpoint_axis(spec.f_min, spec.f_max, spec.n_freq, 1.0);
    double band_integral = 0.0;
    for (const auto& pf : rep.psi_f) band_integral += fr.weight * pf.psi;
    if (!(band_integral > 0.0))
        throw std::runtime_error("cost: non-positive ARL integral (upstream defect)");
    rep.Psi = 1.0 / band_integral;

    double ref = psi_no_waim;
    if (ref <= 0.0) {
        if (stack.empty()) {
            ref = rep.Psi;
        } else {
            const CostReport uncoated = cost(WaimStack{}, d, spec, trunc, 0.0, arl_cap);
            ref = uncoated.Psi;
        }
    }
    rep.Psi_norm = rep.Psi / ref;
    rep.delta_psi = rep.Psi_norm - 1.0;
    return rep;
}

CutCurve atc_cut(const WaimStack& stack, const ArrayDescriptors& d,
                 const TruncationConfig& trunc, double f, double phi_deg,
                 const std::vector<double>& thetas_deg, double arl_cap) {
    CutCurve c;
    c.phi_deg = phi_deg;
    c.f = f;
    c.theta_deg = thetas_deg;
    c.response.resize(thetas_deg.size());

    const cdouble zb = active_impedance(SteeringPoint::make(0.0, 0.0, f), d, stack, trunc);
    parallel_for(thetas_deg.size(), [&](std::size_t i) {
        const SteeringPoint steer = SteeringPoint::make(thetas_deg[i], phi_deg, f);
        c.response[i] = active_response(steer, d, stack, trunc, zb, arl_cap);
    });
    return c;
}

std::vector<SweepVariant> tolerance_sweep(const WaimStack& stack,
                                          const ArrayDescriptors& d,
                                          const ScanSpec& spec,
                                          const TruncationConfig& trunc,
                                          double perturbation,
                                          const FeasibilitySets& sets,
                                          const std::vector<double>& cut_phis_deg,
                                          std::size_t n_cut_theta, double arl_cap) {
    if (perturbation < 0.0 || perturbation >= 1.0)
        throw std::invalid_argument("tolerance_sweep: perturbation must lie in [0, 1)");

    const std::size_t L = stack.size();
    std::vector<double> cut_thetas;
    cut_thetas.reserve(n_cut_theta);
    for (std::size_t i = 0; i < n_cut_theta; ++i)
        cut_thetas.push_back(90.0 * static_cast<double>(i) /
                             static_cast<double>(n_cut_theta > 1 ? n_cut_theta - 1 : 1));

    const double psi_no = cost(WaimStack{}, d, spec, trunc, 0.0, arl_cap).Psi;

    auto evaluate = [&](const std::string& label, const WaimStack& s) {
        SweepVariant v;
        v.label = label;
        v.stack = s;
        v.feasibility = feasibility_check(s, sets);
        v.cost = cost(s, d, spec, trunc, psi_no, arl_cap);
        const QuadratureAxis fr = midpoint_axis(spec.f_min, spec.f_max, spec.n_freq, 1.0);
        for (double phi : cut_phis_deg)
            v.cuts.push_back(atc_cut(s, d, trunc, fr.nodes.front(), phi, cut_thetas, arl_cap));
        return v;
    };

    std::vector<SweepVariant> out;
    out.push_back(evaluate("nominal", stack));

    const std::size_t combos = L > 0 ? (std::size_t{1} << L) : 0;
    for (std::size_t mask = 0; mask < combos; ++mask) {
        WaimStack s = stack;
        std::string label;
        for (std::size_t l = 0; l < L; ++l) {
            const bool plus = (mask >> l) & 1u;
            s.layers[l].t *= plus ? (1.0 + perturbation) : (1.0 - perturbation);
            label += plus ? '+' : '-';
        }
        out.push_back(evaluate(label, s));
    }
    return out;
}

} // namespace waimforge
