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

#include "waimforge/csv_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "waimforge/config.hpp"

namespace waimforge {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
}

double arl_db(const ActiveResponse& r) { return 10.0 * std::log10(r.ARL); }

void write_response_fields(std::ostream& os, const ActiveResponse& r) {
    os << format_double(r.ATC) << ',' << format_double(arl_db(r)) << ','
       << format_double(r.Z.real()) << ',' << format_double(r.Z.imag());
}

} // namespace

void write_atc_map(const std::vector<AtcMapRow>& rows, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "theta_deg,phi_deg,freq_hz,atc,arl_db,re_z,im_z\n";
    for (const auto& r : rows) {
        out << format_double(r.theta_deg) << ',' << format_double(r.phi_deg) << ','
            << format_double(r.f) << ',';
        write_response_fields(out, r.response);
        out << '\n';
    }
    finish(out, path);
}

void write_cuts(const std::vector<LabeledCut>& cuts, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "variant,theta_deg,phi_deg,freq_hz,atc,arl_db,re_z,im_z\n";
    for (const auto& lc : cuts) {
        for (std::size_t i = 0; i < lc.cut.theta_deg.size(); ++i) {
            out << lc.variant << ',' << format_double(lc.cut.theta_deg[i]) << ','
                << format_double(lc.cut.phi_deg) << ',' << format_double(lc.cut.f) << ',';
            write_response_fields(out, lc.cut.response[i]);
            out << '\n';
        }
    }
    finish(out, path);
}

void write_design(const DesignRecord& rec, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "layers = " << rec.stack.size() << "\n";
    out << "isotropic = " << (rec.isotropic ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < rec.stack.size(); ++i) {
        const auto& l = rec.stack.layers[i];
        const std::string base = "layer" + std::to_string(i + 1);
        out << base << ".thickness = " << format_double(l.t) << "\n";
        if (rec.isotropic) {
            out << base << ".eps = " << format_double(l.eps_xx) << "\n";
        } else {
            out << base << ".eps_xx = " << format_double(l.eps_xx) << "\n";
            out << base << ".eps_yy = " << format_double(l.eps_yy) << "\n";
            out << base << ".eps_zz = " << format_double(l.eps_zz) << "\n";
        }
    }
    out << "psi = " << format_double(rec.Psi) << "\n";
    out << "psi_norm = " << format_double(rec.Psi_norm) << "\n";
    out << "delta_psi = " << format_double(rec.delta_psi) << "\n";
    out << "seed = " << rec.seed << "\n";
    out << "config_fingerprint = " << rec.config_fingerprint << "\n";
    out << "evaluations = " << rec.evaluations << "\n";
    out << "iterations = " << rec.iterations << "\n";
    out << "timing.total_s = " << format_double(rec.timing.total_s) << "\n";
    out << "timing.exploration_s = " << format_double(rec.timing.exploration_s) << "\n";
    out << "timing.linkage_s = " << format_double(rec.timing.linkage_s) << "\n";
    out << "timing.em_model_s = " << format_double(rec.timing.em_model_s) << "\n";
    finish(out, path);
}

DesignRecord read_design(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    auto need = [&](const std::string& k) {
        const auto it = kv.find(k);
        if (it == kv.end()) throw std::runtime_error(path + ": missing field " + k);
        return it->second;
    };

    DesignRecord rec;
    const std::size_t layers = std::stoul(need("layers"));
    rec.isotropic = need("isotropic") == "true";
    rec.stack.isotropic_flag = rec.isotropic;
    for (std::size_t i = 1; i <= layers; ++i) {
        const std::string base = "layer" + std::to_string(i);
        UniaxialLayer l;
        l.t = std::stod(need(base + ".thickness"));
        if (rec.isotropic) {
            l.eps_xx = l.eps_yy = l.eps_zz = std::stod(need(base + ".eps"));
        } else {
            l.eps_xx = std::stod(need(base + ".eps_xx"));
            l.eps_yy = std::stod(need(base + ".eps_yy"));
            l.eps_zz = std::stod(need(base + ".eps_zz"));
        }
        rec.stack.layers.push_back(l);
    }
    rec.Psi = std::stod(need("psi"));
    rec.Psi_norm = std::stod(need("psi_norm"));
    rec.delta_psi = std::stod(need("delta_psi"));
    rec.seed = std::stoull(need("seed"));
    rec.config_fingerprint = std::stoull(need("config_fingerprint"));
    rec.evaluations = std::stoul(need("evaluations"));
    rec.iterations = std::stoul(need("iterations"));
    rec.timing.total_s = std::stod(need("timing.total_s"));
    rec.timing.exploration_s = std::stod(need("timing.exploration_s"));
    rec.timing.linkage_s = std::stod(need("timing.linkage_s"));
    rec.timing.em_model_s = std::stod(need("timing.em_model_s"));
    return rec;
}

void write_trace(const RunTrace& trace, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "iteration,best_cost,best_cost_normalized,evals,elapsed_s\n";
    for (const auto& e : trace.entries) {
        out << e.iteration << ',' << format_double(e.best_cost) << ','
            << format_double(e.best_cost_norm) << ',' << e.evaluations << ','
            << format_double(e.elapsed_s) << '\n';
    }
    finish(out, path);
}

} // namespace waimforge
