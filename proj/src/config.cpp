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

#include "waimforge/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace waimforge {

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
    std::string s = "configuration invalid:";
    for (const auto& e : errors) {
        s += "\n  - ";
        s += e;
    }
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawEntry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
};

struct RawConfig {
    // key: "section.name"
    std::map<std::string, RawEntry> entries;
    std::vector<std::string> errors;

    const RawEntry* find(const std::string& key) const {
        const auto it = entries.find(key);
        if (it == entries.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }
};

RawConfig tokenize(const std::string& text, const std::string& label) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                raw.errors.push_back(label + ":" + std::to_string(lineno) +
                                     ": malformed section header");
                continue;
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            raw.errors.push_back(label + ":" + std::to_string(lineno) +
                                 ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || section.empty()) {
            raw.errors.push_back(label + ":" + std::to_string(lineno) +
                                 ": key outside a [section] or empty key");
            continue;
        }
        const std::string full = section + "." + key;
        if (raw.entries.count(full))
            raw.errors.push_back(label + ":" + std::to_string(lineno) + ": duplicate key " + full);
        raw.entries[full] = RawEntry{value, lineno, false};
    }
    return raw;
}

class Reader {
  public:
    Reader(const RawConfig& raw, std::vector<std::string>& errors)
        : raw_(raw), errors_(errors) {}

    bool parse_double(const std::string& key, double& out) {
        const RawEntry* e = raw_.find(key);
        if (!e) return false;
        try {
            std::size_t pos = 0;
            out = std::stod(e->value, &pos);
            if (trim(e->value.substr(pos)).empty()) return true;
        } catch (...) {
        }
        errors_.push_back(key + ": not a number (line " + std::to_string(e->line) + ")");
        return false;
    }

    bool parse_size(const std::string& key, std::size_t& out) {
        double v;
        if (!parse_double(key, v)) return false;
        if (v < 0 || v != std::floor(v)) {
            errors_.push_back(key + ": must be a non-negative integer");
            return false;
        }
        out = static_cast<std::size_t>(v);
        return true;
    }

    bool parse_int(const std::string& key, int& out) {
        double v;
        if (!parse_double(key, v)) return false;
        if (v != std::floor(v)) {
            errors_.push_back(key + ": must be an integer");
            return false;
        }
        out = static_cast<int>(v);
        return true;
    }

    bool parse_bool(const std::string& key, bool& out) {
        const RawEntry* e = raw_.find(key);
        if (!e) return false;
        if (e->value == "true" || e->value == "1") { out = true; return true; }
        if (e->value == "false" || e->value == "0") { out = false; return true; }
        errors_.push_back(key + ": expected true/false");
        return false;
    }

    bool parse_vec2(const std::string& key, Vec2& out) {
        const RawEntry* e = raw_.find(key);
        if (!e) return false;
        std::istringstream ss(e->value);
        double a, b;
        if (ss >> a >> b) {
            std::string rest;
            if (!(ss >> rest)) { out = {a, b}; return true; }
        }
        errors_.push_back(key + ": expected two numbers (line " + std::to_string(e->line) + ")");
        return false;
    }

    void require(const std::string& key, bool present) {
        if (!present) errors_.push_back(key + ": missing required entry");
    }

  private:
    const RawConfig& raw_;
    std::vector<std::string>& errors_;
};

} // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

std::vector<std::string> ProblemConfig::validation_errors() const {
    std::vector<std::string> errs;
    auto check = [&](bool ok, const std::string& msg) {
        if (!ok) errs.push_back(msg);
    };

    check(array.substrate_thickness > 0.0, "array.substrate_thickness: must be > 0");
    check(array.substrate_permittivity >= 1.0, "array.substrate_permittivity: must be >= 1");
    check(array.patch_size_x > 0.0, "array.patch_size_x: must be > 0");
    check(array.patch_size_y > 0.0, "array.patch_size_y: must be > 0");
    check(std::abs(cross_z(array.lattice_w1, array.lattice_w2)) > 1e-18,
          "array.w1/array.w2: degenerate lattice (|w1 x w2| ~ 0)");
    check(std::abs(array.feed_offset_x) <= 0.5 * array.patch_size_x + 1e-15,
          "array.feed_offset_x: feed must lie on the patch");
    check(std::abs(array.feed_offset_y) <= 0.5 * array.patch_size_y + 1e-15,
          "array.feed_offset_y: feed must lie on the patch");

    check(waim.bounds.eps_min >= 1.0, "waim.eps_min: eps_min below physical floor 1");
    check(waim.bounds.eps_max >= waim.bounds.eps_min, "waim.eps_max: must be >= eps_min");
    check(waim.bounds.t_min >= 0.0, "waim.thickness_min: must be >= 0");
    check(waim.bounds.t_max >= waim.bounds.t_min, "waim.thickness_max: must be >= thickness_min");
    if (waim.has_layer_values) {
        check(waim.layers.size() == waim.layer_count,
              "waim.layerN: explicit layer values must cover layers 1..layer count");
        for (std::size_t i = 0; i < waim.layers.size(); ++i) {
            const auto& l = waim.layers.layers[i];
            const std::string base = "waim.layer" + std::to_string(i + 1);
            check(l.t >= 0.0, base + ".thickness: must be >= 0");
            check(l.eps_xx >= 1.0 && l.eps_yy >= 1.0 && l.eps_zz >= 1.0,
                  base + ": permittivity components must be >= 1");
        }
    }

    try {
        scan.validate();
    } catch (const std::exception& e) {
        errs.push_back(std::string("scan: ") + e.what());
    }
    try {
        spectral.trunc.validate();
    } catch (const std::exception& e) {
        errs.push_back(std::string("spectral: ") + e.what());
    }
    check(spectral.arl_cap >= 1.0, "spectral.arl_cap: must be >= 1");
    try {
        swarm.validate();
    } catch (const std::exception& e) {
        errs.push_back(std::string("swarm: ") + e.what());
    }
    return errs;
}

ProblemConfig parse_problem_config(const std::string& text, const std::string& label) {
    RawConfig raw = tokenize(text, label);
    std::vector<std::string> errors = std::move(raw.errors);
    Reader rd(raw, errors);

    ProblemConfig c;
    c.source_path = label;

    // --- array ---
    rd.require("array.substrate_thickness",
               rd.parse_double("array.substrate_thickness", c.array.substrate_thickness));
    rd.require("array.substrate_permittivity",
               rd.parse_double("array.substrate_permittivity", c.array.substrate_permittivity));
    rd.require("array.patch_size_x", rd.parse_double("array.patch_size_x", c.array.patch_size_x));
    rd.require("array.patch_size_y", rd.parse_double("array.patch_size_y", c.array.patch_size_y));
    rd.parse_double("array.feed_offset_x", c.array.feed_offset_x);
    rd.parse_double("array.feed_offset_y", c.array.feed_offset_y);
    rd.require("array.w1", rd.parse_vec2("array.w1", c.array.lattice_w1));
    rd.require("array.w2", rd.parse_vec2("array.w2", c.array.lattice_w2));

    // --- scan ---
    rd.parse_double("scan.theta_min_deg", c.scan.theta_min_deg);
    rd.parse_double("scan.theta_max_deg", c.scan.theta_max_deg);
    rd.parse_double("scan.phi_min_deg", c.scan.phi_min_deg);
    rd.parse_double("scan.phi_max_deg", c.scan.phi_max_deg);
    rd.parse_size("scan.theta_samples", c.scan.n_theta);
    rd.parse_size("scan.phi_samples", c.scan.n_phi);
    rd.require("scan.freq_min", rd.parse_double("scan.freq_min", c.scan.f_min));
    rd.require("scan.freq_max", rd.parse_double("scan.freq_max", c.scan.f_max));
    rd.parse_size("scan.freq_samples", c.scan.n_freq);
    rd.parse_bool("scan.solid_angle_weight", c.scan.solid_angle_weight);
    if (const auto* e = raw.find("scan.arl_integrand")) {
        if (e->value == "db")
            c.scan.integrand = ArlIntegrand::db;
        else if (e->value == "linear")
            c.scan.integrand = ArlIntegrand::linear;
        else
            errors.push_back("scan.arl_integrand: expected db or linear (line " +
                             std::to_string(e->line) + ")");
    }

    // --- waim ---
    rd.require("waim.layers", rd.parse_size("waim.layers", c.waim.layer_count));
    rd.parse_bool("waim.isotropic", c.waim.isotropic);
    rd.parse_double("waim.thickness_min", c.waim.bounds.t_min);
    c.waim.thickness_max_explicit =
        rd.parse_double("waim.thickness_max", c.waim.bounds.t_max);
    if (!c.waim.thickness_max_explicit && c.scan.f_min > 0.0 && c.scan.f_max > 0.0) {
        const double f_center = 0.5 * (c.scan.f_min + c.scan.f_max);
        c.waim.bounds.t_max = 0.5 * constants::c0 / f_center;
    }
    rd.parse_double("waim.eps_min", c.waim.bounds.eps_min);
    rd.parse_double("waim.eps_max", c.waim.bounds.eps_max);

    c.waim.layers.isotropic_flag = c.waim.isotropic;
    for (std::size_t l = 1; l <= c.waim.layer_count; ++l) {
        const std::string base = "waim.layer" + std::to_string(l);
        UniaxialLayer layer;
        bool any = false;
        any |= rd.parse_double(base + ".thickness", layer.t);
        double eps_iso;
        if (rd.parse_double(base + ".eps", eps_iso)) {
            layer.eps_xx = layer.eps_yy = layer.eps_zz = eps_iso;
            any = true;
        }
        any |= rd.parse_double(base + ".eps_xx", layer.eps_xx);
        any |= rd.parse_double(base + ".eps_yy", layer.eps_yy);
        any |= rd.parse_double(base + ".eps_zz", layer.eps_zz);
        if (any) {
            c.waim.has_layer_values = true;
            c.waim.layers.layers.push_back(layer);
        }
    }

    // --- spectral ---
    rd.parse_int("spectral.floquet_p", c.spectral.trunc.P);
    rd.parse_int("spectral.floquet_q", c.spectral.trunc.Q);
    rd.parse_size("spectral.modes", c.spectral.trunc.modes);
    rd.parse_double("spectral.loss_tangent", c.spectral.trunc.loss_tangent);
    rd.parse_double("spectral.arl_cap", c.spectral.arl_cap);

    // --- swarm ---
    rd.parse_size("swarm.agents", c.swarm.agents);
    rd.parse_double("swarm.inertia", c.swarm.inertia);
    rd.parse_double("swarm.cognitive", c.swarm.cognitive);
    rd.parse_double("swarm.social", c.swarm.social);
    rd.parse_size("swarm.max_iterations", c.swarm.max_iterations);
    rd.parse_size("swarm.stagnation_window", c.swarm.window);
    rd.parse_double("swarm.stagnation_threshold", c.swarm.threshold);
    double seed = 1;
    if (rd.parse_double("swarm.seed", seed)) c.swarm.seed = static_cast<std::uint64_t>(seed);
    rd.parse_double("swarm.velocity_fraction", c.swarm.v_max_fraction);

    for (const auto& [key, entry] : raw.entries)
        if (!entry.consumed)
            errors.push_back(key + ": unknown key (line " + std::to_string(entry.line) + ")");

    for (const auto& e : c.validation_errors()) errors.push_back(e);
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return c;
}

ProblemConfig load_problem_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({path + ": cannot open file"});
    std::ostringstream ss;
    ss << in.rdbuf();
    ProblemConfig c = parse_problem_config(ss.str(), path);
    c.source_path = path;
    return c;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string serialize_problem_config(const ProblemConfig& c) {
    std::ostringstream os;
    auto kv = [&](const char* key, const std::string& v) { os << key << " = " << v << "\n"; };
    auto kd = [&](const char* key, double v) { kv(key, format_double(v)); };

    os << "[array]\n";
    kd("substrate_thickness", c.array.substrate_thickness);
    kd("substrate_permittivity", c.array.substrate_permittivity);
    kd("patch_size_x", c.array.patch_size_x);
    kd("patch_size_y", c.array.patch_size_y);
    kd("feed_offset_x", c.array.feed_offset_x);
    kd("feed_offset_y", c.array.feed_offset_y);
    kv("w1", format_double(c.array.lattice_w1.x) + " " + format_double(c.array.lattice_w1.y));
    kv("w2", format_double(c.array.lattice_w2.x) + " " + format_double(c.array.lattice_w2.y));

    os << "\n[waim]\n";
    kv("layers", std::to_string(c.waim.layer_count));
    kv("isotropic", c.waim.isotropic ? "true" : "false");
    kd("thickness_min", c.waim.bounds.t_min);
    kd("thickness_max", c.waim.bounds.t_max);
    kd("eps_min", c.waim.bounds.eps_min);
    kd("eps_max", c.waim.bounds.eps_max);
    if (c.waim.has_layer_values) {
        for (std::size_t i = 0; i < c.waim.layers.size(); ++i) {
            const auto& l = c.waim.layers.layers[i];
            const std::string base = "layer" + std::to_string(i + 1);
            kv((base + ".thickness").c_str(), format_double(l.t));
            if (l.is_isotropic()) {
                kv((base + ".eps").c_str(), format_double(l.eps_xx));
            } else {
                kv((base + ".eps_xx").c_str(), format_double(l.eps_xx));
                kv((base + ".eps_yy").c_str(), format_double(l.eps_yy));
                kv((base + ".eps_zz").c_str(), format_double(l.eps_zz));
            }
        }
    }

    os << "\n[scan]\n";
    kd("theta_min_deg", c.scan.theta_min_deg);
    kd("theta_max_deg", c.scan.theta_max_deg);
    kd("phi_min_deg", c.scan.phi_min_deg);
    kd("phi_max_deg", c.scan.phi_max_deg);
    kv("theta_samples", std::to_string(c.scan.n_theta));
    kv("phi_samples", std::to_string(c.scan.n_phi));
    kd("freq_min", c.scan.f_min);
    kd("freq_max", c.scan.f_max);
    kv("freq_samples", std::to_string(c.scan.n_freq));
    kv("solid_angle_weight", c.scan.solid_angle_weight ? "true" : "false");
    kv("arl_integrand", c.scan.integrand == ArlIntegrand::db ? "db" : "linear");

    os << "\n[spectral]\n";
    kv("floquet_p", std::to_string(c.spectral.trunc.P));
    kv("floquet_q", std::to_string(c.spectral.trunc.Q));
    kv("modes", std::to_string(c.spectral.trunc.modes));
    kd("loss_tangent", c.spectral.trunc.loss_tangent);
    kd("arl_cap", c.spectral.arl_cap);

    os << "\n[swarm]\n";
    kv("agents", std::to_string(c.swarm.agents));
    kd("inertia", c.swarm.inertia);
    kd("cognitive", c.swarm.cognitive);
    kd("social", c.swarm.social);
    kv("max_iterations", std::to_string(c.swarm.max_iterations));
    kv("stagnation_window", std::to_string(c.swarm.window));
    kd("stagnation_threshold", c.swarm.threshold);
    kv("seed", std::to_string(c.swarm.seed));
    kd("velocity_fraction", c.swarm.v_max_fraction);
    return os.str();
}

void write_problem_config(const ProblemConfig& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << serialize_problem_config(c);
    if (!out) throw std::runtime_error(path + ": write failed");
}

std::uint64_t ProblemConfig::fingerprint() const {
    const std::string canon = serialize_problem_config(*this);
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace waimforge
