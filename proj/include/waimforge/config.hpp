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
// Problem configuration: sectioned key = value text with explicit SI units
// (meters, Hz, degrees for angles). Loading validates every cross-field
// constraint and reports all violations at once; unknown keys are rejected.

#ifndef WAIMFORGE_CONFIG_HPP
#define WAIMFORGE_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "waimforge/lattice.hpp"
#include "waimforge/layers.hpp"
#include "waimforge/moments.hpp"
#include "waimforge/objective.hpp"
#include "waimforge/swarm.hpp"

namespace waimforge {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

  private:
    std::vector<std::string> errors_;
};

struct ProblemConfig {
    ArrayDescriptors array;

    struct Waim {
        std::size_t layer_count = 0;
        bool isotropic = true;
        FeasibilitySets bounds; // t_max defaults to 0.5*lambda at band center
        bool thickness_max_explicit = false;
        bool has_layer_values = false; // explicit layers for analysis mode
        WaimStack layers;
    } waim;

    ScanSpec scan;

    struct Spectral {
        TruncationConfig trunc;
        double arl_cap = default_arl_cap;
    } spectral;

    SwarmConfig swarm;

    std::string source_path; // informational only, not part of the fingerprint

    /// FNV-1a hash of the canonical serialization of all semantic fields.
    std::uint64_t fingerprint() const;

    /// Collected cross-field violations (empty = valid).
    std::vector<std::string> validation_errors() const;
};

/// Parse + validate. Throws ConfigError carrying every collected problem.
ProblemConfig load_problem_config(const std::string& path);

/// Parse + validate from an in-memory string (tests, round trips).
ProblemConfig parse_problem_config(const std::string& text,
                                   const std::string& label = "<string>");

/// Canonical serialization; load(write(c)) reproduces the semantic fields.
std::string serialize_problem_config(const ProblemConfig& c);
void write_problem_config(const ProblemConfig& c, const std::string& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

} // namespace waimforge

#endif
