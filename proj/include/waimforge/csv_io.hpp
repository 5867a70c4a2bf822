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

#ifndef WAIMFORGE_CSV_IO_HPP
#define WAIMFORGE_CSV_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "waimforge/moments.hpp"
#include "waimforge/objective.hpp"
#include "waimforge/swarm.hpp"

namespace waimforge {

/// One evaluated grid node for map output.
struct AtcMapRow {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double f = 0.0;
    ActiveResponse response;
};

/// CSV with header theta_deg,phi_deg,freq_hz,atc,arl_db,re_z,im_z.
/// arl_db = 10*log10(ARL), already capped by the response.
void write_atc_map(const std::vector<AtcMapRow>& rows, const std::string& path);

/// Same schema plus a leading `variant` column, restricted to the requested
/// phi planes (one CutCurve per variant/plane pair).
struct LabeledCut {
    std::string variant; // coated / uncoated / nominal / "+-" ...
    CutCurve cut;
};
void write_cuts(const std::vector<LabeledCut>& cuts, const std::string& path);

/// Completed synthesis outcome in serializable form.
struct DesignRecord {
    WaimStack stack;
    bool isotropic = true;
    double Psi = 0.0;
    double Psi_norm = 0.0;
    double delta_psi = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t config_fingerprint = 0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    TimingBreakdown timing;
};

/// Self-describing key = value document; read_design() round-trips it.
void write_design(const DesignRecord& rec, const std::string& path);
DesignRecord read_design(const std::string& path);

/// CSV with header iteration,best_cost,best_cost_normalized,evals,elapsed_s.
void write_trace(const RunTrace& trace, const std::string& path);

} // namespace waimforge

#endif
