// Copyright 2026 The steerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEERQC_CONFIG_H
#define STEERQC_CONFIG_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steerqc/models.h"

namespace steerqc {

/// A sweep: one model template scanned over sizes and a parameter grid.
///
/// JSON schema (unknown keys are rejected):
///
///     {
///       "model": "ptf_ising" | "gauge_higgs" | "xzzx",
///       "L": [16, 32, 64],
///       "p": [0.4, 0.5] | {"start": 0.4, "stop": 0.6, "step": 0.01},
///       "line": "p1=0.1",                 gauge_higgs only, required
///       "errors": "x_only" | "z_only" | "both",      xzzx only
///       "steering": "default" | "none" | "all" | "m1_only" | ["zz", ...],
///       "steering_gate": "destabilizer" | "tracker",
///       "terminal": "z" | "x" | "xyx",
///       "initial": "z+" | "z-" | "x+",
///       "M": 1000, "R": 10, "seed": 1, "depth_multiplier": 2.0,
///       "out": "sweep.csv"
///     }
///
/// For gauge_higgs, "p" is the grid of the parameter the line leaves free
/// and depth_multiplier still counts measurement events (two per step).
/// Its default initial state is conjugate to the line's readout axis.
struct SweepConfig {
    ModelSpec base;
    std::optional<GaugeHiggsLine> line;
    std::vector<size_t> sizes;
    std::vector<double> grid;
    size_t M = 1000;
    size_t R = 10;
    uint64_t base_seed = 1;
    double depth_multiplier = 2.0;
    std::string output;

    /// Fully specified model at size L and scanned value. Validated.
    ModelSpec spec_at(size_t L, double value) const;
    /// Throws ConfigError on an invalid combination.
    void validate() const;
};

/// Throws ConfigError naming the field on any schema violation.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::string &path);

}  // namespace steerqc

#endif
