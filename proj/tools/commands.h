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

#ifndef STEERQC_TOOLS_COMMANDS_H
#define STEERQC_TOOLS_COMMANDS_H

#include <iosfwd>
#include <optional>
#include <string>

#include "steerqc/fss.h"

namespace steerqc::cli {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitVerification = 3;

struct SweepArgs {
    std::string config;
    std::string out;
    int threads = 0;
    std::optional<uint64_t> seed;
    bool quiet = false;
};

struct CollapseArgs {
    std::string input;
    /// Writes <out>.json and <out>_master.csv; JSON goes to stdout if empty.
    std::string out;
    size_t min_L = 0;
    int degree = 12;
    ResidueScale residue = ResidueScale::kChiSquare;
    /// Defaults to p_c at the scan midpoint, nu = 1.3, alpha = 0.5.
    std::optional<ScalingParams> guess;
};

struct PcaDumpArgs {
    std::string config;
    /// Writes <out>_weights.csv and <out>_projections.csv.
    std::string out;
    std::optional<size_t> L;
    std::optional<double> p;
    size_t components = 5;
    int threads = 0;
    std::optional<uint64_t> seed;
};

int cmd_sweep(const SweepArgs &args, std::ostream &out, std::ostream &err);
int cmd_collapse(const CollapseArgs &args, std::ostream &out, std::ostream &err);
int cmd_pca_dump(const PcaDumpArgs &args, std::ostream &out, std::ostream &err);
int cmd_verify_appendix_b(uint64_t seed, std::ostream &out);

/// Parses argv and dispatches. Returns the process exit code.
int run_main(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace steerqc::cli

#endif
