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

#ifndef STEERQC_SWEEP_CSV_H
#define STEERQC_SWEEP_CSV_H

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "steerqc/fss.h"
#include "steerqc/sweep.h"

namespace steerqc {

/// First line of every sweep table.
constexpr std::string_view kSweepCsvVersion = "# steerqc sweep v1";
constexpr std::string_view kSweepCsvHeader =
    "model,L,p,p1,p2,sigma1_mean,sigma1_stderr,sigma2_mean,sigma2_stderr,M,R,depth";

/// Writes the version comment, the header and one line per row. Numbers are
/// printed with 17 significant digits so that equal inputs give equal bytes.
void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

/// Parses a table written by write_sweep_csv. Throws std::runtime_error with
/// the line number on malformed input.
std::vector<SweepRow> read_sweep_csv(std::istream &in);

/// (p, L, sigma2_mean, sigma2_stderr) of each row.
std::vector<ScanPoint> scan_points(std::span<const SweepRow> rows);

}  // namespace steerqc

#endif
