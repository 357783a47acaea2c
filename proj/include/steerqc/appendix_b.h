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

#ifndef STEERQC_APPENDIX_B_H
#define STEERQC_APPENDIX_B_H

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace steerqc {

/// Z-error example on an 8-qubit XZZX chain: start from |1>^8, measure (and
/// steer) XZZX at every position, read XYX, then measure Z on site 5 and
/// keep the +1 branch before reading XYX again.
struct AppendixBReport {
    size_t repetitions = 0;
    /// Every pre-Z5 readout was uniform (one XYX cluster).
    bool single_cluster_before = false;
    /// Post-Z5 stabilizer group equals the reference list (signs ignored).
    bool stabilizers_match = false;
    /// Canonical post-Z5 generators, sparse text.
    std::vector<std::string> stabilizers;
    /// Distinct post-Z5 XYX bitstrings (+1 -> '0', -1 -> '1').
    std::set<std::string> outcomes;
    /// outcomes equals {111111, 110001, 001110, 000000} up to a global flip.
    bool outcomes_match = false;
    /// x1 = x2 = x6 and x3 = x4 = x5 in every repetition.
    bool clusters_match = false;

    bool passed() const {
        return single_cluster_before && stabilizers_match && outcomes_match && clusters_match;
    }
    std::string render() const;
};

/// Reference generators (sparse, unsigned) the post-Z5 group is compared to.
std::vector<std::string> appendix_b_reference_generators();

AppendixBReport verify_appendix_b(size_t repetitions = 1000, uint64_t seed = 1);

}  // namespace steerqc

#endif
