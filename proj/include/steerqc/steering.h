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

#ifndef STEERQC_STEERING_H
#define STEERQC_STEERING_H

#include <string>
#include <vector>

#include "steerqc/pauli.h"
#include "steerqc/rng.h"
#include "steerqc/tableau.h"

namespace steerqc {

/// Pauli Q that anticommutes with m and commutes with every other stabilizer
/// generator: the destabilizer paired with the row holding m.
///
/// m must be in the stabilizer group up to sign (e.g. just measured). If m is
/// a product of several generators the presentation is rewritten first (see
/// StabilizerTableau::isolate); the state is unchanged either way. Throws
/// StateError otherwise.
PauliString find_steering_pauli(StabilizerTableau &t, const PauliString &m);

/// Forces a just-measured outcome of m to +1. Does nothing when outcome is +1.
/// Returns the applied gate, or the identity when nothing was applied.
PauliString steer(StabilizerTableau &t, const PauliString &m, int outcome);

/// Bond-occupation bits for the projective transverse-field Ising heuristic.
///
/// Bond b (0-based) joins sites b and b+1. A ZZ measurement on a bond marks
/// it; an X measurement on a site clears the two bonds touching that site.
/// Bits are stored for L entries; the last one never names a bond.
class SteerTracker {
   public:
    explicit SteerTracker(size_t num_sites);

    size_t num_sites() const noexcept {
        return bits_.size();
    }
    bool bond(size_t b) const noexcept {
        return b + 1 < bits_.size() && bits_[b] != 0;
    }

    void on_zz(size_t bond);
    void on_x(size_t site);

    /// X string to apply after Z_b Z_{b+1} measured -1.
    ///
    /// Looks at the neighbouring bonds b-1 and b+1 (a missing bond counts as
    /// 0). If exactly one is 0, that side is flipped; otherwise one coin is
    /// drawn from `rng` (true selects the left side). The chosen side's
    /// cluster of marked bonds is flipped as a whole: sites j..b on the left,
    /// b+1..m on the right.
    PauliString choose_gate(size_t bond, CounterRng &rng) const;

    /// One character per entry, e.g. "0100".
    std::string str() const;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace steerqc

#endif
