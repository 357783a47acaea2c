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

#include "steerqc/steering.h"

#include <stdexcept>

#include "steerqc/errors.h"

namespace steerqc {

PauliString find_steering_pauli(StabilizerTableau &t, const PauliString &m) {
    size_t row = t.isolate(m);
    return t.destabilizer(row);
}

PauliString steer(StabilizerTableau &t, const PauliString &m, int outcome) {
    if (outcome > 0) {
        return PauliString(t.num_qubits());
    }
    PauliString q = find_steering_pauli(t, m);
    t.apply_pauli(q);
    return q;
}

SteerTracker::SteerTracker(size_t num_sites) : bits_(num_sites, 0) {
    if (num_sites < 2) {
        throw DimensionError("a tracker needs at least two sites");
    }
}

void SteerTracker::on_zz(size_t bond) {
    if (bond + 1 >= bits_.size()) {
        throw std::invalid_argument("bond " + std::to_string(bond) + " out of range");
    }
    bits_[bond] = 1;
}

void SteerTracker::on_x(size_t site) {
    if (site >= bits_.size()) {
        throw std::invalid_argument("site " + std::to_string(site) + " out of range");
    }
    if (site >= 1) {
        bits_[site - 1] = 0;
    }
    if (site + 1 < bits_.size()) {
        bits_[site] = 0;
    }
}

PauliString SteerTracker::choose_gate(size_t b, CounterRng &rng) const {
    const size_t n = bits_.size();
    if (b + 1 >= n) {
        throw std::invalid_argument("bond " + std::to_string(b) + " out of range");
    }
    bool left_marked = b >= 1 && bond(b - 1);
    bool right_marked = bond(b + 1);
    bool go_left;
    if (left_marked != right_marked) {
        go_left = !left_marked;
    } else {
        go_left = rng.coin();
    }

    PauliString q(n);
    if (go_left) {
        size_t j = b;
        while (j >= 1 && bond(j - 1)) {
            j--;
        }
        for (size_t s = j; s <= b; s++) {
            q.set_bits(s, true, false);
        }
    } else {
        size_t m = b + 1;
        while (bond(m)) {
            m++;
        }
        for (size_t s = b + 1; s <= m; s++) {
            q.set_bits(s, true, false);
        }
    }
    return q;
}

std::string SteerTracker::str() const {
    std::string out;
    for (uint8_t bit : bits_) {
        out.push_back(bit ? '1' : '0');
    }
    return out;
}

}  // namespace steerqc
