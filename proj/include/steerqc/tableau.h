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

#ifndef STEERQC_TABLEAU_H
#define STEERQC_TABLEAU_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steerqc/pauli.h"
#include "steerqc/rng.h"

namespace steerqc {

/// Single-qubit product-state axis.
enum class Axis : uint8_t {
    kZPlus,   // |0>
    kZMinus,  // |1>
    kXPlus,   // |+>
};

struct MeasureResult {
    int outcome = +1;
    bool was_random = false;
};

/// Pure stabilizer state on n qubits, held as n stabilizer generators paired
/// with n destabilizers.
///
/// Row i of the destabilizer half anticommutes with stabilizer i and commutes
/// with every other generator of either kind. Measurement uses the
/// anticommuting-pivot update; deterministic outcomes are read back through
/// the destabilizers without touching the state.
///
/// A tableau owns its outcome RNG stream and is single-owner mutable state.
class StabilizerTableau {
   public:
    StabilizerTableau(std::span<const Axis> axes, CounterRng outcome_rng);
    static StabilizerTableau product_state(size_t num_qubits, Axis axis, CounterRng outcome_rng);

    size_t num_qubits() const noexcept {
        return num_qubits_;
    }

    /// Projective measurement of the Hermitian, non-identity operator m.
    /// After a random outcome r, r*m occupies a stabilizer row.
    MeasureResult measure(const PauliString &m);

    /// Conjugation by the Pauli unitary q: flips the sign of every generator
    /// anticommuting with q.
    void apply_pauli(const PauliString &q);

    /// Reduced row-echelon form of the stabilizer group (pivot columns ordered
    /// X_1, Z_1, X_2, Z_2, ...). Equal iff the states are equal.
    std::vector<PauliString> canonical_generators() const;

    /// Measures each of the pairwise-commuting operators in order.
    std::vector<int> read_commuting_set(std::span<const PauliString> ops);

    /// Sign with which +m belongs to the stabilizer group, if it does.
    std::optional<int> expectation(const PauliString &m) const;

    /// Index of the generator pair whose stabilizer row equals +/-m.
    std::optional<size_t> row_of(const PauliString &m) const;

    /// Rewrites the generator presentation (not the state) so that +/-m is a
    /// stabilizer row and returns that row's index. The lowest-index
    /// generator in m's decomposition becomes the pivot. Throws StateError if
    /// m is not in the stabilizer group up to sign.
    size_t isolate(const PauliString &m);

    PauliString stabilizer(size_t i) const;
    PauliString destabilizer(size_t i) const;
    std::vector<PauliString> stabilizers() const;

    /// Throws StateError unless the pairing and commutation invariants hold.
    void validate() const;

    /// Canonical generators, one per line.
    std::string dump() const;

    CounterRng &rng() noexcept {
        return rng_;
    }

   private:
    const uint64_t *row_x(size_t r) const noexcept {
        return xs_.data() + r * num_words_;
    }
    const uint64_t *row_z(size_t r) const noexcept {
        return zs_.data() + r * num_words_;
    }
    uint64_t *row_x(size_t r) noexcept {
        return xs_.data() + r * num_words_;
    }
    uint64_t *row_z(size_t r) noexcept {
        return zs_.data() + r * num_words_;
    }
    bool row_anticommutes(size_t r, const uint64_t *px, const uint64_t *pz) const noexcept {
        return kernels::anticommutes(row_x(r), row_z(r), px, pz, num_words_);
    }
    /// row[target] <- row[target] * row[source]; the pair must commute.
    void row_mul(size_t target, size_t source) noexcept;
    void copy_row(size_t target, size_t source) noexcept;
    PauliString row(size_t r) const;
    void require_operand(const PauliString &p, const char *what) const;

    size_t num_qubits_;
    size_t num_words_;
    // Rows [0, n) are destabilizers, rows [n, 2n) stabilizers.
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
    CounterRng rng_;
    std::vector<uint64_t> scratch_x_;
    std::vector<uint64_t> scratch_z_;
};

}  // namespace steerqc

#endif
