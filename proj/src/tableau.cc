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

#include "steerqc/tableau.h"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "steerqc/errors.h"

namespace steerqc {

StabilizerTableau::StabilizerTableau(std::span<const Axis> axes, CounterRng outcome_rng)
    : num_qubits_(axes.size()),
      num_words_(words_for(axes.size())),
      xs_(2 * axes.size() * words_for(axes.size()), 0),
      zs_(2 * axes.size() * words_for(axes.size()), 0),
      signs_(2 * axes.size(), 0),
      rng_(outcome_rng),
      scratch_x_(words_for(axes.size()), 0),
      scratch_z_(words_for(axes.size()), 0) {
    if (num_qubits_ == 0) {
        throw DimensionError("a tableau needs at least one qubit");
    }
    size_t n = num_qubits_;
    for (size_t q = 0; q < n; q++) {
        uint64_t bit = uint64_t{1} << (q & 63);
        size_t w = q >> 6;
        if (axes[q] == Axis::kXPlus) {
            row_z(q)[w] |= bit;
            row_x(n + q)[w] |= bit;
        } else {
            row_x(q)[w] |= bit;
            row_z(n + q)[w] |= bit;
            signs_[n + q] = axes[q] == Axis::kZMinus;
        }
    }
}

StabilizerTableau StabilizerTableau::product_state(size_t num_qubits, Axis axis, CounterRng outcome_rng) {
    std::vector<Axis> axes(num_qubits, axis);
    return StabilizerTableau(axes, outcome_rng);
}

void StabilizerTableau::require_operand(const PauliString &p, const char *what) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError(std::string(what) + " acts on " + std::to_string(p.num_qubits()) +
                             " qubits but the tableau has " + std::to_string(num_qubits_));
    }
}

void StabilizerTableau::row_mul(size_t target, size_t source) noexcept {
    uint8_t log_i = kernels::mul_into(row_x(target), row_z(target), row_x(source), row_z(source), num_words_);
    assert((log_i & 1) == 0);
    signs_[target] ^= signs_[source] ^ (uint8_t)(log_i >> 1);
}

void StabilizerTableau::copy_row(size_t target, size_t source) noexcept {
    std::copy_n(row_x(source), num_words_, row_x(target));
    std::copy_n(row_z(source), num_words_, row_z(target));
    signs_[target] = signs_[source];
}

PauliString StabilizerTableau::row(size_t r) const {
    PauliString p(num_qubits_);
    std::copy_n(row_x(r), num_words_, p.xs().data());
    std::copy_n(row_z(r), num_words_, p.zs().data());
    p.set_negative(signs_[r] != 0);
    return p;
}

PauliString StabilizerTableau::stabilizer(size_t i) const {
    return row(num_qubits_ + i);
}

PauliString StabilizerTableau::destabilizer(size_t i) const {
    return row(i);
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
    std::vector<PauliString> result;
    result.reserve(num_qubits_);
    for (size_t i = 0; i < num_qubits_; i++) {
        result.push_back(stabilizer(i));
    }
    return result;
}

MeasureResult StabilizerTableau::measure(const PauliString &m) {
    require_operand(m, "measured operator");
    if (m.is_identity()) {
        throw std::invalid_argument("cannot measure the identity");
    }
    const size_t n = num_qubits_;
    const uint64_t *mx = m.xs().data();
    const uint64_t *mz = m.zs().data();

    size_t pivot = 2 * n;
    for (size_t r = n; r < 2 * n; r++) {
        if (row_anticommutes(r, mx, mz)) {
            pivot = r;
            break;
        }
    }

    if (pivot < 2 * n) {
        for (size_t r = 0; r < 2 * n; r++) {
            if (r != pivot && r != pivot - n && row_anticommutes(r, mx, mz)) {
                row_mul(r, pivot);
            }
        }
        copy_row(pivot - n, pivot);
        int outcome = rng_.coin() ? -1 : +1;
        std::copy_n(mx, num_words_, row_x(pivot));
        std::copy_n(mz, num_words_, row_z(pivot));
        signs_[pivot] = (uint8_t)(m.negative() ^ (outcome < 0));
        return {outcome, true};
    }

    // m is in the group: it is the product of the stabilizers whose
    // destabilizers anticommute with it.
    std::fill(scratch_x_.begin(), scratch_x_.end(), 0);
    std::fill(scratch_z_.begin(), scratch_z_.end(), 0);
    unsigned log_i = 0;
    for (size_t i = 0; i < n; i++) {
        if (row_anticommutes(i, mx, mz)) {
            log_i += kernels::mul_into(scratch_x_.data(), scratch_z_.data(), row_x(n + i), row_z(n + i), num_words_);
            log_i += 2u * signs_[n + i];
        }
    }
    assert(std::equal(scratch_x_.begin(), scratch_x_.end(), mx) && std::equal(scratch_z_.begin(), scratch_z_.end(), mz));
    bool group_sign_negative = (log_i & 3) == 2;
    return {(group_sign_negative ^ m.negative()) ? -1 : +1, false};
}

void StabilizerTableau::apply_pauli(const PauliString &q) {
    require_operand(q, "Pauli unitary");
    const uint64_t *qx = q.xs().data();
    const uint64_t *qz = q.zs().data();
    for (size_t r = 0; r < 2 * num_qubits_; r++) {
        signs_[r] ^= (uint8_t)row_anticommutes(r, qx, qz);
    }
}

std::optional<int> StabilizerTableau::expectation(const PauliString &m) const {
    require_operand(m, "observable");
    const size_t n = num_qubits_;
    const uint64_t *mx = m.xs().data();
    const uint64_t *mz = m.zs().data();
    for (size_t r = n; r < 2 * n; r++) {
        if (row_anticommutes(r, mx, mz)) {
            return std::nullopt;
        }
    }
    PauliString acc(n);
    unsigned log_i = 0;
    for (size_t i = 0; i < n; i++) {
        if (row_anticommutes(i, mx, mz)) {
            log_i += kernels::mul_into(acc.xs().data(), acc.zs().data(), row_x(n + i), row_z(n + i), num_words_);
            log_i += 2u * signs_[n + i];
        }
    }
    if (!acc.same_support_and_letters(m)) {
        return std::nullopt;
    }
    bool negative = ((log_i & 3) == 2) ^ m.negative();
    return negative ? -1 : +1;
}

std::optional<size_t> StabilizerTableau::row_of(const PauliString &m) const {
    require_operand(m, "operator");
    const size_t n = num_qubits_;
    for (size_t i = 0; i < n; i++) {
        if (std::equal(m.xs().begin(), m.xs().end(), row_x(n + i)) &&
            std::equal(m.zs().begin(), m.zs().end(), row_z(n + i))) {
            return i;
        }
    }
    return std::nullopt;
}

size_t StabilizerTableau::isolate(const PauliString &m) {
    if (auto existing = row_of(m)) {
        return *existing;
    }
    if (!expectation(m)) {
        throw StateError(m.str() + " is not in the stabilizer group");
    }
    const size_t n = num_qubits_;
    const uint64_t *mx = m.xs().data();
    const uint64_t *mz = m.zs().data();
    std::vector<size_t> members;
    for (size_t i = 0; i < n; i++) {
        if (row_anticommutes(i, mx, mz)) {
            members.push_back(i);
        }
    }
    size_t pivot = members.front();
    for (size_t k = 1; k < members.size(); k++) {
        row_mul(n + pivot, n + members[k]);
        // Keeps destabilizer members[k] anticommuting with its own stabilizer
        // only, now that the pivot stabilizer contains that stabilizer.
        row_mul(members[k], pivot);
    }
    return pivot;
}

std::vector<PauliString> StabilizerTableau::canonical_generators() const {
    const size_t n = num_qubits_;
    const size_t words = num_words_;
    std::vector<uint64_t> xs(xs_.begin() + n * words, xs_.end());
    std::vector<uint64_t> zs(zs_.begin() + n * words, zs_.end());
    std::vector<uint8_t> signs(signs_.begin() + n, signs_.end());

    auto rx = [&](size_t r) { return xs.data() + r * words; };
    auto rz = [&](size_t r) { return zs.data() + r * words; };
    auto mul = [&](size_t target, size_t source) {
        uint8_t log_i = kernels::mul_into(rx(target), rz(target), rx(source), rz(source), words);
        signs[target] ^= signs[source] ^ (uint8_t)(log_i >> 1);
    };
    auto swap_rows = [&](size_t a, size_t b) {
        std::swap_ranges(rx(a), rx(a) + words, rx(b));
        std::swap_ranges(rz(a), rz(a) + words, rz(b));
        std::swap(signs[a], signs[b]);
    };

    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < n; col++) {
        size_t q = col >> 1;
        bool z_col = (col & 1) != 0;
        uint64_t bit = uint64_t{1} << (q & 63);
        auto has = [&](size_t r) { return ((z_col ? rz(r) : rx(r))[q >> 6] & bit) != 0; };
        size_t found = rank;
        while (found < n && !has(found)) {
            found++;
        }
        if (found == n) {
            continue;
        }
        swap_rows(rank, found);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && has(r)) {
                mul(r, rank);
            }
        }
        rank++;
    }

    std::vector<PauliString> result;
    result.reserve(n);
    for (size_t r = 0; r < n; r++) {
        PauliString p(n);
        std::copy_n(rx(r), words, p.xs().data());
        std::copy_n(rz(r), words, p.zs().data());
        p.set_negative(signs[r] != 0);
        result.push_back(std::move(p));
    }
    return result;
}

std::vector<int> StabilizerTableau::read_commuting_set(std::span<const PauliString> ops) {
    for (size_t a = 0; a < ops.size(); a++) {
        require_operand(ops[a], "terminal operator");
        for (size_t b = a + 1; b < ops.size(); b++) {
            if (!commutes(ops[a], ops[b])) {
                throw std::invalid_argument("terminal operators " + std::to_string(a + 1) + " (" +
                                            ops[a].sparse_str() + ") and " + std::to_string(b + 1) + " (" +
                                            ops[b].sparse_str() + ") do not commute");
            }
        }
    }
    std::vector<int> outcomes;
    outcomes.reserve(ops.size());
    for (const PauliString &op : ops) {
        outcomes.push_back(measure(op).outcome);
    }
    return outcomes;
}

void StabilizerTableau::validate() const {
    const size_t n = num_qubits_;
    for (size_t a = 0; a < 2 * n; a++) {
        for (size_t b = a + 1; b < 2 * n; b++) {
            bool anti = row_anticommutes(a, row_x(b), row_z(b));
            bool paired = a < n && b == a + n;
            if (anti != paired) {
                std::ostringstream msg;
                msg << "tableau invariant broken between " << (a < n ? "destabilizer " : "stabilizer ") << (a % n)
                    << " and " << (b < n ? "destabilizer " : "stabilizer ") << (b % n);
                throw StateError(msg.str());
            }
        }
    }
}

std::string StabilizerTableau::dump() const {
    std::string out;
    for (const PauliString &g : canonical_generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

}  // namespace steerqc
