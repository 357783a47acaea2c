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

#include "steerqc/pauli.h"

#include <ostream>

#include "steerqc/errors.h"

namespace steerqc {

namespace {

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

bool letter_bits(char c, bool &x, bool &z) {
    switch (c) {
        case 'I':
            x = false, z = false;
            return true;
        case 'X':
            x = true, z = false;
            return true;
        case 'Y':
            x = true, z = true;
            return true;
        case 'Z':
            x = false, z = true;
            return true;
        default:
            return false;
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::parse(std::string_view text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        pos++;
    }
    if (pos == text.size()) {
        throw ParseError("Pauli text has no sites", pos);
    }
    PauliString result(text.size() - pos);
    result.negative_ = negative;
    for (size_t q = 0; pos < text.size(); pos++, q++) {
        bool x, z;
        if (!letter_bits(text[pos], x, z)) {
            throw ParseError(std::string("unexpected character '") + text[pos] + "' in Pauli text", pos);
        }
        result.set_bits(q, x, z);
    }
    return result;
}

PauliString PauliString::parse_sparse(size_t num_qubits, std::string_view text) {
    PauliString result(num_qubits);
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        result.negative_ = text[pos] == '-';
        pos++;
    }
    if (text.substr(pos) == "I") {
        return result;
    }
    if (pos == text.size()) {
        throw ParseError("Pauli text has no sites", pos);
    }
    while (pos < text.size()) {
        bool x, z;
        if (!letter_bits(text[pos], x, z) || text[pos] == 'I') {
            throw ParseError(std::string("expected X, Y or Z but got '") + text[pos] + "'", pos);
        }
        size_t letter_pos = pos++;
        size_t site = 0;
        size_t digits_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            site = site * 10 + (size_t)(text[pos] - '0');
            pos++;
        }
        if (pos == digits_start) {
            throw ParseError("missing site index", pos);
        }
        if (site < 1 || site > num_qubits) {
            throw ParseError("site index " + std::to_string(site) + " outside [1, " + std::to_string(num_qubits) + "]",
                             digits_start);
        }
        if (result.at(site - 1) != 'I') {
            throw ParseError("site " + std::to_string(site) + " given twice", letter_pos);
        }
        result.set_bits(site - 1, x, z);
    }
    return result;
}

PauliString PauliString::on_sites(size_t num_qubits, std::string_view letters, size_t start) {
    if (start + letters.size() > num_qubits) {
        throw DimensionError("Pauli support runs past site " + std::to_string(num_qubits));
    }
    PauliString result(num_qubits);
    for (size_t k = 0; k < letters.size(); k++) {
        result.set(start + k, letters[k]);
    }
    return result;
}

char PauliString::at(size_t q) const noexcept {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(int)x(q) | ((int)z(q) << 1)];
}

void PauliString::set(size_t q, char pauli) {
    bool x, z;
    if (!letter_bits(pauli, x, z)) {
        throw ParseError(std::string("unexpected Pauli letter '") + pauli + "'", 0);
    }
    set_bits(q, x, z);
}

void PauliString::set_bits(size_t q, bool x, bool z) noexcept {
    uint64_t bit = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = z ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

bool PauliString::is_identity() const noexcept {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const noexcept {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

PauliString PauliString::operator-() const {
    PauliString result = *this;
    result.negative_ = !negative_;
    return result;
}

bool PauliString::same_support_and_letters(const PauliString &other) const noexcept {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(num_qubits_ + 1);
    out.push_back(negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back(at(q));
    }
    return out;
}

std::string PauliString::sparse_str() const {
    std::string out(1, negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        char c = at(q);
        if (c != 'I') {
            out.push_back(c);
            out += std::to_string(q + 1);
        }
    }
    if (out.size() == 1) {
        out.push_back('I');
    }
    return out;
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    return !kernels::anticommutes(a.xs().data(), a.zs().data(), b.xs().data(), b.zs().data(), a.num_words());
}

PhasedPauli multiply_phased(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    PhasedPauli result{a, 0};
    result.pauli.set_negative(false);
    uint8_t log_i = kernels::mul_into(
        result.pauli.xs().data(), result.pauli.zs().data(), b.xs().data(), b.zs().data(), a.num_words());
    log_i += 2 * (uint8_t)a.negative() + 2 * (uint8_t)b.negative();
    result.log_i = log_i & 3;
    return result;
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    PhasedPauli product = multiply_phased(a, b);
    if (product.log_i & 1) {
        throw PhaseError("product " + a.str() + " * " + b.str() + " is anti-Hermitian");
    }
    product.pauli.set_negative(product.log_i == 2);
    return std::move(product.pauli);
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace steerqc
