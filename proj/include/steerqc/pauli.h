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

#ifndef STEERQC_PAULI_H
#define STEERQC_PAULI_H

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steerqc {

constexpr size_t words_for(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

/// Word-parallel kernels over packed (x, z) bit rows. Bit q of word q/64 is
/// qubit q; an (x, z) pair of (1, 1) denotes Y.
namespace kernels {

inline bool anticommutes(
    const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) noexcept {
    uint64_t acc = 0;
    for (size_t w = 0; w < words; w++) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return (std::popcount(acc) & 1) != 0;
}

/// a <- a * b over the site bits. Returns the exponent k (mod 4) of the i^k
/// produced by the single-site products; signs are the caller's business.
inline uint8_t mul_into(uint64_t *ax, uint64_t *az, const uint64_t *bx, const uint64_t *bz, size_t words) noexcept {
    int plus = 0;
    int minus = 0;
    for (size_t w = 0; w < words; w++) {
        uint64_t x1 = ax[w], z1 = az[w], x2 = bx[w], z2 = bz[w];
        uint64_t px1 = x1 & ~z1, py1 = x1 & z1, pz1 = z1 & ~x1;
        uint64_t px2 = x2 & ~z2, py2 = x2 & z2, pz2 = z2 & ~x2;
        // XY = iZ, YZ = iX, ZX = iY; reversed orders give -i.
        plus += std::popcount((px1 & py2) | (py1 & pz2) | (pz1 & px2));
        minus += std::popcount((px1 & pz2) | (py1 & px2) | (pz1 & py2));
        ax[w] = x1 ^ x2;
        az[w] = z1 ^ z2;
    }
    return (uint8_t)((plus - minus) & 3);
}

}  // namespace kernels

/// Signed n-qubit Pauli operator in symplectic form.
///
/// Only Hermitian operators are representable, so the phase is a single sign
/// bit. Products that may pick up a factor of i go through multiply_phased.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);

    /// Parses dense text: optional '+' or '-', then one of I/X/Y/Z per site.
    static PauliString parse(std::string_view text);
    /// Parses sparse text over `num_qubits` sites with 1-based indices, e.g.
    /// "-X1Z2Z3X4". "I" or "+I" alone is the identity.
    static PauliString parse_sparse(size_t num_qubits, std::string_view text);
    /// Contiguous letters starting at 0-based site `start`, e.g. ("ZZ", 3).
    static PauliString on_sites(size_t num_qubits, std::string_view letters, size_t start);

    size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    size_t num_words() const noexcept {
        return xs_.size();
    }

    bool x(size_t q) const noexcept {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const noexcept {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    /// One of 'I', 'X', 'Y', 'Z'.
    char at(size_t q) const noexcept;
    void set(size_t q, char pauli);
    void set_bits(size_t q, bool x, bool z) noexcept;

    bool negative() const noexcept {
        return negative_;
    }
    void set_negative(bool negative) noexcept {
        negative_ = negative;
    }
    int sign() const noexcept {
        return negative_ ? -1 : +1;
    }

    std::span<const uint64_t> xs() const noexcept {
        return xs_;
    }
    std::span<const uint64_t> zs() const noexcept {
        return zs_;
    }
    std::span<uint64_t> xs() noexcept {
        return xs_;
    }
    std::span<uint64_t> zs() noexcept {
        return zs_;
    }

    bool is_identity() const noexcept;
    size_t weight() const noexcept;
    /// Same site content, opposite sign.
    PauliString operator-() const;
    /// Equal site content, sign ignored.
    bool same_support_and_letters(const PauliString &other) const noexcept;

    /// Dense rendering with explicit sign, e.g. "+XIZY".
    std::string str() const;
    /// Sparse rendering with 1-based sites, e.g. "+X1Z2Z3X4".
    std::string sparse_str() const;

    bool operator==(const PauliString &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool negative_ = false;
};

/// A Pauli operator with a phase in {1, i, -1, -i}; the phase is i^log_i and
/// `pauli` carries no sign of its own.
struct PhasedPauli {
    PauliString pauli;
    uint8_t log_i = 0;
};

/// True iff the binary symplectic inner product of a and b is even.
bool commutes(const PauliString &a, const PauliString &b);

/// a * b with the full phase tracked.
PhasedPauli multiply_phased(const PauliString &a, const PauliString &b);

/// a * b; throws PhaseError when the product is anti-Hermitian.
PauliString multiply(const PauliString &a, const PauliString &b);

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace steerqc

#endif
