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

#ifndef STEERQC_RNG_H
#define STEERQC_RNG_H

#include <cstdint>
#include <initializer_list>

namespace steerqc {

/// Finalizer from SplitMix64. Bijective on 64-bit words.
constexpr uint64_t mix64(uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

/// Order-sensitive hash of a word sequence.
uint64_t hash_words(std::initializer_list<uint64_t> words) noexcept;

/// Counter-based generator: the i-th output is a pure function of (key, i).
///
/// Any draw of a trajectory can be recomputed from its seed alone, and the
/// output sequence does not depend on the standard library's distribution
/// implementations. Satisfies UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = uint64_t;

    CounterRng() = default;
    CounterRng(uint64_t seed, uint64_t stream) noexcept : key_(hash_words({seed, stream})) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return UINT64_MAX;
    }

    result_type operator()() noexcept {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t uniform_below(uint64_t bound) noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return (double)((*this)() >> 11) * 0x1.0p-53;
    }

    bool coin() noexcept {
        return ((*this)() >> 63) != 0;
    }

    /// True with probability p.
    bool bernoulli(double p) noexcept {
        return uniform01() < p;
    }

    uint64_t counter() const noexcept {
        return counter_;
    }

   private:
    uint64_t key_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace steerqc

#endif
