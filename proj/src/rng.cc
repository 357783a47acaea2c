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

#include "steerqc/rng.h"

namespace steerqc {

uint64_t hash_words(std::initializer_list<uint64_t> words) noexcept {
    uint64_t h = 0x6A09E667F3BCC909ULL;
    for (uint64_t w : words) {
        h = mix64(h ^ mix64(w + 0x9E3779B97F4A7C15ULL));
    }
    return h;
}

uint64_t CounterRng::uniform_below(uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection of the biased low band.
    unsigned __int128 m = (unsigned __int128)(*this)() * bound;
    uint64_t low = (uint64_t)m;
    if (low < bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = (unsigned __int128)(*this)() * bound;
            low = (uint64_t)m;
        }
    }
    return (uint64_t)(m >> 64);
}

}  // namespace steerqc
