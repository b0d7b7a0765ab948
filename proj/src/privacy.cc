// Copyright 2026 The akq Authors
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

#include "akq/privacy.hpp"

#include "akq/errors.hpp"
#include "akq/rng.hpp"

namespace akq {

namespace {
constexpr uint64_t kToeplitzStream = 0x7e0;
}

Bits toeplitz_diagonals(uint64_t hash_seed, size_t n, size_t out_len) {
    size_t count = n + out_len == 0 ? 0 : n + out_len - 1;
    TrialStream rng(hash_seed, kToeplitzStream);
    Bits t(count);
    for (size_t k = 0; k < count; k += 64) {
        uint64_t word = rng();
        for (size_t b = 0; b < 64 && k + b < count; b++) {
            t[k + b] = (word >> b) & 1;
        }
    }
    return t;
}

Bits toeplitz_hash(const Bits &bits, uint64_t hash_seed, size_t out_len) {
    size_t n = bits.size();
    Bits out(out_len, 0);
    if (n == 0) {
        return out;
    }
    Bits t = toeplitz_diagonals(hash_seed, n, out_len);
    for (size_t i = 0; i < out_len; i++) {
        uint8_t acc = 0;
        for (size_t j = 0; j < n; j++) {
            acc ^= t[i + n - 1 - j] & bits[j];
        }
        out[i] = acc;
    }
    return out;
}

Bits privacy_amplify(const Bits &bits, uint64_t hash_seed, size_t out_len) {
    if (out_len > bits.size()) {
        throw InvalidConfiguration("privacy amplification cannot lengthen the key (" + std::to_string(out_len) +
                                   " > " + std::to_string(bits.size()) + ")");
    }
    return toeplitz_hash(bits, hash_seed, out_len);
}

}  // namespace akq
