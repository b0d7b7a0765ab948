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

#include "akq/rng.hpp"

#include <cmath>
#include <numbers>

#include "akq/errors.hpp"

namespace akq {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t &hi, uint32_t &lo) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(p >> 32);
    lo = static_cast<uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
    for (int round = 0; round < 10; round++) {
        uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
        mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

TrialStream::TrialStream(uint64_t seed, uint64_t stream_id) : seed_(seed), stream_(stream_id) {}

void TrialStream::refill() {
    Philox4x32::Counter ctr{static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                            static_cast<uint32_t>(stream_), static_cast<uint32_t>(stream_ >> 32)};
    Philox4x32::Key key{static_cast<uint32_t>(seed_), static_cast<uint32_t>(seed_ >> 32)};
    auto out = Philox4x32::block(ctr, key);
    buffer_[0] = (static_cast<uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<uint64_t>(out[3]) << 32) | out[2];
    block_++;
    used_ = 0;
}

TrialStream::result_type TrialStream::operator()() {
    if (used_ == 2) {
        refill();
    }
    return buffer_[used_++];
}

double TrialStream::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

uint64_t TrialStream::below(uint64_t n) {
    if (n == 0) {
        throw InvalidConfiguration("below(0) has no valid outcome");
    }
    // Rejection keeps the result exactly uniform.
    uint64_t limit = max() - max() % n;
    while (true) {
        uint64_t x = (*this)();
        if (x < limit) {
            return x % n;
        }
    }
}

double TrialStream::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double radius = std::sqrt(-2 * std::log(u1));
    double angle = 2 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_normal_ = true;
    return radius * std::cos(angle);
}

std::vector<TrialStream> spawn_trial_streams(uint64_t master_seed, size_t n) {
    if (n == 0) {
        throw InvalidConfiguration("spawn_trial_streams needs n >= 1");
    }
    std::vector<TrialStream> out;
    out.reserve(n);
    for (size_t i = 0; i < n; i++) {
        out.emplace_back(master_seed, i);
    }
    return out;
}

uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace akq
