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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace akq {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Output depends only on (counter, key).
struct Philox4x32 {
    using Counter = std::array<uint32_t, 4>;
    using Key = std::array<uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// A random stream identified by (seed, stream id). The stream id occupies
/// the upper half of the Philox counter, so streams never overlap and the
/// i-th stream can be built without touching the others.
class TrialStream {
   public:
    using result_type = uint64_t;

    TrialStream(uint64_t seed, uint64_t stream_id);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }
    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n);
    bool bernoulli(double p) { return uniform() < p; }
    /// Standard normal (Box-Muller).
    double normal();
    int bit() { return static_cast<int>((*this)() >> 63); }

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_; }

   private:
    void refill();

    uint64_t seed_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint64_t, 2> buffer_{};
    int used_ = 2;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0;
};

/// Stream i depends only on (master_seed, i).
std::vector<TrialStream> spawn_trial_streams(uint64_t master_seed, size_t n);

/// SplitMix64 finalizer over (seed, salt); used to give independent roles or
/// sessions their own seed.
uint64_t derive_seed(uint64_t seed, uint64_t salt);

}  // namespace akq
