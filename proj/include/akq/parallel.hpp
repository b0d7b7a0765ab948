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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "akq/errors.hpp"
#include "akq/rng.hpp"

namespace akq {

/// Which implementation of a data-parallel kernel to run. `serial` is the
/// reference; `parallel` is the OpenMP kernel. Both produce bit-identical
/// results.
enum class Exec { serial, parallel };

struct Estimate {
    double mean = 0;
    double std_error = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

namespace detail {

/// Trials are grouped into fixed-size chunks; each chunk is summed serially in
/// trial order and chunk partials are combined in chunk order. The
/// floating-point result is therefore independent of the thread count.
inline constexpr uint64_t kChunkTrials = 1024;

struct Partial {
    double sum = 0;
    double sum_sq = 0;
};

template <class Trial>
Partial run_chunk(uint64_t seed, uint64_t begin, uint64_t end, Trial &trial) {
    Partial p;
    for (uint64_t i = begin; i < end; i++) {
        TrialStream rng(seed, i);
        double x = trial(rng);
        p.sum += x;
        p.sum_sq += x * x;
    }
    return p;
}

}  // namespace detail

/// Mean and standard error of `trial(rng)` over `trials` independent trials.
/// Trial i draws from TrialStream(seed, i).
template <class Trial>
Estimate monte_carlo(uint64_t seed, uint64_t trials, Trial trial, Exec exec = Exec::parallel) {
    if (trials == 0) {
        throw InvalidConfiguration("Monte Carlo estimate needs trials >= 1");
    }
    const uint64_t chunks = (trials + detail::kChunkTrials - 1) / detail::kChunkTrials;
    std::vector<detail::Partial> partials(chunks);
    if (exec == Exec::serial) {
        for (uint64_t c = 0; c < chunks; c++) {
            uint64_t begin = c * detail::kChunkTrials;
            uint64_t end = std::min(trials, begin + detail::kChunkTrials);
            partials[c] = detail::run_chunk(seed, begin, end, trial);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (int64_t c = 0; c < static_cast<int64_t>(chunks); c++) {
            uint64_t begin = c * detail::kChunkTrials;
            uint64_t end = std::min(trials, begin + detail::kChunkTrials);
            Trial local = trial;
            partials[c] = detail::run_chunk(seed, begin, end, local);
        }
    }
    double sum = 0;
    double sum_sq = 0;
    for (const auto &p : partials) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    Estimate e;
    e.trials = trials;
    e.seed = seed;
    e.mean = sum / trials;
    if (trials > 1) {
        double var = std::max(0.0, (sum_sq - trials * e.mean * e.mean) / (trials - 1));
        e.std_error = std::sqrt(var / trials);
    }
    return e;
}

/// out[i] = f(i) for i in [0, n).
template <class T, class F>
void fill_indexed(std::vector<T> &out, F f, Exec exec = Exec::parallel) {
    const int64_t n = static_cast<int64_t>(out.size());
    if (exec == Exec::serial) {
        for (int64_t i = 0; i < n; i++) {
            out[i] = f(static_cast<size_t>(i));
        }
    } else {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < n; i++) {
            out[i] = f(static_cast<size_t>(i));
        }
    }
}

}  // namespace akq
