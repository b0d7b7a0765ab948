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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akq/bits.hpp"
#include "akq/cecc.hpp"
#include "akq/errors.hpp"
#include "akq/parallel.hpp"
#include "akq/qstate.hpp"
#include "akq/rng.hpp"

namespace akq {

inline constexpr size_t kBlockSize = 8;
inline constexpr int kOrderCount = 4;

/// The four return orders for an 8-qubit block, as 1-based source positions:
/// output position p carries input item kOrderTable[id][p] - 1. No two orders
/// agree at any position.
inline constexpr std::array<std::array<int, kBlockSize>, kOrderCount> kOrderTable{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {8, 7, 6, 5, 4, 3, 2, 1},
    {3, 8, 4, 6, 2, 7, 1, 5},
    {4, 1, 2, 3, 6, 5, 8, 7},
}};

template <class T>
std::vector<T> order_permute(std::span<const T> block, int order_id) {
    if (block.size() != kBlockSize) {
        throw InvalidConfiguration("order_permute needs a block of 8 items, got " + std::to_string(block.size()));
    }
    if (order_id < 0 || order_id >= kOrderCount) {
        throw InvalidConfiguration("order id must be in 0..3, got " + std::to_string(order_id));
    }
    std::vector<T> out;
    out.reserve(kBlockSize);
    for (int src : kOrderTable[order_id]) {
        out.push_back(block[src - 1]);
    }
    return out;
}

template <class T>
std::vector<T> order_unpermute(std::span<const T> block, int order_id) {
    if (block.size() != kBlockSize) {
        throw InvalidConfiguration("order_unpermute needs a block of 8 items, got " + std::to_string(block.size()));
    }
    if (order_id < 0 || order_id >= kOrderCount) {
        throw InvalidConfiguration("order id must be in 0..3, got " + std::to_string(order_id));
    }
    std::vector<T> out(block.begin(), block.end());
    for (size_t p = 0; p < kBlockSize; p++) {
        out[kOrderTable[order_id][p] - 1] = block[p];
    }
    return out;
}

/// Per-qubit loss and depolarization, applied once to each qubit on its way
/// from Adam to Babe.
struct ChannelModel {
    double loss_prob = 0;
    double depolarize_prob = 0;

    void validate() const;
};

/// nullopt when the qubit is lost; I/2 when it is depolarized.
std::optional<DensityOperator> apply_channel(const DensityOperator &state, const ChannelModel &ch, TrialStream &rng);

enum class EveStrategy { none, impersonation, opaque, translucent };

std::string to_string(EveStrategy s);
EveStrategy parse_eve_strategy(const std::string &name);

struct SessionConfig {
    /// Number of 8-bit data blocks; the session distils 8k sifted bits into a
    /// 4k-bit key.
    int k = 4;
    int M = 8;
    ChannelModel channel;
    Cecc cecc = Cecc::hamming74;
    uint64_t pa_hash_seed = 0;
    uint64_t rng_seed = 0;
    EveStrategy eve_strategy = EveStrategy::none;
    /// Extra fraction of qubits Adam sends beyond what survives on average.
    double margin = 0.25;

    void validate() const;
};

/// What Eve did during one session and what it cost Adam.
struct SessionEveReport {
    EveStrategy strategy = EveStrategy::none;
    /// Per order block: 1 when Eve's guess of the return order was right.
    /// Empty for strategies that never guess.
    Bits order_guess_correct;
    /// Transmitted-bit errors at Adam, before decoding.
    uint64_t total_qubits = 0;
    uint64_t total_errors = 0;
    uint64_t wrong_block_qubits = 0;
    uint64_t wrong_block_errors = 0;
    uint64_t right_block_qubits = 0;
    uint64_t right_block_errors = 0;
    /// Eve's own estimates of Babe's transmitted bits.
    uint64_t eve_bits_attempted = 0;
    uint64_t eve_bits_correct = 0;
    uint64_t eve_right_block_attempted = 0;
    uint64_t eve_right_block_correct = 0;
};

struct SessionTranscript {
    SessionConfig config;
    bool aborted = false;
    std::string abort_reason;
    /// Circle index of every qubit Adam sent.
    std::vector<int> states_sent;
    /// 1 when Babe acknowledged the arrival of qubit i.
    Bits acknowledged;
    /// Secret return order of each 8-qubit block.
    std::vector<int> orders_used;
    size_t order_bits_expended = 0;
    /// Babe's 8k data bits and Adam's decoded copy.
    Bits raw_bits_babe;
    Bits raw_bits_adam;
    /// The transmitted bit stream (coded and padded) on both sides.
    Bits coded_bits_babe;
    Bits coded_bits_adam;
    size_t cecc_corrections = 0;
    Bits final_key_adam;
    Bits final_key_babe;
    uint64_t trial_tag_babe = 0;
    uint64_t trial_tag_adam = 0;
    bool trial_check_passed = false;
    SessionEveReport eve_report;
};

/// Public plaintext for the trial encryption.
inline constexpr uint64_t kTrialPlaintext = 0x5452494131454e43ull;

/// Babe's trial ciphertext: the public plaintext XOR a 64-bit universal hash
/// of the key. Adam accepts when his own key yields the same tag.
uint64_t trial_encryption_tag(const Bits &key, uint64_t pa_hash_seed);

SessionTranscript run_ake_session(const SessionConfig &cfg);

/// Runs `count` sessions; session i uses rng_seed derive_seed(cfg.rng_seed, i)
/// and is otherwise identical to `cfg`.
std::vector<SessionTranscript> run_ake_sessions(const SessionConfig &cfg, size_t count, Exec exec = Exec::parallel);

}  // namespace akq
