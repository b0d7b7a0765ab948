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

#include "akq/ake.hpp"

#include <cmath>

#include "akq/detection.hpp"
#include "akq/privacy.hpp"

namespace akq {

namespace {

// Independent random streams for each role in a session.
enum Role : uint64_t {
    kAdamStates = 1,
    kAdamMeasure,
    kBabeBits,
    kSecretPool,
    kChannel,
    kEve,
};

constexpr uint64_t kTagHashSalt = 0x7a6;

/// Two-outcome projective measurement {rotate(+pi/2), rotate(-pi/2)} around a
/// reference circle state; outcome k decodes data bit k.
Povm decryption_basis(const DensityOperator &reference) {
    return Povm::unchecked({modulate(reference, 0).matrix(), modulate(reference, 1).matrix()});
}

DensityOperator maximally_mixed() {
    return DensityOperator::unchecked(CMatrix::identity(2) * cplx(0.5));
}

}  // namespace

void ChannelModel::validate() const {
    if (!(loss_prob >= 0 && loss_prob <= 1)) {
        throw InvalidConfiguration("channel loss_prob must lie in [0, 1]");
    }
    if (!(depolarize_prob >= 0 && depolarize_prob <= 1)) {
        throw InvalidConfiguration("channel depolarize_prob must lie in [0, 1]");
    }
}

std::optional<DensityOperator> apply_channel(const DensityOperator &state, const ChannelModel &ch, TrialStream &rng) {
    if (ch.loss_prob > 0 && rng.bernoulli(ch.loss_prob)) {
        return std::nullopt;
    }
    if (ch.depolarize_prob > 0 && rng.bernoulli(ch.depolarize_prob)) {
        return maximally_mixed();
    }
    return state;
}

std::string to_string(EveStrategy s) {
    switch (s) {
        case EveStrategy::none:
            return "none";
        case EveStrategy::impersonation:
            return "impersonation";
        case EveStrategy::opaque:
            return "opaque";
        case EveStrategy::translucent:
            return "translucent";
    }
    return "none";
}

EveStrategy parse_eve_strategy(const std::string &name) {
    for (auto s : {EveStrategy::none, EveStrategy::impersonation, EveStrategy::opaque, EveStrategy::translucent}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw InvalidConfiguration("unknown Eve strategy '" + name + "'");
}

void SessionConfig::validate() const {
    if (k < 1) {
        throw InvalidConfiguration("session needs k >= 1");
    }
    require_circle_size(M);
    channel.validate();
    if (!(margin >= 0)) {
        throw InvalidConfiguration("session margin must be non-negative");
    }
}

uint64_t trial_encryption_tag(const Bits &key, uint64_t pa_hash_seed) {
    Bits h = toeplitz_hash(key, derive_seed(pa_hash_seed, kTagHashSalt), 64);
    uint64_t word = 0;
    for (size_t b = 0; b < 64; b++) {
        word |= static_cast<uint64_t>(h[b]) << b;
    }
    return kTrialPlaintext ^ word;
}

SessionTranscript run_ake_session(const SessionConfig &cfg) {
    cfg.validate();
    SessionTranscript tr;
    tr.config = cfg;
    tr.eve_report.strategy = cfg.eve_strategy;

    const int M = cfg.M;
    const size_t data_len = kBlockSize * cfg.k;
    const size_t coded_len = cecc_coded_length(data_len, cfg.cecc);
    const size_t blocks = (coded_len + kBlockSize - 1) / kBlockSize;
    const size_t slots = blocks * kBlockSize;

    TrialStream adam_rng(cfg.rng_seed, kAdamStates);
    TrialStream adam_meas(cfg.rng_seed, kAdamMeasure);
    TrialStream babe_rng(cfg.rng_seed, kBabeBits);
    TrialStream secret(cfg.rng_seed, kSecretPool);
    TrialStream channel_rng(cfg.rng_seed, kChannel);
    TrialStream eve_rng(cfg.rng_seed, kEve);

    const bool eve_guesses =
        cfg.eve_strategy == EveStrategy::impersonation || cfg.eve_strategy == EveStrategy::translucent;
    std::optional<Povm> srm;
    if (cfg.eve_strategy == EveStrategy::opaque || cfg.eve_strategy == EveStrategy::translucent) {
        srm = square_root_measurement(circle_ensemble(M));
    }

    // (i) Adam sends enough random circle states to cover the expected loss.
    double survive = 1 - cfg.channel.loss_prob;
    double want = static_cast<double>(slots) * (1 + cfg.margin);
    size_t n_send = survive > 0 ? static_cast<size_t>(std::ceil(want / survive)) : static_cast<size_t>(std::ceil(want));
    n_send = std::max(n_send, slots);
    tr.states_sent.resize(n_send);
    tr.acknowledged.assign(n_send, 0);

    // Eve's per-qubit knowledge on the forward leg.
    std::vector<int> eve_forward(n_send, -1);
    std::vector<DensityOperator> at_babe;
    std::vector<size_t> arrived;
    at_babe.reserve(n_send);
    for (size_t i = 0; i < n_send; i++) {
        int ell = static_cast<int>(adam_rng.below(M));
        tr.states_sent[i] = ell;
        DensityOperator in_flight = circle_state(CircleIndex(ell, M));
        switch (cfg.eve_strategy) {
            case EveStrategy::impersonation: {
                // Adam's qubit goes into Eve's memory; Babe gets Eve's own state.
                int mine = static_cast<int>(eve_rng.below(M));
                eve_forward[i] = mine;
                in_flight = circle_state(CircleIndex(mine, M));
                break;
            }
            case EveStrategy::opaque: {
                int est = static_cast<int>(srm->sample(in_flight, eve_rng));
                eve_forward[i] = est;
                in_flight = circle_state(CircleIndex(est, M));
                break;
            }
            case EveStrategy::translucent:
                // Measures an undisturbed copy; the original flies on.
                eve_forward[i] = static_cast<int>(srm->sample(in_flight, eve_rng));
                break;
            case EveStrategy::none:
                break;
        }
        if (auto out = apply_channel(in_flight, cfg.channel, channel_rng)) {
            tr.acknowledged[i] = 1;
            arrived.push_back(i);
            at_babe.push_back(std::move(*out));
        }
    }

    if (arrived.size() < slots) {
        tr.aborted = true;
        tr.abort_reason = "only " + std::to_string(arrived.size()) + " of " + std::to_string(slots) +
                          " required qubits were acknowledged";
        return tr;
    }
    // Slot s is carried by sent qubit arrived[s].

    // (ii) Babe encodes her data, modulates, and returns in secret order.
    tr.raw_bits_babe.resize(data_len);
    for (auto &b : tr.raw_bits_babe) {
        b = static_cast<uint8_t>(babe_rng.bit());
    }
    tr.coded_bits_babe = cecc_encode(tr.raw_bits_babe, cfg.cecc);
    while (tr.coded_bits_babe.size() < slots) {
        tr.coded_bits_babe.push_back(static_cast<uint8_t>(babe_rng.bit()));
    }

    std::vector<DensityOperator> modulated;
    modulated.reserve(slots);
    for (size_t s = 0; s < slots; s++) {
        modulated.push_back(modulate(at_babe[s], tr.coded_bits_babe[s]));
    }

    std::vector<DensityOperator> returned;
    returned.reserve(slots);
    tr.orders_used.resize(blocks);
    for (size_t b = 0; b < blocks; b++) {
        int order = static_cast<int>(secret.below(kOrderCount));
        tr.orders_used[b] = order;
        auto block = std::span<const DensityOperator>(modulated).subspan(b * kBlockSize, kBlockSize);
        for (auto &q : order_permute(block, order)) {
            returned.push_back(std::move(q));
        }
    }
    tr.order_bits_expended = 2 * blocks;

    // Eve on the return leg.
    Bits eve_bits;
    if (eve_guesses) {
        eve_bits.resize(slots);
        tr.eve_report.order_guess_correct.resize(blocks);
        std::vector<DensityOperator> forwarded;
        forwarded.reserve(slots);
        for (size_t b = 0; b < blocks; b++) {
            int guess = static_cast<int>(eve_rng.below(kOrderCount));
            tr.eve_report.order_guess_correct[b] = guess == tr.orders_used[b];
            auto block = std::span<const DensityOperator>(returned).subspan(b * kBlockSize, kBlockSize);
            auto as_eve_sees = order_unpermute(block, guess);
            std::vector<DensityOperator> to_adam;
            for (size_t p = 0; p < kBlockSize; p++) {
                size_t s = b * kBlockSize + p;
                int reference = eve_forward[arrived[s]];
                Povm basis = decryption_basis(circle_state(CircleIndex(reference, M)));
                eve_bits[s] = static_cast<uint8_t>(basis.sample(as_eve_sees[p], eve_rng));
                if (cfg.eve_strategy == EveStrategy::impersonation) {
                    DensityOperator stored = circle_state(CircleIndex(tr.states_sent[arrived[s]], M));
                    to_adam.push_back(modulate(stored, eve_bits[s]));
                }
            }
            if (cfg.eve_strategy == EveStrategy::impersonation) {
                for (auto &q : order_permute(std::span<const DensityOperator>(to_adam), guess)) {
                    forwarded.push_back(std::move(q));
                }
            }
        }
        if (cfg.eve_strategy == EveStrategy::impersonation) {
            returned = std::move(forwarded);
        }
    }

    // Adam undoes the order and decrypts against his own states.
    tr.coded_bits_adam.resize(slots);
    for (size_t b = 0; b < blocks; b++) {
        auto block = std::span<const DensityOperator>(returned).subspan(b * kBlockSize, kBlockSize);
        auto in_order = order_unpermute(block, tr.orders_used[b]);
        for (size_t p = 0; p < kBlockSize; p++) {
            size_t s = b * kBlockSize + p;
            DensityOperator mine = circle_state(CircleIndex(tr.states_sent[arrived[s]], M));
            tr.coded_bits_adam[s] = static_cast<uint8_t>(decryption_basis(mine).sample(in_order[p], adam_meas));
        }
    }

    auto &rep = tr.eve_report;
    for (size_t s = 0; s < slots; s++) {
        bool err = tr.coded_bits_adam[s] != tr.coded_bits_babe[s];
        rep.total_qubits++;
        rep.total_errors += err;
        if (eve_guesses) {
            bool right = rep.order_guess_correct[s / kBlockSize];
            bool eve_ok = eve_bits[s] == tr.coded_bits_babe[s];
            (right ? rep.right_block_qubits : rep.wrong_block_qubits)++;
            (right ? rep.right_block_errors : rep.wrong_block_errors) += err;
            rep.eve_bits_attempted++;
            rep.eve_bits_correct += eve_ok;
            if (right) {
                rep.eve_right_block_attempted++;
                rep.eve_right_block_correct += eve_ok;
            }
        }
    }

    Bits adam_coded(tr.coded_bits_adam.begin(), tr.coded_bits_adam.begin() + coded_len);
    DecodeResult decoded = cecc_decode(adam_coded, cfg.cecc);
    tr.raw_bits_adam = std::move(decoded.data);
    tr.cecc_corrections = decoded.corrected;

    // (iii) Both sides compress 8k bits to 4k.
    const size_t key_len = data_len / 2;
    tr.final_key_babe = privacy_amplify(tr.raw_bits_babe, cfg.pa_hash_seed, key_len);
    tr.final_key_adam = privacy_amplify(tr.raw_bits_adam, cfg.pa_hash_seed, key_len);

    // (iv) Trial encryption.
    tr.trial_tag_babe = trial_encryption_tag(tr.final_key_babe, cfg.pa_hash_seed);
    tr.trial_tag_adam = trial_encryption_tag(tr.final_key_adam, cfg.pa_hash_seed);
    tr.trial_check_passed = tr.trial_tag_babe == tr.trial_tag_adam;
    return tr;
}

std::vector<SessionTranscript> run_ake_sessions(const SessionConfig &cfg, size_t count, Exec exec) {
    cfg.validate();
    std::vector<SessionTranscript> out(count);
    fill_indexed(
        out,
        [&cfg](size_t i) {
            SessionConfig c = cfg;
            c.rng_seed = derive_seed(cfg.rng_seed, i);
            return run_ake_session(c);
        },
        exec);
    return out;
}

}  // namespace akq
