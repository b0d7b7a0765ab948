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
#include <set>

#include "akq/json_io.hpp"
#include "gtest/gtest.h"

using namespace akq;

namespace {

SessionConfig config(int k, int M, EveStrategy eve, Cecc cecc, uint64_t seed) {
    SessionConfig c;
    c.k = k;
    c.M = M;
    c.eve_strategy = eve;
    c.cecc = cecc;
    c.rng_seed = seed;
    c.pa_hash_seed = seed * 31 + 7;
    return c;
}

struct Pooled {
    uint64_t wrong_q = 0, wrong_e = 0, right_q = 0, right_e = 0, total_q = 0, total_e = 0;
    uint64_t eve_right = 0, eve_right_ok = 0, eve_all = 0, eve_all_ok = 0;
    size_t passed = 0, sessions = 0;
};

Pooled pool(const std::vector<SessionTranscript> &runs) {
    Pooled p;
    for (const auto &tr : runs) {
        const auto &r = tr.eve_report;
        p.wrong_q += r.wrong_block_qubits;
        p.wrong_e += r.wrong_block_errors;
        p.right_q += r.right_block_qubits;
        p.right_e += r.right_block_errors;
        p.total_q += r.total_qubits;
        p.total_e += r.total_errors;
        p.eve_right += r.eve_right_block_attempted;
        p.eve_right_ok += r.eve_right_block_correct;
        p.eve_all += r.eve_bits_attempted;
        p.eve_all_ok += r.eve_bits_correct;
        p.passed += tr.trial_check_passed;
        p.sessions++;
    }
    return p;
}

}  // namespace

TEST(order_table, exact_orders) {
    const char *want[4] = {"12345678", "87654321", "38462715", "41236587"};
    for (int o = 0; o < kOrderCount; o++) {
        for (size_t p = 0; p < kBlockSize; p++) {
            EXPECT_EQ(kOrderTable[o][p], want[o][p] - '0');
        }
    }
}

TEST(order_table, permutations_and_position_disjoint) {
    for (const auto &order : kOrderTable) {
        std::set<int> seen(order.begin(), order.end());
        EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8}));
    }
    for (size_t p = 0; p < kBlockSize; p++) {
        for (int a = 0; a < kOrderCount; a++) {
            for (int b = a + 1; b < kOrderCount; b++) {
                EXPECT_NE(kOrderTable[a][p], kOrderTable[b][p]) << "position " << p;
            }
        }
    }
}

TEST(order_permute, examples_and_inverse) {
    std::vector<char> x{'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};
    std::span<const char> xs(x);
    EXPECT_EQ(order_permute(xs, 0), x);
    EXPECT_EQ(order_permute(xs, 2), (std::vector<char>{'c', 'h', 'd', 'f', 'b', 'g', 'a', 'e'}));
    EXPECT_EQ(order_permute(xs, 1), (std::vector<char>{'h', 'g', 'f', 'e', 'd', 'c', 'b', 'a'}));
    for (int o = 0; o < kOrderCount; o++) {
        auto y = order_permute(xs, o);
        EXPECT_EQ(order_unpermute(std::span<const char>(y), o), x);
    }
    std::vector<char> short_block{'a', 'b'};
    EXPECT_THROW(order_permute(std::span<const char>(short_block), 0), InvalidConfiguration);
    EXPECT_THROW(order_permute(xs, 4), InvalidConfiguration);
}

TEST(apply_channel, extremes) {
    DensityOperator s = circle_state(CircleIndex(1, 8));
    TrialStream rng(1, 2);
    for (int k = 0; k < 100; k++) {
        auto same = apply_channel(s, {0, 0}, rng);
        ASSERT_TRUE(same.has_value());
        EXPECT_LT(max_abs_diff(same->matrix(), s.matrix()), 1e-15);
        EXPECT_FALSE(apply_channel(s, {1, 0}, rng).has_value());
        auto mixed = apply_channel(s, {0, 1}, rng);
        ASSERT_TRUE(mixed.has_value());
        EXPECT_LT(max_abs_diff(mixed->matrix(), CMatrix::identity(2) * 0.5), 1e-15);
    }
    EXPECT_THROW((ChannelModel{1.5, 0}.validate()), InvalidConfiguration);
    EXPECT_THROW((ChannelModel{0, -0.1}.validate()), InvalidConfiguration);
}

TEST(apply_channel, loss_rate) {
    TrialStream rng(3, 3);
    DensityOperator s = circle_state_at(0);
    int lost = 0;
    const int n = 100000;
    for (int k = 0; k < n; k++) {
        lost += !apply_channel(s, {0.3, 0}, rng).has_value();
    }
    EXPECT_NEAR(lost / double(n), 0.3, 5 * std::sqrt(0.21 / n));
}

TEST(session_config, validation) {
    SessionConfig c;
    c.k = 0;
    EXPECT_THROW(c.validate(), InvalidConfiguration);
    c.k = 1;
    c.M = 6;
    EXPECT_THROW(c.validate(), InvalidConfiguration);
    c.M = 8;
    c.channel.loss_prob = 2;
    EXPECT_THROW(run_ake_session(c), InvalidConfiguration);
    EXPECT_EQ(parse_eve_strategy("opaque"), EveStrategy::opaque);
    EXPECT_THROW(parse_eve_strategy("mallory"), InvalidConfiguration);
}

TEST(run_ake_session, honest_noiseless_sessions_agree) {
    for (Cecc cecc : {Cecc::none, Cecc::hamming74}) {
        for (int M : {4, 8, 16}) {
            for (int k = 1; k <= 16; k++) {
                SessionTranscript tr = run_ake_session(config(k, M, EveStrategy::none, cecc, 100 + k));
                ASSERT_FALSE(tr.aborted);
                EXPECT_TRUE(tr.trial_check_passed);
                EXPECT_EQ(tr.final_key_adam.size(), 4u * k);
                EXPECT_EQ(tr.final_key_adam, tr.final_key_babe);
                EXPECT_EQ(tr.raw_bits_adam, tr.raw_bits_babe);
                EXPECT_EQ(tr.raw_bits_babe.size(), 8u * k);
                EXPECT_EQ(tr.eve_report.total_errors, 0u);
                EXPECT_EQ(tr.cecc_corrections, 0u);
                for (int o : tr.orders_used) {
                    EXPECT_GE(o, 0);
                    EXPECT_LT(o, kOrderCount);
                }
                if (cecc == Cecc::none) {
                    EXPECT_EQ(tr.orders_used.size(), static_cast<size_t>(k));
                    EXPECT_EQ(tr.order_bits_expended, 2u * k);
                    EXPECT_EQ(tr.final_key_adam.size() - tr.order_bits_expended, 2u * k);
                }
            }
        }
    }
}

TEST(run_ake_session, deterministic_transcripts) {
    for (EveStrategy eve : {EveStrategy::none, EveStrategy::impersonation, EveStrategy::opaque,
                            EveStrategy::translucent}) {
        SessionConfig c = config(4, 8, eve, Cecc::hamming74, 7);
        c.channel = {0.1, 0.02};
        std::string a = to_json(run_ake_session(c)).dump();
        std::string b = to_json(run_ake_session(c)).dump();
        EXPECT_EQ(a, b);
        c.rng_seed = 8;
        EXPECT_NE(a, to_json(run_ake_session(c)).dump());
    }
}

TEST(run_ake_session, impersonation_scrambles_wrong_blocks) {
    auto runs = run_ake_sessions(config(64, 8, EveStrategy::impersonation, Cecc::none, 5), 40);
    Pooled p = pool(runs);
    double rate = double(p.wrong_e) / p.wrong_q;
    EXPECT_NEAR(rate, 0.5, 0.01);
    // Eve knows her own states, so right-order blocks pass untouched.
    EXPECT_EQ(p.right_e, 0u);
    EXPECT_NEAR(double(p.right_q) / p.total_q, 0.25, 0.02);
    EXPECT_EQ(p.passed, 0u);
    for (const auto &tr : runs) {
        EXPECT_NE(tr.final_key_adam, tr.final_key_babe);
    }
}

TEST(run_ake_session, opaque_error_rate) {
    Pooled p = pool(run_ake_sessions(config(64, 8, EveStrategy::opaque, Cecc::none, 9), 20));
    EXPECT_NEAR(double(p.total_e) / p.total_q, 0.25, 0.01);
    EXPECT_EQ(p.passed, 0u);
}

TEST(run_ake_session, translucent_eve_is_silent) {
    Pooled p = pool(run_ake_sessions(config(64, 8, EveStrategy::translucent, Cecc::none, 13), 20));
    EXPECT_EQ(p.total_e, 0u);
    EXPECT_EQ(p.passed, p.sessions);
    double right = double(p.eve_right_ok) / p.eve_right;
    double se = std::sqrt(0.75 * 0.25 / p.eve_right);
    EXPECT_NEAR(right, 0.75, 4 * se);
    double wrong = double(p.eve_all_ok - p.eve_right_ok) / (p.eve_all - p.eve_right);
    EXPECT_NEAR(wrong, 0.5, 0.03);
}

TEST(run_ake_session, full_depolarization_randomizes_bits) {
    SessionConfig c = config(64, 8, EveStrategy::none, Cecc::none, 21);
    c.channel.depolarize_prob = 1;
    Pooled p = pool(run_ake_sessions(c, 200));
    ASSERT_GT(p.total_q, 100000u);
    EXPECT_NEAR(double(p.total_e) / p.total_q, 0.5, 0.005);
}

TEST(run_ake_session, light_depolarization_with_hamming) {
    const double d = 0.01;
    SessionConfig c = config(8, 8, EveStrategy::none, Cecc::hamming74, 33);
    c.channel.depolarize_prob = d;
    Pooled p = pool(run_ake_sessions(c, 1000));
    double rate = double(p.passed) / p.sessions;
    EXPECT_GE(rate, 0.99);

    // A session fails when some 7-bit codeword takes two or more flips; each
    // depolarized qubit flips with probability 1/2.
    double q = d / 2;
    double block_ok = std::pow(1 - q, 7) + 7 * q * std::pow(1 - q, 6);
    double expected = std::pow(block_ok, 14);
    EXPECT_NEAR(rate, expected, 4 * std::sqrt(expected * (1 - expected) / p.sessions));
}

TEST(run_ake_session, lossy_channel_uses_acknowledged_qubits) {
    SessionConfig c = config(8, 8, EveStrategy::none, Cecc::hamming74, 3);
    c.channel.loss_prob = 0.5;
    SessionTranscript tr = run_ake_session(c);
    ASSERT_FALSE(tr.aborted);
    EXPECT_TRUE(tr.trial_check_passed);
    size_t acked = 0;
    for (auto a : tr.acknowledged) {
        acked += a;
    }
    EXPECT_GE(acked, tr.coded_bits_babe.size());
    EXPECT_LT(acked, tr.states_sent.size());
}

TEST(run_ake_session, total_loss_aborts) {
    SessionConfig c = config(4, 8, EveStrategy::none, Cecc::hamming74, 1);
    c.channel.loss_prob = 1;
    SessionTranscript tr = run_ake_session(c);
    EXPECT_TRUE(tr.aborted);
    EXPECT_FALSE(tr.trial_check_passed);
    EXPECT_FALSE(tr.abort_reason.empty());
    EXPECT_TRUE(tr.final_key_adam.empty());
}

TEST(trial_encryption_tag, keyed_by_key) {
    Bits a = bits_from_string("1011001110001111");
    Bits b = a;
    b[5] ^= 1;
    EXPECT_EQ(trial_encryption_tag(a, 4), trial_encryption_tag(a, 4));
    EXPECT_NE(trial_encryption_tag(a, 4), trial_encryption_tag(b, 4));
    EXPECT_EQ(trial_encryption_tag(Bits(16, 0), 4), kTrialPlaintext);
}

TEST(transcript_json, config_round_trip) {
    SessionConfig c = config(5, 16, EveStrategy::translucent, Cecc::none, 0xfedcba9876543210ull);
    c.channel = {0.125, 0.25};
    c.margin = 0.5;
    SessionConfig back = session_config_from_json(to_json(c));
    EXPECT_EQ(to_json(back).dump(), to_json(c).dump());
    EXPECT_EQ(back.rng_seed, c.rng_seed);
}

TEST(transcript_json, bad_keys_are_named) {
    try {
        session_config_from_json(nlohmann::json{{"k", 2}, {"colour", "red"}});
        FAIL();
    } catch (const InvalidConfiguration &e) {
        EXPECT_NE(std::string(e.what()).find("'colour'"), std::string::npos);
    }
    try {
        session_config_from_json(nlohmann::json{{"M", "eight"}});
        FAIL();
    } catch (const InvalidConfiguration &e) {
        EXPECT_NE(std::string(e.what()).find("'M'"), std::string::npos);
    }
}

TEST(transcript_json, fields) {
    SessionTranscript tr = run_ake_session(config(2, 8, EveStrategy::impersonation, Cecc::hamming74, 2));
    nlohmann::json j = to_json(tr);
    for (const char *key : {"states_sent", "orders_used", "raw_bits_babe", "raw_bits_adam", "final_key_adam",
                            "final_key_babe", "trial_check_passed", "eve_report", "config"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["final_key_babe"].get<std::string>(), bits_to_string(tr.final_key_babe));
    EXPECT_EQ(j["eve_report"]["strategy"], "impersonation");
    EXPECT_EQ(nlohmann::json::parse(j.dump()).dump(2), j.dump(2));
}
