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

#include "akq/json_io.hpp"

namespace akq {

using nlohmann::json;

json to_json(const SessionConfig &cfg) {
    return {
        {"k", cfg.k},
        {"M", cfg.M},
        {"loss_prob", cfg.channel.loss_prob},
        {"depolarize_prob", cfg.channel.depolarize_prob},
        {"cecc", to_string(cfg.cecc)},
        {"pa_hash_seed", cfg.pa_hash_seed},
        {"rng_seed", cfg.rng_seed},
        {"eve_strategy", to_string(cfg.eve_strategy)},
        {"margin", cfg.margin},
    };
}

json to_json(const SessionEveReport &rep) {
    return {
        {"strategy", to_string(rep.strategy)},
        {"order_guess_correct", bits_to_string(rep.order_guess_correct)},
        {"total_qubits", rep.total_qubits},
        {"total_errors", rep.total_errors},
        {"wrong_block_qubits", rep.wrong_block_qubits},
        {"wrong_block_errors", rep.wrong_block_errors},
        {"right_block_qubits", rep.right_block_qubits},
        {"right_block_errors", rep.right_block_errors},
        {"eve_bits_attempted", rep.eve_bits_attempted},
        {"eve_bits_correct", rep.eve_bits_correct},
        {"eve_right_block_attempted", rep.eve_right_block_attempted},
        {"eve_right_block_correct", rep.eve_right_block_correct},
    };
}

json to_json(const SessionTranscript &tr) {
    return {
        {"config", to_json(tr.config)},
        {"aborted", tr.aborted},
        {"abort_reason", tr.abort_reason},
        {"states_sent", tr.states_sent},
        {"acknowledged", bits_to_string(tr.acknowledged)},
        {"orders_used", tr.orders_used},
        {"order_bits_expended", tr.order_bits_expended},
        {"raw_bits_babe", bits_to_string(tr.raw_bits_babe)},
        {"raw_bits_adam", bits_to_string(tr.raw_bits_adam)},
        {"coded_bits_babe", bits_to_string(tr.coded_bits_babe)},
        {"coded_bits_adam", bits_to_string(tr.coded_bits_adam)},
        {"cecc_corrections", tr.cecc_corrections},
        {"final_key_adam", bits_to_string(tr.final_key_adam)},
        {"final_key_babe", bits_to_string(tr.final_key_babe)},
        {"trial_tag_babe", tr.trial_tag_babe},
        {"trial_tag_adam", tr.trial_tag_adam},
        {"trial_check_passed", tr.trial_check_passed},
        {"eve_report", to_json(tr.eve_report)},
    };
}

json to_json(const AttackReport &rep) {
    return {
        {"strategy", rep.strategy},
        {"per_qubit_success", rep.per_qubit_success},
        {"deterministic_bits", rep.deterministic_bits},
        {"shannon_bits", rep.shannon_bits},
        {"order_guess_distribution", rep.order_guess_distribution},
    };
}

namespace {

template <class T>
T read_key(const json &j, const std::string &key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &) {
        throw InvalidConfiguration("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

SessionConfig session_config_from_json(const json &j, SessionConfig cfg) {
    if (!j.is_object()) {
        throw InvalidConfiguration("session config must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key == "k") {
            cfg.k = read_key<int>(j, key);
        } else if (key == "M") {
            cfg.M = read_key<int>(j, key);
        } else if (key == "loss_prob") {
            cfg.channel.loss_prob = read_key<double>(j, key);
        } else if (key == "depolarize_prob") {
            cfg.channel.depolarize_prob = read_key<double>(j, key);
        } else if (key == "cecc") {
            cfg.cecc = parse_cecc(read_key<std::string>(j, key));
        } else if (key == "pa_hash_seed") {
            cfg.pa_hash_seed = read_key<uint64_t>(j, key);
        } else if (key == "rng_seed") {
            cfg.rng_seed = read_key<uint64_t>(j, key);
        } else if (key == "eve_strategy") {
            cfg.eve_strategy = parse_eve_strategy(read_key<std::string>(j, key));
        } else if (key == "margin") {
            cfg.margin = read_key<double>(j, key);
        } else {
            throw InvalidConfiguration("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace akq
