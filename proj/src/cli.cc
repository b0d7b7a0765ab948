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

#include "akq/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "akq/adversary.hpp"
#include "akq/ake.hpp"
#include "akq/aki.hpp"
#include "akq/coherent.hpp"
#include "akq/detection.hpp"
#include "akq/errors.hpp"
#include "akq/json_io.hpp"

namespace akq {

using nlohmann::json;

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    json parameters = json::object();
    /// Extra top-level members of the JSON document.
    json extra = json::object();
};

std::string csv_cell(const json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::string render_csv(const Table &t) {
    std::ostringstream os;
    for (size_t c = 0; c < t.columns.size(); c++) {
        os << (c ? "," : "") << t.columns[c];
    }
    os << "\n";
    for (const auto &row : t.rows) {
        for (size_t c = 0; c < row.size(); c++) {
            os << (c ? "," : "") << csv_cell(row[c]);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const std::string &command, const Table &t) {
    json doc = t.extra;
    doc["command"] = command;
    doc["parameters"] = t.parameters;
    doc["columns"] = t.columns;
    json rows = json::array();
    for (const auto &row : t.rows) {
        json r = json::object();
        for (size_t c = 0; c < row.size(); c++) {
            r[t.columns[c]] = row[c];
        }
        rows.push_back(r);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

/// Applies config-file values to option variables unless the matching flag
/// was given on the command line, and remembers which keys were consumed.
class ConfigBinder {
   public:
    explicit ConfigBinder(const json *cfg) : cfg_(cfg) {}

    template <class T>
    void bind(const std::string &key, const CLI::Option *flag, T &var) {
        if (cfg_ == nullptr || !cfg_->contains(key)) {
            return;
        }
        used_.insert(key);
        T value;
        try {
            value = cfg_->at(key).get<T>();
        } catch (const json::exception &) {
            throw InvalidConfiguration("config key '" + key + "' has the wrong type");
        }
        if (flag->count() == 0) {
            var = value;
        }
    }

    void reject_unused() const {
        if (cfg_ == nullptr) {
            return;
        }
        for (const auto &[key, value] : cfg_->items()) {
            if (!used_.count(key)) {
                throw InvalidConfiguration("unknown config key '" + key + "'");
            }
        }
    }

   private:
    const json *cfg_;
    std::set<std::string> used_;
};

struct Common {
    std::string config_path;
    uint64_t seed = 1;
    uint64_t trials = 10000;
    std::string out_path;
    std::string format = "csv";
    CLI::Option *seed_opt = nullptr;
    CLI::Option *trials_opt = nullptr;
    CLI::Option *out_opt = nullptr;
    CLI::Option *format_opt = nullptr;
};

json est_json(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

// detect

struct DetectArgs {
    std::vector<int> Ms{4, 8, 16, 32};
    bool six_state = true;
    CLI::Option *Ms_opt = nullptr;
    CLI::Option *six_opt = nullptr;
};

Table run_detect(const DetectArgs &a, const Common &c) {
    Table t;
    t.columns = {"ensemble", "M", "pc", "pa", "certified_optimal", "random_basis_pa", "random_basis_stderr", "trials",
                 "seed"};
    t.parameters = {{"M", a.Ms}, {"six_state", a.six_state}, {"trials", c.trials}, {"seed", c.seed}};
    for (int M : a.Ms) {
        DetectionReport rep = analyze_ensemble(circle_ensemble(M));
        Estimate rb = random_basis_strategy(M, c.seed, c.trials);
        t.rows.push_back({"circle", M, rep.pc, rep.pa, rep.certified_optimal, rb.mean, est_json(rb.std_error),
                          c.trials, c.seed});
    }
    if (a.six_state) {
        DetectionReport rep = analyze_ensemble(six_state_ensemble());
        t.rows.push_back({"six_state", 6, rep.pc, rep.pa, rep.certified_optimal, nullptr, nullptr, c.trials, c.seed});
    }
    return t;
}

// attack

struct AttackArgs {
    std::string strategy = "impersonation";
    int k = 4;
    int M = 8;
    double pa = -1;
    CLI::Option *strategy_opt = nullptr;
    CLI::Option *k_opt = nullptr;
    CLI::Option *M_opt = nullptr;
    CLI::Option *pa_opt = nullptr;
};

Table run_attack(const AttackArgs &a, const Common &c) {
    Table t;
    t.parameters = {{"strategy", a.strategy}, {"k", a.k}, {"M", a.M}, {"trials", c.trials}, {"seed", c.seed}};
    AttackReport report;
    if (a.strategy == "impersonation") {
        if (a.k < 1) {
            throw InvalidConfiguration("config key 'k' must be >= 1");
        }
        report = impersonation_report(a.k);
        t.columns = {"strategy", "k", "q", "probability", "simulated", "stderr", "trials", "seed"};
        int k = a.k;
        for (int q = 0; q <= k; q++) {
            // Empirical frequency of exactly q correct uniform order guesses.
            Estimate e = monte_carlo(c.seed, c.trials, [k, q](TrialStream &rng) {
                int right = 0;
                for (int b = 0; b < k; b++) {
                    right += rng.below(kOrderCount) == rng.below(kOrderCount);
                }
                return right == q ? 1.0 : 0.0;
            });
            t.rows.push_back({"impersonation", k, q, report.order_guess_distribution[q], e.mean,
                              est_json(e.std_error), c.trials, c.seed});
        }
    } else if (a.strategy == "opaque") {
        require_circle_size(a.M);
        report = opaque_report(a.M);
        Estimate seq = sequential_strategy_pc(a.M, c.trials, c.seed);
        t.columns = {"strategy", "M", "helstrom_pc", "sequential_pc", "stderr", "trials", "seed"};
        t.rows.push_back({"opaque", a.M, opaque_bound(a.M), seq.mean, est_json(seq.std_error), c.trials, c.seed});
    } else if (a.strategy == "translucent") {
        require_circle_size(a.M);
        double pa = a.pa;
        if (pa < 0) {
            pa = analyze_ensemble(circle_ensemble(a.M)).pa;
        }
        t.parameters["pa"] = pa;
        report = translucent_report(a.k, pa);
        t.columns = {"strategy", "k", "M", "pa", "per_qubit_success", "deterministic_bits", "shannon_bits"};
        t.rows.push_back({"translucent", a.k, a.M, pa, report.per_qubit_success, report.deterministic_bits,
                          report.shannon_bits});
    } else {
        throw InvalidConfiguration("config key 'strategy' must be impersonation, opaque or translucent, got '" +
                                   a.strategy + "'");
    }
    t.extra["report"] = to_json(report);
    return t;
}

// ake

struct AkeArgs {
    int k = 4;
    int M = 8;
    std::string eve = "none";
    double loss = 0;
    double depolarize = 0;
    std::string cecc = "hamming74";
    uint64_t pa_seed = 0;
    double margin = 0.25;
    uint64_t sessions = 1;
    CLI::Option *k_opt = nullptr;
    CLI::Option *M_opt = nullptr;
    CLI::Option *eve_opt = nullptr;
    CLI::Option *loss_opt = nullptr;
    CLI::Option *depolarize_opt = nullptr;
    CLI::Option *cecc_opt = nullptr;
    CLI::Option *pa_seed_opt = nullptr;
    CLI::Option *margin_opt = nullptr;
    CLI::Option *sessions_opt = nullptr;
};

Table run_ake(const AkeArgs &a, const Common &c, bool &any_aborted) {
    SessionConfig cfg;
    cfg.k = a.k;
    cfg.M = a.M;
    cfg.eve_strategy = parse_eve_strategy(a.eve);
    cfg.channel.loss_prob = a.loss;
    cfg.channel.depolarize_prob = a.depolarize;
    cfg.cecc = parse_cecc(a.cecc);
    cfg.pa_hash_seed = a.pa_seed;
    cfg.margin = a.margin;
    cfg.rng_seed = c.seed;
    cfg.validate();
    if (a.sessions < 1) {
        throw InvalidConfiguration("config key 'sessions' must be >= 1");
    }

    std::vector<SessionTranscript> runs;
    if (a.sessions == 1) {
        runs.push_back(run_ake_session(cfg));
    } else {
        runs = run_ake_sessions(cfg, a.sessions);
    }

    Table t;
    t.parameters = to_json(cfg);
    t.parameters["sessions"] = a.sessions;
    t.columns = {"session", "seed",         "k",          "M",           "eve",
                 "aborted", "key_bits",     "keys_equal", "trial_check", "qubits",
                 "errors",  "error_rate",   "cecc_corrections"};
    json transcripts = json::array();
    any_aborted = false;
    for (size_t i = 0; i < runs.size(); i++) {
        const SessionTranscript &tr = runs[i];
        const SessionEveReport &ev = tr.eve_report;
        any_aborted = any_aborted || tr.aborted;
        json rate = ev.total_qubits ? json(static_cast<double>(ev.total_errors) / ev.total_qubits) : json(nullptr);
        t.rows.push_back({i, tr.config.rng_seed, cfg.k, cfg.M, to_string(cfg.eve_strategy), tr.aborted,
                          tr.final_key_babe.size(), !tr.aborted && tr.final_key_adam == tr.final_key_babe,
                          tr.trial_check_passed, ev.total_qubits, ev.total_errors, rate, tr.cecc_corrections});
        transcripts.push_back(to_json(tr));
    }
    t.extra["transcripts"] = transcripts;
    return t;
}

// aki

struct AkiArgs {
    std::vector<int> ms{1, 2, 4, 8};
    int M = 4;
    CLI::Option *ms_opt = nullptr;
    CLI::Option *M_opt = nullptr;
};

Table run_aki(const AkiArgs &a, const Common &c) {
    require_circle_size(a.M);
    double pa = analyze_ensemble(circle_ensemble(a.M)).pa;
    Table t;
    t.parameters = {{"m", a.ms}, {"M", a.M}, {"trials", c.trials}, {"seed", c.seed}};
    t.columns = {"m", "M", "estimator", "acceptance", "predicted", "stderr", "trials", "seed"};
    for (int m : a.ms) {
        Estimate h = aki_honest(m, a.M, c.trials, c.seed);
        t.rows.push_back({m, a.M, "honest", h.mean, 1.0, est_json(h.std_error), c.trials, c.seed});
        Estimate e = aki_impersonation(m, a.M, c.trials, c.seed);
        t.rows.push_back(
            {m, a.M, "impersonation", e.mean, std::pow(pa, m), est_json(e.std_error), c.trials, c.seed});
    }
    return t;
}

// coherent

struct CoherentArgs {
    std::vector<double> alphas{5, 10, 20};
    std::vector<int> Ms{4096};
    std::string estimator = "both";
    size_t truncation = 0;
    CLI::Option *alphas_opt = nullptr;
    CLI::Option *Ms_opt = nullptr;
    CLI::Option *estimator_opt = nullptr;
    CLI::Option *truncation_opt = nullptr;
};

Table run_coherent(const CoherentArgs &a, const Common &c) {
    bool het = a.estimator == "heterodyne" || a.estimator == "both";
    bool can = a.estimator == "canonical" || a.estimator == "both";
    if (!het && !can) {
        throw InvalidConfiguration("config key 'estimator' must be heterodyne, canonical or both, got '" +
                                   a.estimator + "'");
    }
    Table t;
    t.parameters = {{"alpha0", a.alphas}, {"M", a.Ms},           {"estimator", a.estimator},
                    {"trials", c.trials}, {"seed", c.seed}, {"truncation", a.truncation}};
    t.columns = {"alpha0", "M", "estimator", "pa", "stderr", "trials", "seed"};
    for (double alpha : a.alphas) {
        std::optional<PhaseDistribution> dist;
        if (can) {
            size_t n = a.truncation ? a.truncation : min_truncation(alpha);
            dist.emplace(alpha, n);
        }
        for (int M : a.Ms) {
            if (het) {
                Estimate e = heterodyne_pa(alpha, M, c.trials, c.seed);
                t.rows.push_back({alpha, M, "heterodyne", e.mean, est_json(e.std_error), c.trials, c.seed});
            }
            if (can) {
                Estimate e = canonical_phase_pa(*dist, M, c.trials, c.seed);
                t.rows.push_back({alpha, M, "canonical", e.mean, est_json(e.std_error), c.trials, c.seed});
            }
        }
    }
    return t;
}

json load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfiguration("cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InvalidConfiguration("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw InvalidConfiguration("config file '" + path + "' must hold a JSON object");
    }
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Anonymous-key quantum cryptography experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    app.add_option("--config", c.config_path, "JSON file of option values; flags override it");
    c.seed_opt = app.add_option("--seed", c.seed, "Master seed");
    c.trials_opt = app.add_option("--trials", c.trials, "Monte Carlo trials per row");
    c.out_opt = app.add_option("--out", c.out_path, "Output file (default stdout)");
    c.format_opt = app.add_option("--format", c.format, "csv or json");

    DetectArgs det;
    auto *detect = app.add_subcommand("detect", "SRM identification and acceptance tables over M");
    det.Ms_opt = detect->add_option("--M", det.Ms, "Circle sizes")->delimiter(',');
    det.six_opt = detect->add_option("--six-state", det.six_state, "Append the six-state ensemble row");

    AttackArgs att;
    auto *attack = app.add_subcommand("attack", "Eavesdropping attack reports");
    att.strategy_opt = attack->add_option("--strategy", att.strategy, "impersonation, opaque or translucent");
    att.k_opt = attack->add_option("--k", att.k, "Number of 8-bit blocks");
    att.M_opt = attack->add_option("--M", att.M, "Circle size");
    att.pa_opt = attack->add_option("--pa", att.pa, "Per-bit acceptance for translucent (default SRM value)");

    AkeArgs ake;
    auto *ake_cmd = app.add_subcommand("ake", "Full key-distribution sessions");
    ake.k_opt = ake_cmd->add_option("--k", ake.k, "Number of 8-bit blocks");
    ake.M_opt = ake_cmd->add_option("--M", ake.M, "Circle size");
    ake.eve_opt = ake_cmd->add_option("--eve", ake.eve, "none, impersonation, opaque or translucent");
    ake.loss_opt = ake_cmd->add_option("--loss", ake.loss, "Per-qubit loss probability");
    ake.depolarize_opt = ake_cmd->add_option("--depolarize", ake.depolarize, "Per-qubit depolarization probability");
    ake.cecc_opt = ake_cmd->add_option("--cecc", ake.cecc, "none or hamming74");
    ake.pa_seed_opt = ake_cmd->add_option("--pa-seed", ake.pa_seed, "Public privacy-amplification hash seed");
    ake.margin_opt = ake_cmd->add_option("--margin", ake.margin, "Extra fraction of qubits sent");
    ake.sessions_opt = ake_cmd->add_option("--sessions", ake.sessions, "Number of sessions");

    AkiArgs aki;
    auto *aki_cmd = app.add_subcommand("aki", "Identification acceptance curves over m");
    aki.ms_opt = aki_cmd->add_option("--m", aki.ms, "Key lengths in qubits")->delimiter(',');
    aki.M_opt = aki_cmd->add_option("--M", aki.M, "Circle size");

    CoherentArgs coh;
    auto *coherent = app.add_subcommand("coherent", "Coherent-state acceptance sweeps");
    coh.alphas_opt = coherent->add_option("--alpha", coh.alphas, "Amplitudes alpha0")->delimiter(',');
    coh.Ms_opt = coherent->add_option("--M", coh.Ms, "Phase grid sizes")->delimiter(',');
    coh.estimator_opt = coherent->add_option("--estimator", coh.estimator, "heterodyne, canonical or both");
    coh.truncation_opt = coherent->add_option("--truncation", coh.truncation, "Fock cutoff (0 picks the minimum)");

    std::vector<std::string> argv_store;
    argv_store.push_back("akq_cli");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        std::optional<json> cfg;
        if (!c.config_path.empty()) {
            cfg = load_config(c.config_path);
        }
        ConfigBinder b(cfg ? &*cfg : nullptr);
        b.bind("seed", c.seed_opt, c.seed);
        b.bind("trials", c.trials_opt, c.trials);
        b.bind("out", c.out_opt, c.out_path);
        b.bind("format", c.format_opt, c.format);

        std::string command;
        Table table;
        bool aborted = false;
        if (detect->parsed()) {
            command = "detect";
            b.bind("M", det.Ms_opt, det.Ms);
            b.bind("six_state", det.six_opt, det.six_state);
        } else if (attack->parsed()) {
            command = "attack";
            b.bind("strategy", att.strategy_opt, att.strategy);
            b.bind("k", att.k_opt, att.k);
            b.bind("M", att.M_opt, att.M);
            b.bind("pa", att.pa_opt, att.pa);
        } else if (ake_cmd->parsed()) {
            command = "ake";
            b.bind("k", ake.k_opt, ake.k);
            b.bind("M", ake.M_opt, ake.M);
            b.bind("eve_strategy", ake.eve_opt, ake.eve);
            b.bind("loss_prob", ake.loss_opt, ake.loss);
            b.bind("depolarize_prob", ake.depolarize_opt, ake.depolarize);
            b.bind("cecc", ake.cecc_opt, ake.cecc);
            b.bind("pa_hash_seed", ake.pa_seed_opt, ake.pa_seed);
            b.bind("margin", ake.margin_opt, ake.margin);
            b.bind("sessions", ake.sessions_opt, ake.sessions);
        } else if (aki_cmd->parsed()) {
            command = "aki";
            b.bind("m", aki.ms_opt, aki.ms);
            b.bind("M", aki.M_opt, aki.M);
        } else {
            command = "coherent";
            b.bind("alpha0", coh.alphas_opt, coh.alphas);
            b.bind("M", coh.Ms_opt, coh.Ms);
            b.bind("estimator", coh.estimator_opt, coh.estimator);
            b.bind("truncation", coh.truncation_opt, coh.truncation);
        }
        b.reject_unused();

        if (c.trials < 1) {
            throw InvalidConfiguration("config key 'trials' must be >= 1");
        }
        if (c.format != "csv" && c.format != "json") {
            throw InvalidConfiguration("config key 'format' must be csv or json, got '" + c.format + "'");
        }

        if (command == "detect") {
            table = run_detect(det, c);
        } else if (command == "attack") {
            table = run_attack(att, c);
        } else if (command == "ake") {
            table = run_ake(ake, c, aborted);
        } else if (command == "aki") {
            table = run_aki(aki, c);
        } else {
            table = run_coherent(coh, c);
        }

        std::string text = c.format == "json" ? render_json(command, table) : render_csv(table);
        if (c.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(c.out_path, std::ios::binary);
            if (!f) {
                throw InvalidConfiguration("cannot write output file '" + c.out_path + "'");
            }
            f << text;
        }
        if (aborted) {
            err << "session aborted\n";
            return kExitSessionAbort;
        }
        return kExitOk;
    } catch (const AkqError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}

int run_cli(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace akq
