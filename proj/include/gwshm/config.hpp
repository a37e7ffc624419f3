#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwshm/dataset.hpp"
#include "gwshm/errors.hpp"
#include "gwshm/excitation.hpp"
#include "gwshm/features.hpp"
#include "gwshm/models/model.hpp"
#include "gwshm/noise.hpp"
#include "gwshm/scenario.hpp"
#include "gwshm/wavelet.hpp"

namespace gwshm {

using ordered_json = nlohmann::ordered_json;

struct SweepConfig {
    int levels = 9;
    double t_min = 0.2;
    double t_max = 1.8;
    int trials_per_level = 1;

    void validate() const {
        if (levels < 1) throw ConfigError("sweep.levels must be >= 1");
        if (!(t_min > 0.0 && t_min <= t_max))
            throw ConfigError("sweep severity range must satisfy 0 < t_min <= t_max");
        if (trials_per_level < 1) throw ConfigError("sweep.trials_per_level must be >= 1");
    }
};

/// Everything a pipeline run needs; every section validates against its
/// module's invariants and unknown keys are rejected during parsing.
struct PipelineConfig {
    std::uint64_t master_seed = 42;
    int trials_per_class = 20;
    double session_jitter = 0.30;  // relative std of the shared per-trial coupling
    double copy_jitter = 0.03;     // relative std of the per-copy gain drift
    double trigger_jitter_s = 5e-8;  // std of the per-measurement time-base offset
    FeatureBank bank = FeatureBank::BaselineReferenced;
    ExcitationConfig excitation{1e5, 5, 10.0, 1e7, 2e-4};  // synthetic-rate default
    std::vector<PropagationScenario> scenarios = default_scenarios();
    NoiseConfig noise;
    WaveletSpec wavelet;
    double selection_threshold = 0.95;
    std::vector<ModelVariant> variants{kAllVariants.begin(), kAllVariants.end()};
    Hyperparams hyper;
    double train_fraction = 0.75;
    bool stratified = true;
    int n_trials = 10;
    int importance_repeats = 20;
    SweepConfig sweep;
    std::string out_dir = "out";
    std::string dataset_dir;  // reuse an existing dataset when non-empty

    void validate() const {
        excitation.validate();
        for (const auto& scn : scenarios) scn.validate();
        noise.validate();
        wavelet.validate();
        hyper.validate();
        sweep.validate();
        if (trials_per_class < 1) throw ConfigError("trials_per_class must be >= 1");
        if (!(session_jitter >= 0.0)) throw ConfigError("session_jitter must be >= 0");
        if (!(copy_jitter >= 0.0)) throw ConfigError("copy_jitter must be >= 0");
        if (!(trigger_jitter_s >= 0.0)) throw ConfigError("trigger_jitter_s must be >= 0");
        if (!(selection_threshold > 0.0 && selection_threshold <= 1.0))
            throw ConfigError("selection.threshold must be in (0, 1]");
        if (!(train_fraction > 0.0 && train_fraction < 1.0))
            throw ConfigError("evaluation.train_fraction must be in (0, 1)");
        if (n_trials < 1) throw ConfigError("evaluation.n_trials must be >= 1");
        if (importance_repeats < 1) throw ConfigError("evaluation.importance_repeats must be >= 1");
        if (variants.empty()) throw ConfigError("models.variants must be non-empty");
    }
};

namespace config_detail {

inline void reject_unknown(const ordered_json& j, const std::string& section,
                           const std::set<std::string>& allowed) {
    if (!j.is_object())
        throw ConfigError("config section '" + section + "' must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw ConfigError("config: unknown key '" + section +
                              (section.empty() ? "" : ".") + key + "'");
}

template <typename T>
void read_into(const ordered_json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const ordered_json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

inline PropagationScenario parse_scenario(const ordered_json& j, DamageClass cls,
                                          const PropagationScenario& defaults) {
    reject_unknown(j, std::string("scenarios.") + class_name(cls),
                   {"gain", "delay_s", "broadening", "echo_gain", "echo_delay_s",
                    "jitter_gain", "jitter_delay", "jitter_broadening", "jitter_echo",
                    "jitter_corr", "trial_base"});
    PropagationScenario s = defaults;
    s.damage_class = cls;
    read_into(j, "gain", s.gain);
    read_into(j, "delay_s", s.delay_s);
    read_into(j, "broadening", s.broadening);
    read_into(j, "echo_gain", s.echo_gain);
    read_into(j, "echo_delay_s", s.echo_delay_s);
    read_into(j, "jitter_gain", s.jitter_gain);
    read_into(j, "jitter_delay", s.jitter_delay);
    read_into(j, "jitter_broadening", s.jitter_broadening);
    read_into(j, "jitter_echo", s.jitter_echo);
    read_into(j, "jitter_corr", s.jitter_corr);
    read_into(j, "trial_base", s.trial_base);
    return s;
}

}  // namespace config_detail

inline PipelineConfig parse_config(const ordered_json& j) {
    using config_detail::read_into;
    using config_detail::reject_unknown;

    reject_unknown(j, "",
                   {"master_seed", "trials_per_class", "session_jitter", "copy_jitter",
                    "trigger_jitter_s", "bank", "excitation", "scenarios", "noise",
                    "wavelet", "selection", "models", "evaluation", "sweep", "io"});
    PipelineConfig cfg;
    read_into(j, "master_seed", cfg.master_seed);
    read_into(j, "trials_per_class", cfg.trials_per_class);
    read_into(j, "session_jitter", cfg.session_jitter);
    read_into(j, "copy_jitter", cfg.copy_jitter);
    read_into(j, "trigger_jitter_s", cfg.trigger_jitter_s);
    if (j.contains("bank")) cfg.bank = bank_from_name(j.at("bank").get<std::string>());

    if (j.contains("excitation")) {
        const auto& je = j.at("excitation");
        reject_unknown(je, "excitation",
                       {"carrier_hz", "n_cycles", "amplitude", "sample_rate_hz",
                        "record_seconds"});
        read_into(je, "carrier_hz", cfg.excitation.carrier_hz);
        read_into(je, "n_cycles", cfg.excitation.n_cycles);
        read_into(je, "amplitude", cfg.excitation.amplitude);
        read_into(je, "sample_rate_hz", cfg.excitation.sample_rate_hz);
        read_into(je, "record_seconds", cfg.excitation.record_seconds);
    }

    if (j.contains("scenarios")) {
        const auto& js = j.at("scenarios");
        std::set<std::string> class_names;
        for (DamageClass c : kAllClasses) class_names.insert(class_name(c));
        reject_unknown(js, "scenarios", class_names);
        for (std::size_t i = 0; i < cfg.scenarios.size(); ++i) {
            const char* name = class_name(cfg.scenarios[i].damage_class);
            if (js.contains(name))
                cfg.scenarios[i] = config_detail::parse_scenario(
                    js.at(name), cfg.scenarios[i].damage_class, cfg.scenarios[i]);
        }
    }

    if (j.contains("noise")) {
        const auto& jn = j.at("noise");
        reject_unknown(jn, "noise", {"beta_n", "copies", "seed"});
        read_into(jn, "beta_n", cfg.noise.beta_n);
        read_into(jn, "copies", cfg.noise.copies);
        read_into(jn, "seed", cfg.noise.seed);
    }

    if (j.contains("wavelet")) {
        const auto& jw = j.at("wavelet");
        reject_unknown(jw, "wavelet", {"order", "levels", "selected_level", "boundary"});
        read_into(jw, "order", cfg.wavelet.order);
        read_into(jw, "levels", cfg.wavelet.levels);
        read_into(jw, "selected_level", cfg.wavelet.selected_level);
        if (jw.contains("boundary"))
            cfg.wavelet.boundary = boundary_from_name(jw.at("boundary").get<std::string>());
    }

    if (j.contains("selection")) {
        const auto& jsel = j.at("selection");
        reject_unknown(jsel, "selection", {"threshold"});
        read_into(jsel, "threshold", cfg.selection_threshold);
    }

    if (j.contains("models")) {
        const auto& jm = j.at("models");
        reject_unknown(jm, "models", {"variants", "hyper"});
        if (jm.contains("variants")) {
            cfg.variants.clear();
            for (const auto& name : jm.at("variants"))
                cfg.variants.push_back(variant_from_name(name.get<std::string>()));
        }
        if (jm.contains("hyper")) {
            const auto& jh = jm.at("hyper");
            reject_unknown(jh, "models.hyper",
                           {"logistic_lr", "logistic_max_iter", "logistic_tol",
                            "logistic_l2", "svm_c", "svm_iters", "nb_var_floor_rel",
                            "tree_max_depth", "tree_min_leaf", "forest_trees",
                            "forest_bootstrap", "forest_mtry"});
            read_into(jh, "logistic_lr", cfg.hyper.logistic_lr);
            read_into(jh, "logistic_max_iter", cfg.hyper.logistic_max_iter);
            read_into(jh, "logistic_tol", cfg.hyper.logistic_tol);
            read_into(jh, "logistic_l2", cfg.hyper.logistic_l2);
            read_into(jh, "svm_c", cfg.hyper.svm_c);
            read_into(jh, "svm_iters", cfg.hyper.svm_iters);
            read_into(jh, "nb_var_floor_rel", cfg.hyper.nb_var_floor_rel);
            read_into(jh, "tree_max_depth", cfg.hyper.tree_max_depth);
            read_into(jh, "tree_min_leaf", cfg.hyper.tree_min_leaf);
            read_into(jh, "forest_trees", cfg.hyper.forest_trees);
            read_into(jh, "forest_bootstrap", cfg.hyper.forest_bootstrap);
            read_into(jh, "forest_mtry", cfg.hyper.forest_mtry);
        }
    }

    if (j.contains("evaluation")) {
        const auto& je = j.at("evaluation");
        reject_unknown(je, "evaluation",
                       {"train_fraction", "stratified", "n_trials", "importance_repeats"});
        read_into(je, "train_fraction", cfg.train_fraction);
        read_into(je, "stratified", cfg.stratified);
        read_into(je, "n_trials", cfg.n_trials);
        read_into(je, "importance_repeats", cfg.importance_repeats);
    }

    if (j.contains("sweep")) {
        const auto& jsw = j.at("sweep");
        reject_unknown(jsw, "sweep", {"levels", "t_min", "t_max", "trials_per_level"});
        read_into(jsw, "levels", cfg.sweep.levels);
        read_into(jsw, "t_min", cfg.sweep.t_min);
        read_into(jsw, "t_max", cfg.sweep.t_max);
        read_into(jsw, "trials_per_level", cfg.sweep.trials_per_level);
    }

    if (j.contains("io")) {
        const auto& jio = j.at("io");
        reject_unknown(jio, "io", {"out_dir", "dataset_dir"});
        read_into(jio, "out_dir", cfg.out_dir);
        read_into(jio, "dataset_dir", cfg.dataset_dir);
    }

    cfg.validate();
    return cfg;
}

/// Emit the full effective configuration; parse(serialize(cfg)) == cfg.
inline ordered_json serialize_config(const PipelineConfig& cfg) {
    ordered_json j;
    j["master_seed"] = cfg.master_seed;
    j["trials_per_class"] = cfg.trials_per_class;
    j["session_jitter"] = cfg.session_jitter;
    j["copy_jitter"] = cfg.copy_jitter;
    j["trigger_jitter_s"] = cfg.trigger_jitter_s;
    j["bank"] = bank_name(cfg.bank);
    j["excitation"] = {{"carrier_hz", cfg.excitation.carrier_hz},
                       {"n_cycles", cfg.excitation.n_cycles},
                       {"amplitude", cfg.excitation.amplitude},
                       {"sample_rate_hz", cfg.excitation.sample_rate_hz},
                       {"record_seconds", cfg.excitation.record_seconds}};
    j["scenarios"] = ordered_json::object();
    for (const auto& s : cfg.scenarios)
        j["scenarios"][class_name(s.damage_class)] = {
            {"gain", s.gain},
            {"delay_s", s.delay_s},
            {"broadening", s.broadening},
            {"echo_gain", s.echo_gain},
            {"echo_delay_s", s.echo_delay_s},
            {"jitter_gain", s.jitter_gain},
            {"jitter_delay", s.jitter_delay},
            {"jitter_broadening", s.jitter_broadening},
            {"jitter_echo", s.jitter_echo},
            {"jitter_corr", s.jitter_corr},
            {"trial_base", s.trial_base}};
    j["noise"] = {{"beta_n", cfg.noise.beta_n},
                  {"copies", cfg.noise.copies},
                  {"seed", cfg.noise.seed}};
    j["wavelet"] = {{"order", cfg.wavelet.order},
                    {"levels", cfg.wavelet.levels},
                    {"selected_level", cfg.wavelet.selected_level},
                    {"boundary", boundary_name(cfg.wavelet.boundary)}};
    j["selection"] = {{"threshold", cfg.selection_threshold}};
    ordered_json names = ordered_json::array();
    for (ModelVariant v : cfg.variants) names.push_back(variant_name(v));
    j["models"] = {{"variants", names},
                   {"hyper",
                    {{"logistic_lr", cfg.hyper.logistic_lr},
                     {"logistic_max_iter", cfg.hyper.logistic_max_iter},
                     {"logistic_tol", cfg.hyper.logistic_tol},
                     {"logistic_l2", cfg.hyper.logistic_l2},
                     {"svm_c", cfg.hyper.svm_c},
                     {"svm_iters", cfg.hyper.svm_iters},
                     {"nb_var_floor_rel", cfg.hyper.nb_var_floor_rel},
                     {"tree_max_depth", cfg.hyper.tree_max_depth},
                     {"tree_min_leaf", cfg.hyper.tree_min_leaf},
                     {"forest_trees", cfg.hyper.forest_trees},
                     {"forest_bootstrap", cfg.hyper.forest_bootstrap},
                     {"forest_mtry", cfg.hyper.forest_mtry}}}};
    j["evaluation"] = {{"train_fraction", cfg.train_fraction},
                       {"stratified", cfg.stratified},
                       {"n_trials", cfg.n_trials},
                       {"importance_repeats", cfg.importance_repeats}};
    j["sweep"] = {{"levels", cfg.sweep.levels},
                  {"t_min", cfg.sweep.t_min},
                  {"t_max", cfg.sweep.t_max},
                  {"trials_per_level", cfg.sweep.trials_per_level}};
    j["io"] = {{"out_dir", cfg.out_dir}, {"dataset_dir", cfg.dataset_dir}};
    return j;
}

inline PipelineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(path + ": invalid JSON: " + e.what());
    }
    return parse_config(j);
}

}  // namespace gwshm
