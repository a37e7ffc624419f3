#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwshm/config.hpp"
#include "gwshm/dataset.hpp"
#include "gwshm/hash.hpp"
#include "gwshm/interpret.hpp"
#include "gwshm/io.hpp"
#include "gwshm/selection.hpp"
#include "gwshm/svg.hpp"
#include "gwshm/wavelet.hpp"

namespace gwshm {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kBaselinePathId = "P3-3*";

struct StageRecord {
    std::string name;
    double seconds = 0.0;
    std::vector<std::string> outputs;
};

/// Listing of everything a run produced. Timings vary between runs, so
/// the manifest is not part of the byte-determinism contract; all other
/// report files are.
struct RunManifest {
    std::string version = kVersion;
    std::string config_hash;
    std::vector<StageRecord> stages;
    std::map<std::string, std::string> artifact_hashes;  // path -> sha256
};

inline ordered_json manifest_json(const RunManifest& m) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = m.version;
    j["config_hash"] = m.config_hash;
    j["stages"] = ordered_json::array();
    for (const auto& s : m.stages) {
        ordered_json js;
        js["name"] = s.name;
        js["seconds"] = s.seconds;
        js["outputs"] = s.outputs;
        j["stages"].push_back(js);
    }
    j["artifact_hashes"] = ordered_json::object();
    for (const auto& [path, hash] : m.artifact_hashes) j["artifact_hashes"][path] = hash;
    return j;
}

namespace pipeline_detail {

class StageTimer {
public:
    StageTimer(RunManifest& manifest, std::string name)
        : manifest_(manifest), start_(std::chrono::steady_clock::now()) {
        record_.name = std::move(name);
    }
    void output(const std::string& path) { record_.outputs.push_back(path); }
    void finish() {
        record_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        manifest_.stages.push_back(record_);
    }

private:
    RunManifest& manifest_;
    StageRecord record_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot hash missing file '" + path + "'");
    Sha256 h;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h.update(buf, static_cast<std::size_t>(in.gcount()));
    return h.hex_digest();
}

}  // namespace pipeline_detail

struct VariantResult {
    ModelVariant variant;
    TrialStats stats;
};

struct PipelineResult {
    std::size_t n_series = 0;
    SelectionReport selection;
    FeatureMatrix selected_matrix;
    std::vector<VariantResult> variants;
    ModelVariant best_variant = ModelVariant::RandomForest;
    EvalReport best_eval;
    ImportanceReport importance;
    RunManifest manifest;
};

/// Synthesize (or reload) the configured dataset. Clean parent trials
/// are offset-removed and wavelet-filtered before noise augmentation,
/// the usual acquisition order. A reloaded dataset is augmented the same
/// way when it holds raw parents, or denoised per series when it is
/// already noise-augmented.
inline std::vector<TimeSeries> pipeline_dataset(const PipelineConfig& cfg,
                                                bool sweep_mode) {
    const auto preprocess = [&cfg](const TimeSeries& s) {
        return wavelet_denoise(s, cfg.wavelet);
    };
    if (!cfg.dataset_dir.empty()) {
        auto loaded = read_dataset(cfg.dataset_dir);
        bool already_augmented = false;
        for (const auto& s : loaded)
            if (s.meta.provenance == Provenance::Augmented) already_augmented = true;
        if (already_augmented) {
            for (auto& s : loaded) s = preprocess(s);
            return loaded;
        }
        return augment_parents(loaded, cfg.noise, cfg.master_seed, cfg.copy_jitter,
                               cfg.trigger_jitter_s, preprocess);
    }
    const TimeSeries excitation = hann_toneburst(cfg.excitation);
    if (sweep_mode) {
        const auto scenarios =
            severity_sweep_scenarios(cfg.scenarios, cfg.sweep.levels, cfg.sweep.t_min,
                                     cfg.sweep.t_max, cfg.sweep.trials_per_level);
        return build_dataset(excitation, scenarios, cfg.sweep.trials_per_level,
                             cfg.noise, cfg.master_seed, cfg.session_jitter,
                             cfg.copy_jitter, cfg.trigger_jitter_s, preprocess);
    }
    return build_dataset(excitation, cfg.scenarios, cfg.trials_per_class, cfg.noise,
                         cfg.master_seed, cfg.session_jitter, cfg.copy_jitter,
                         cfg.trigger_jitter_s, preprocess);
}

inline std::vector<TimeSeries> denoise_dataset(const std::vector<TimeSeries>& dataset,
                                               const WaveletSpec& spec) {
    std::vector<TimeSeries> out;
    out.reserve(dataset.size());
    for (const auto& s : dataset) out.push_back(wavelet_denoise(s, spec));
    return out;
}

/// Full run: dataset -> denoise -> features -> selection -> repeated
/// trials per variant -> permutation importance for the best variant.
/// Reports land under cfg.out_dir; every artifact is listed in the
/// manifest with its content hash.
inline PipelineResult run_pipeline(const PipelineConfig& cfg, bool sweep_mode = false,
                                   bool plot = false) {
    namespace fs = std::filesystem;
    cfg.validate();
    fs::create_directories(cfg.out_dir);

    PipelineResult result;
    result.manifest.config_hash = sha256_hex(serialize_config(cfg).dump(2));

    pipeline_detail::StageTimer t_data(result.manifest, "dataset_denoise");
    const auto dataset = pipeline_dataset(cfg, sweep_mode);
    result.n_series = dataset.size();
    t_data.finish();

    pipeline_detail::StageTimer t_feat(result.manifest, "features");
    const FeatureMatrix fm = build_feature_matrix(dataset, kBaselinePathId, cfg.bank);
    const std::string fm_path = (fs::path(cfg.out_dir) / "features.csv").string();
    write_feature_matrix_csv(fm, fm_path);
    t_feat.output(fm_path);
    t_feat.finish();

    pipeline_detail::StageTimer t_sel(result.manifest, "selection");
    auto [selected, selection_report] = filter_features(fm, cfg.selection_threshold);
    result.selection = selection_report;
    result.selected_matrix = selected;
    const std::string sel_path = (fs::path(cfg.out_dir) / "selection.json").string();
    write_json(selection_report_json(selection_report), sel_path);
    t_sel.output(sel_path);
    t_sel.finish();

    pipeline_detail::StageTimer t_train(result.manifest, "train_eval");
    ordered_json accuracy;
    accuracy["schema_version"] = kSchemaVersion;
    accuracy["n_trials"] = cfg.n_trials;
    accuracy["variants"] = ordered_json::object();
    for (ModelVariant v : cfg.variants) {
        SplitSpec split_base;
        split_base.train_fraction = cfg.train_fraction;
        split_base.stratified = cfg.stratified;
        TrialStats stats =
            repeated_trials(v, selected, cfg.n_trials, cfg.master_seed, cfg.hyper,
                            split_base);
        ordered_json jv;
        jv["mean_accuracy"] = stats.mean_accuracy;
        jv["std_accuracy"] = stats.std_accuracy;
        jv["per_trial"] = stats.per_trial;
        accuracy["variants"][variant_name(v)] = jv;
        result.variants.push_back({v, std::move(stats)});
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < result.variants.size(); ++i)
        if (result.variants[i].stats.mean_accuracy >
            result.variants[best].stats.mean_accuracy)
            best = i;
    result.best_variant = result.variants[best].variant;
    accuracy["best_variant"] = variant_name(result.best_variant);
    const std::string acc_path = (fs::path(cfg.out_dir) / "accuracy.json").string();
    write_json(accuracy, acc_path);
    t_train.output(acc_path);
    t_train.finish();

    pipeline_detail::StageTimer t_imp(result.manifest, "importance");
    SplitSpec imp_split;
    imp_split.train_fraction = cfg.train_fraction;
    imp_split.stratified = cfg.stratified;
    imp_split.seed = derive_seed(cfg.master_seed, {0x494d504fu});
    const auto [imp_train, imp_test] = split(selected, imp_split);
    const Model best_model =
        train(result.best_variant, imp_train, cfg.hyper,
              derive_seed(cfg.master_seed, {0x494d504fu, 1}));
    result.best_eval = evaluate(best_model, imp_test, imp_split.seed);
    result.importance = permutation_importance(best_model, imp_test,
                                               cfg.importance_repeats,
                                               derive_seed(cfg.master_seed, {0x494d504fu, 2}));
    const std::string eval_path = (fs::path(cfg.out_dir) / "eval.json").string();
    write_json(eval_report_json(result.best_eval, result.best_variant), eval_path);
    const std::string imp_path = (fs::path(cfg.out_dir) / "importance.json").string();
    write_json(importance_report_json(result.importance), imp_path);
    t_imp.output(eval_path);
    t_imp.output(imp_path);
    t_imp.finish();

    if (plot) {
        pipeline_detail::StageTimer t_plot(result.manifest, "plot");
        const std::string sig_path = (fs::path(cfg.out_dir) / "signal.svg").string();
        svg::line_plot(dataset.front().samples,
                       std::string("preprocessed series (") +
                           class_name(dataset.front().meta.label) + ")",
                       sig_path);
        const std::string conf_path = (fs::path(cfg.out_dir) / "confusion.svg").string();
        svg::confusion_plot(result.best_eval, conf_path);
        const std::string bars_path = (fs::path(cfg.out_dir) / "importance.svg").string();
        svg::importance_plot(result.importance, bars_path);
        t_plot.output(sig_path);
        t_plot.output(conf_path);
        t_plot.output(bars_path);
        t_plot.finish();
    }

    for (const auto& stage : result.manifest.stages)
        for (const auto& path : stage.outputs)
            result.manifest.artifact_hashes[path] = pipeline_detail::hash_file(path);
    write_json(manifest_json(result.manifest),
               (fs::path(cfg.out_dir) / "manifest.json").string());
    return result;
}

}  // namespace gwshm
