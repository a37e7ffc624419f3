// Command-line front end for the guided-wave SHM damage-classification
// pipeline: synthesize or ingest datasets, denoise, extract features,
// filter them, train and evaluate classifiers, and report permutation
// importance. Exit codes: 0 success, 2 config error, 3 data error,
// 4 numeric error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwshm/gwshm.hpp"

namespace fs = std::filesystem;
using namespace gwshm;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string bank;
    bool plot = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_bank = true,
                bool with_plot = false) {
    cmd->add_option("--config", opts.config_path, "pipeline config JSON");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "master seed override")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
    if (with_bank)
        cmd->add_option("--bank", opts.bank, "feature bank: baseline|baseline-free");
    if (with_plot) cmd->add_flag("--plot", opts.plot, "emit SVG plots");
}

PipelineConfig effective_config(const CommonOpts& opts) {
    PipelineConfig cfg =
        opts.config_path.empty() ? PipelineConfig{} : load_config_file(opts.config_path);
    if (opts.seed_set) cfg.master_seed = opts.seed;
    if (!opts.bank.empty()) cfg.bank = bank_from_name(opts.bank);
    cfg.out_dir = opts.out_dir;
    cfg.validate();
    return cfg;
}

void write_simple_manifest(const PipelineConfig& cfg, const std::string& stage,
                           const std::vector<std::string>& outputs) {
    RunManifest manifest;
    manifest.config_hash = sha256_hex(serialize_config(cfg).dump(2));
    StageRecord record;
    record.name = stage;
    record.outputs = outputs;
    manifest.stages.push_back(record);
    for (const auto& path : outputs)
        manifest.artifact_hashes[path] = pipeline_detail::hash_file(path);
    write_json(manifest_json(manifest), (fs::path(cfg.out_dir) / "manifest.json").string());
}

int cmd_synth(const CommonOpts& opts, bool sweep_mode) {
    const PipelineConfig cfg = effective_config(opts);
    const auto dataset = pipeline_dataset(cfg, sweep_mode);
    const std::string data_dir = (fs::path(cfg.out_dir) / "data").string();
    const auto files = write_dataset(dataset, data_dir);
    std::vector<std::string> outputs = {data_dir + "/index.csv"};
    write_simple_manifest(cfg, sweep_mode ? "synth_sweep" : "synth", outputs);
    std::cout << "wrote " << dataset.size() << " series to " << data_dir << "\n";
    return 0;
}

int cmd_ingest(const std::string& input, const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    std::vector<std::string> csvs;
    if (fs::is_directory(input)) {
        for (const auto& entry : fs::directory_iterator(input))
            if (entry.path().extension() == ".csv") csvs.push_back(entry.path().string());
        std::sort(csvs.begin(), csvs.end());
    } else {
        csvs.push_back(input);
    }
    if (csvs.empty()) throw DataError("ingest: no CSV files under '" + input + "'");

    std::vector<TimeSeries> dataset;
    ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["files"] = ordered_json::array();
    int trial_by_class[kNumClasses] = {};
    for (const auto& path : csvs) {
        auto [series, info] = ingest_series_csv(path);
        series.meta.trial = trial_by_class[static_cast<int>(info.label)]++;
        series.meta.path_id =
            series.meta.label == DamageClass::Baseline ? kBaselinePathId : "P2-2*";
        dataset.push_back(std::move(series));
        ordered_json jf;
        jf["file"] = path;
        jf["rows"] = info.rows;
        jf["dt"] = info.dt;
        jf["label"] = class_name(info.label);
        report["files"].push_back(jf);
    }
    const std::string data_dir = (fs::path(cfg.out_dir) / "data").string();
    write_dataset(dataset, data_dir);
    const std::string report_path = (fs::path(cfg.out_dir) / "ingest_report.json").string();
    fs::create_directories(cfg.out_dir);
    write_json(report, report_path);
    write_simple_manifest(cfg, "ingest", {data_dir + "/index.csv", report_path});
    std::cout << "ingested " << dataset.size() << " series\n";
    return 0;
}

int cmd_denoise(const std::string& input, const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const auto dataset = read_dataset(input);
    const auto denoised = denoise_dataset(dataset, cfg.wavelet);
    const std::string data_dir = (fs::path(cfg.out_dir) / "denoised").string();
    write_dataset(denoised, data_dir);
    write_simple_manifest(cfg, "denoise", {data_dir + "/index.csv"});
    std::cout << "denoised " << denoised.size() << " series to " << data_dir << "\n";
    return 0;
}

int cmd_features(const std::string& input, const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const auto dataset = read_dataset(input);
    const FeatureMatrix fm = build_feature_matrix(dataset, kBaselinePathId, cfg.bank);
    fs::create_directories(cfg.out_dir);
    const std::string fm_path = (fs::path(cfg.out_dir) / "features.csv").string();
    write_feature_matrix_csv(fm, fm_path);
    write_simple_manifest(cfg, "features", {fm_path});
    std::cout << "feature matrix " << fm.n_rows() << "x" << fm.n_cols() << " -> "
              << fm_path << "\n";
    return 0;
}

int cmd_select(const std::string& input, const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const FeatureMatrix fm = read_feature_matrix_csv(input);
    auto [selected, report] = filter_features(fm, cfg.selection_threshold);
    fs::create_directories(cfg.out_dir);
    const std::string fm_path = (fs::path(cfg.out_dir) / "selected.csv").string();
    const std::string report_path = (fs::path(cfg.out_dir) / "selection.json").string();
    write_feature_matrix_csv(selected, fm_path);
    write_json(selection_report_json(report), report_path);
    write_simple_manifest(cfg, "select", {fm_path, report_path});
    std::cout << "kept " << report.kept.size() << " of " << fm.n_cols() << " features\n";
    return 0;
}

int cmd_train(const std::string& input, const std::string& variant_str,
              const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const ModelVariant variant = variant_from_name(variant_str);
    const FeatureMatrix fm = read_feature_matrix_csv(input);
    SplitSpec spec;
    spec.train_fraction = cfg.train_fraction;
    spec.stratified = cfg.stratified;
    spec.seed = derive_seed(cfg.master_seed, {0x54524149u});
    const auto [train_fm, test_fm] = split(fm, spec);
    const Model model =
        train(variant, train_fm, cfg.hyper, derive_seed(cfg.master_seed, {0x54524149u, 1}));
    fs::create_directories(cfg.out_dir);
    const std::string model_path = (fs::path(cfg.out_dir) / "model.json").string();
    const std::string eval_path = (fs::path(cfg.out_dir) / "eval.json").string();
    write_json(model_to_json(model), model_path);
    write_json(eval_report_json(evaluate(model, test_fm, spec.seed), variant), eval_path);
    write_simple_manifest(cfg, "train", {model_path, eval_path});
    std::cout << "trained " << variant_str << "; model -> " << model_path << "\n";
    return 0;
}

int cmd_eval(const std::string& model_path, const std::string& input,
             const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const Model model = model_from_json(read_json(model_path));
    const FeatureMatrix fm = read_feature_matrix_csv(input);
    const EvalReport report = evaluate(model, fm);
    fs::create_directories(cfg.out_dir);
    const std::string eval_path = (fs::path(cfg.out_dir) / "eval.json").string();
    write_json(eval_report_json(report, model.variant), eval_path);
    write_simple_manifest(cfg, "eval", {eval_path});
    std::printf("accuracy %.4f on %d rows\n", report.accuracy, report.n_test);
    return 0;
}

int cmd_importance(const std::string& model_path, const std::string& input,
                   const CommonOpts& opts) {
    const PipelineConfig cfg = effective_config(opts);
    const Model model = model_from_json(read_json(model_path));
    const FeatureMatrix fm = read_feature_matrix_csv(input);
    const ImportanceReport report = permutation_importance(
        model, fm, cfg.importance_repeats, derive_seed(cfg.master_seed, {0x494d5052u}));
    fs::create_directories(cfg.out_dir);
    const std::string imp_path = (fs::path(cfg.out_dir) / "importance.json").string();
    write_json(importance_report_json(report), imp_path);
    write_simple_manifest(cfg, "importance", {imp_path});
    std::cout << "importance report -> " << imp_path << "\n";
    return 0;
}

int cmd_run(const CommonOpts& opts, bool sweep_mode) {
    const PipelineConfig cfg = effective_config(opts);
    const PipelineResult result = run_pipeline(cfg, sweep_mode, opts.plot);
    for (const auto& vr : result.variants)
        std::printf("%-14s mean accuracy %.4f (std %.4f)\n", variant_name(vr.variant),
                    vr.stats.mean_accuracy, vr.stats.std_accuracy);
    std::printf("best: %s; reports under %s\n", variant_name(result.best_variant),
                cfg.out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"guided-wave SHM damage classification toolkit"};
    app.require_subcommand(1);

    CommonOpts synth_opts, ingest_opts, denoise_opts, features_opts, select_opts;
    CommonOpts train_opts, eval_opts, imp_opts, pipe_opts, sweep_opts;
    std::string ingest_in, denoise_in, features_in, select_in, train_in, train_variant;
    std::string eval_model, eval_in, imp_model, imp_in;

    auto* synth = app.add_subcommand("synth", "synthesize the surrogate dataset");
    add_common(synth, synth_opts);

    auto* ingest = app.add_subcommand("ingest", "validate and normalize recorded CSVs");
    ingest->add_option("--in", ingest_in, "CSV file or directory (time,amplitude,label)")
        ->required();
    add_common(ingest, ingest_opts, false);

    auto* denoise = app.add_subcommand("denoise", "wavelet-denoise a dataset directory");
    denoise->add_option("--in", denoise_in, "dataset directory")->required();
    add_common(denoise, denoise_opts, false);

    auto* features = app.add_subcommand("features", "extract a feature matrix");
    features->add_option("--in", features_in, "dataset directory")->required();
    add_common(features, features_opts);

    auto* select = app.add_subcommand("select", "correlation-filter a feature matrix");
    select->add_option("--in", select_in, "feature matrix CSV")->required();
    add_common(select, select_opts, false);

    auto* train_cmd = app.add_subcommand("train", "train one classifier variant");
    train_cmd->add_option("--in", train_in, "feature matrix CSV")->required();
    train_cmd->add_option("--variant", train_variant, "classifier variant")->required();
    add_common(train_cmd, train_opts, false);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a saved model");
    eval_cmd->add_option("--model", eval_model, "model JSON")->required();
    eval_cmd->add_option("--in", eval_in, "feature matrix CSV")->required();
    add_common(eval_cmd, eval_opts, false);

    auto* imp_cmd = app.add_subcommand("importance", "permutation importance of a model");
    imp_cmd->add_option("--model", imp_model, "model JSON")->required();
    imp_cmd->add_option("--in", imp_in, "feature matrix CSV")->required();
    add_common(imp_cmd, imp_opts, false);

    auto* pipe = app.add_subcommand("pipeline", "run the full pipeline");
    add_common(pipe, pipe_opts, true, true);

    auto* sweep = app.add_subcommand("sweep", "severity-sweep pipeline run");
    add_common(sweep, sweep_opts, true, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return cmd_synth(synth_opts, false);
        if (ingest->parsed()) return cmd_ingest(ingest_in, ingest_opts);
        if (denoise->parsed()) return cmd_denoise(denoise_in, denoise_opts);
        if (features->parsed()) return cmd_features(features_in, features_opts);
        if (select->parsed()) return cmd_select(select_in, select_opts);
        if (train_cmd->parsed()) return cmd_train(train_in, train_variant, train_opts);
        if (eval_cmd->parsed()) return cmd_eval(eval_model, eval_in, eval_opts);
        if (imp_cmd->parsed()) return cmd_importance(imp_model, imp_in, imp_opts);
        if (pipe->parsed()) return cmd_run(pipe_opts, false);
        if (sweep->parsed()) return cmd_run(sweep_opts, true);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
