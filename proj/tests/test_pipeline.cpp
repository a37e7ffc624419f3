#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "gwshm/pipeline.hpp"

using namespace gwshm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("gwshm_pipe_" + std::to_string(Catch::rngSeed()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

PipelineConfig small_config(const std::string& out_dir) {
    PipelineConfig cfg;
    cfg.trials_per_class = 4;
    cfg.noise.copies = 3;
    cfg.n_trials = 3;
    cfg.importance_repeats = 5;
    cfg.variants = {ModelVariant::GaussianNB, ModelVariant::RandomForest};
    cfg.hyper.forest_trees = 20;
    cfg.out_dir = out_dir;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("pipeline produces every report with consistent content") {
    TempDir dir;
    const PipelineConfig cfg = small_config(dir.file("out"));
    const PipelineResult result = run_pipeline(cfg);

    REQUIRE(result.n_series == 5 * 4 * 3);
    REQUIRE(result.variants.size() == 2);
    REQUIRE_FALSE(result.selection.kept.empty());
    REQUIRE(result.importance.per_feature.size() == result.selection.kept.size());

    for (const char* name :
         {"features.csv", "selection.json", "accuracy.json", "eval.json",
          "importance.json", "manifest.json"})
        REQUIRE(fs::exists(fs::path(cfg.out_dir) / name));

    const auto manifest = read_json(dir.file("out/manifest.json"));
    REQUIRE(manifest.at("config_hash").get<std::string>().size() == 64);
    for (const auto& [path, hash] : manifest.at("artifact_hashes").items())
        REQUIRE(hash.get<std::string>() ==
                pipeline_detail::hash_file(path));

    const auto accuracy = read_json(dir.file("out/accuracy.json"));
    REQUIRE(accuracy.at("variants").size() == 2);
    REQUIRE(accuracy.at("n_trials").get<int>() == 3);
}

TEST_CASE("identical config and seed give byte-identical reports") {
    TempDir dir;
    PipelineConfig cfg = small_config(dir.file("a"));
    run_pipeline(cfg);
    cfg.out_dir = dir.file("b");
    run_pipeline(cfg);
    for (const char* name :
         {"features.csv", "selection.json", "accuracy.json", "eval.json",
          "importance.json"})
        REQUIRE(slurp(dir.file("a/") + name) == slurp(dir.file("b/") + name));
}

TEST_CASE("changing the master seed changes the data") {
    TempDir dir;
    PipelineConfig cfg = small_config(dir.file("a"));
    run_pipeline(cfg);
    cfg.out_dir = dir.file("b");
    cfg.master_seed = 43;
    run_pipeline(cfg);
    REQUIRE(slurp(dir.file("a/features.csv")) != slurp(dir.file("b/features.csv")));
}

TEST_CASE("sweep mode builds the severity grid") {
    TempDir dir;
    PipelineConfig cfg = small_config(dir.file("out"));
    cfg.sweep.levels = 3;
    cfg.noise.copies = 2;
    const PipelineResult result = run_pipeline(cfg, /*sweep_mode=*/true);
    REQUIRE(result.n_series == 5 * 3 * 2);
}

TEST_CASE("a reloaded parent dataset is denoised and augmented") {
    TempDir dir;
    // write raw (un-augmented) parents
    const TimeSeries burst = hann_toneburst({1e5, 5, 10.0, 1e7, 2e-4});
    std::vector<TimeSeries> parents;
    auto scns = default_scenarios();
    for (int t = 0; t < 2; ++t) {
        for (const auto& scn : scns) {
            TimeSeries p = synth_response(burst, scn,
                                          derive_seed(1, {static_cast<std::uint64_t>(t),
                                                          static_cast<std::uint64_t>(scn.damage_class)}));
            p.meta.trial = t;
            p.meta.provenance = Provenance::Ingested;
            parents.push_back(std::move(p));
        }
    }
    write_dataset(parents, dir.file("parents"));

    PipelineConfig cfg = small_config(dir.file("out"));
    cfg.dataset_dir = dir.file("parents");
    cfg.noise.copies = 3;
    const auto dataset = pipeline_dataset(cfg, false);
    REQUIRE(dataset.size() == parents.size() * 3);
    for (const auto& s : dataset) REQUIRE(s.meta.provenance == Provenance::Augmented);
}

TEST_CASE("plot mode emits the SVG artifacts") {
    TempDir dir;
    PipelineConfig cfg = small_config(dir.file("out"));
    run_pipeline(cfg, false, /*plot=*/true);
    for (const char* name : {"signal.svg", "confusion.svg", "importance.svg"}) {
        REQUIRE(fs::exists(fs::path(cfg.out_dir) / name));
        const std::string body = slurp((fs::path(cfg.out_dir) / name).string());
        REQUIRE(body.find("<svg") != std::string::npos);
    }
}
