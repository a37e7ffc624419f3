#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "gwshm/config.hpp"
#include "gwshm/dataset.hpp"
#include "gwshm/hash.hpp"
#include "gwshm/io.hpp"

using namespace gwshm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gwshm_test_" + std::to_string(Catch::rngSeed()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

TimeSeries sample_series(std::uint64_t seed = 1) {
    TimeSeries s;
    s.dt = 2.5e-7;
    Rng rng(seed);
    s.samples.resize(300);
    for (auto& v : s.samples) v = rng.gaussian();
    s.meta.label = DamageClass::LackOfFilmAdhesive;
    s.meta.path_id = "P2-2*";
    s.meta.trial = 4;
    s.meta.copy = 2;
    s.meta.provenance = Provenance::Augmented;
    return s;
}

}  // namespace

TEST_CASE("sha256 matches the reference vectors") {
    REQUIRE(sha256_hex("") ==
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    REQUIRE(sha256_hex("abc") ==
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    REQUIRE(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
            "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // streaming across chunk boundaries
    Sha256 h;
    std::string a(1000, 'a');
    h.update(a);
    h.update(a);
    Sha256 h2;
    h2.update(std::string(2000, 'a'));
    REQUIRE(h.hex_digest() == h2.hex_digest());
}

TEST_CASE("time-series CSV round-trips losslessly") {
    TempDir dir;
    const TimeSeries original = sample_series();
    write_series_csv(original, dir.file("series.csv"));
    const TimeSeries loaded = read_series_csv(dir.file("series.csv"));
    REQUIRE(loaded.samples == original.samples);
    REQUIRE(loaded.dt == original.dt);
}

TEST_CASE("dataset directory round-trips with metadata") {
    TempDir dir;
    const TimeSeries burst = hann_toneburst({1e5, 5, 10.0, 1e7, 2e-4});
    NoiseConfig noise;
    noise.copies = 2;
    const auto dataset = build_dataset(burst, default_scenarios(), 2, noise, 3);
    write_dataset(dataset, dir.file("data"));
    const auto loaded = read_dataset(dir.file("data"));
    REQUIRE(loaded.size() == dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        REQUIRE(loaded[i].samples == dataset[i].samples);
        REQUIRE(loaded[i].meta.label == dataset[i].meta.label);
        REQUIRE(loaded[i].meta.path_id == dataset[i].meta.path_id);
        REQUIRE(loaded[i].meta.trial == dataset[i].meta.trial);
        REQUIRE(loaded[i].meta.copy == dataset[i].meta.copy);
        REQUIRE(loaded[i].meta.provenance == dataset[i].meta.provenance);
    }
}

TEST_CASE("feature-matrix CSV round-trips") {
    TempDir dir;
    FeatureMatrix fm;
    fm.feature_names = {"CCD", "RMSD"};
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        fm.rows.push_back({rng.gaussian() * 1e-7, rng.gaussian() * 1e3});
        fm.labels.push_back(static_cast<DamageClass>(rng.below(5)));
    }
    write_feature_matrix_csv(fm, dir.file("fm.csv"));
    const FeatureMatrix loaded = read_feature_matrix_csv(dir.file("fm.csv"));
    REQUIRE(loaded.rows == fm.rows);
    REQUIRE(loaded.labels == fm.labels);
    REQUIRE(loaded.feature_names == fm.feature_names);
}

TEST_CASE("ingest accepts a well-formed three-column file") {
    TempDir dir;
    {
        std::ofstream out(dir.file("rec.csv"));
        out << "time,amplitude,label\n";
        for (int i = 0; i < 100; ++i)
            out << i * 1e-8 << "," << 0.1 * i << ",cc\n";
    }
    const auto [series, report] = ingest_series_csv(dir.file("rec.csv"));
    REQUIRE(report.rows == 100);
    REQUIRE(series.meta.label == DamageClass::CoreCrush);
    REQUIRE(series.dt == Catch::Approx(1e-8));
    REQUIRE(series.meta.provenance == Provenance::Ingested);
}

TEST_CASE("ingest rejects NaN amplitudes with the line number") {
    TempDir dir;
    {
        std::ofstream out(dir.file("bad.csv"));
        out << "time,amplitude,label\n";
        out << "0,1.0,cc\n";
        out << "1e-8,nan,cc\n";
        out << "2e-8,2.0,cc\n";
    }
    REQUIRE_THROWS_MATCHES(ingest_series_csv(dir.file("bad.csv")), DataError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring(":3")));
}

TEST_CASE("ingest rejects non-uniform sampling") {
    TempDir dir;
    {
        std::ofstream out(dir.file("jitter.csv"));
        out << "time,amplitude,label\n";
        double t = 0.0;
        for (int i = 0; i < 50; ++i) {
            out << t << "," << i << ",trf\n";
            t += (i == 25 ? 1.1e-8 : 1e-8);  // 10% step jitter
        }
    }
    REQUIRE_THROWS_MATCHES(ingest_series_csv(dir.file("jitter.csv")), DataError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("non-uniform")));
}

TEST_CASE("ingest rejects missing or unknown labels") {
    TempDir dir;
    {
        std::ofstream out(dir.file("nolabel.csv"));
        out << "time,amplitude,label\n0,1.0,\n1e-8,2.0,\n";
    }
    REQUIRE_THROWS_MATCHES(ingest_series_csv(dir.file("nolabel.csv")), DataError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("missing label")));
    {
        std::ofstream out(dir.file("odd.csv"));
        out << "time,amplitude,label\n0,1.0,dent\n1e-8,2.0,dent\n";
    }
    REQUIRE_THROWS_AS(ingest_series_csv(dir.file("odd.csv")), DataError);
}

TEST_CASE("model JSON round-trips preserve predictions") {
    FeatureMatrix fm;
    fm.feature_names = {"x", "y"};
    Rng rng(6);
    for (int i = 0; i < 120; ++i) {
        fm.rows.push_back({rng.gaussian(), rng.gaussian()});
        fm.labels.push_back(static_cast<DamageClass>(rng.below(3)));
    }
    for (ModelVariant v : kAllVariants) {
        const Model model = train(v, fm, {}, 9);
        const Model restored = model_from_json(model_to_json(model));
        REQUIRE(restored.variant == model.variant);
        REQUIRE(predict(restored, fm) == predict(model, fm));
    }
}

TEST_CASE("config round-trip is the identity") {
    PipelineConfig cfg;
    cfg.master_seed = 1234;
    cfg.bank = FeatureBank::BaselineFree;
    cfg.scenarios[1].gain = 1.5;
    cfg.variants = {ModelVariant::RandomForest, ModelVariant::GaussianNB};
    const ordered_json once = serialize_config(cfg);
    const PipelineConfig reparsed = parse_config(once);
    const ordered_json twice = serialize_config(reparsed);
    REQUIRE(once.dump(2) == twice.dump(2));
}

TEST_CASE("unknown config keys are rejected at every level") {
    ordered_json j;
    j["master_sed"] = 42;
    REQUIRE_THROWS_MATCHES(parse_config(j), ConfigError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("unknown key")));
    ordered_json j2;
    j2["noise"] = {{"beta", 0.1}};
    REQUIRE_THROWS_AS(parse_config(j2), ConfigError);
    ordered_json j3;
    j3["scenarios"] = {{"cc", {{"gian", 2.0}}}};
    REQUIRE_THROWS_AS(parse_config(j3), ConfigError);
}

TEST_CASE("config validation enforces module invariants") {
    ordered_json j;
    j["selection"] = {{"threshold", 1.5}};
    REQUIRE_THROWS_AS(parse_config(j), ConfigError);
    ordered_json j2;
    j2["scenarios"] = {{"cc", {{"broadening", 0.5}}}};
    REQUIRE_THROWS_AS(parse_config(j2), ConfigError);
}
