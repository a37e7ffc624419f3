#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "gwshm/rng.hpp"
#include "gwshm/selection.hpp"

using namespace gwshm;

namespace {

FeatureMatrix matrix_from_columns(const std::vector<std::vector<double>>& cols,
                                  std::vector<std::string> names) {
    FeatureMatrix fm;
    fm.feature_names = std::move(names);
    const std::size_t n = cols[0].size();
    fm.rows.assign(n, std::vector<double>(cols.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) fm.rows[i][j] = cols[j][i];
    fm.labels.assign(n, DamageClass::Baseline);
    return fm;
}

std::vector<double> random_column(std::size_t n, std::uint64_t seed) {
    std::vector<double> v(n);
    Rng rng(seed);
    for (auto& x : v) x = rng.gaussian();
    return v;
}

}  // namespace

TEST_CASE("pearson basics") {
    const auto x = random_column(100, 1);
    REQUIRE(pearson(x, x) == 1.0);
    std::vector<double> neg = x;
    for (double& v : neg) v = -v;
    REQUIRE(pearson(x, neg) == -1.0);
    REQUIRE_THROWS_AS(pearson(x, random_column(99, 2)), DataError);
    REQUIRE_THROWS_MATCHES(pearson(std::vector<double>(100, 3.0), x), NumericError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("constant feature")));
}

TEST_CASE("shuffled columns decorrelate (Monte Carlo bound)") {
    auto x = random_column(10000, 3);
    auto y = x;
    Rng rng(4);
    rng.shuffle(y);
    REQUIRE(std::abs(pearson(x, y)) < 0.05);
}

TEST_CASE("exact duplicate: the later column is dropped") {
    const auto base = random_column(50, 5);
    const FeatureMatrix fm =
        matrix_from_columns({base, random_column(50, 6), base}, {"A", "B", "C"});
    auto [filtered, report] = filter_features(fm, 0.95);
    REQUIRE(report.kept == std::vector<std::string>{"A", "B"});
    REQUIRE(report.dropped.size() == 1);
    REQUIRE(report.dropped[0].id == "C");
    REQUIRE(report.dropped[0].representative == "A");
    REQUIRE(report.dropped[0].abs_correlation >= 0.95);
    REQUIRE(filtered.n_cols() == 2);
}

TEST_CASE("N mutually correlated features lose exactly N-1 members") {
    const auto base = random_column(80, 7);
    std::vector<double> b2 = base, b3 = base;
    for (auto& v : b2) v = 2.0 * v + 1.0;  // rho = 1 after affine map
    for (auto& v : b3) v = -3.0 * v;
    const FeatureMatrix fm = matrix_from_columns(
        {base, b2, b3, random_column(80, 8)}, {"A", "B", "C", "D"});
    auto [filtered, report] = filter_features(fm, 0.95);
    REQUIRE(report.kept == std::vector<std::string>{"A", "D"});
    REQUIRE(report.dropped.size() == 2);
}

TEST_CASE("constant columns drop first with their own reason") {
    const FeatureMatrix fm = matrix_from_columns(
        {std::vector<double>(40, 7.0), random_column(40, 9)}, {"K", "X"});
    auto [filtered, report] = filter_features(fm, 0.95);
    REQUIRE(report.kept == std::vector<std::string>{"X"});
    REQUIRE(report.dropped[0].id == "K");
    REQUIRE(report.dropped[0].reason == "zero variance");
}

TEST_CASE("kept plus dropped reassemble the vocabulary") {
    const auto base = random_column(60, 10);
    std::vector<double> near = base;
    Rng rng(11);
    for (auto& v : near) v += 0.01 * rng.gaussian();
    const FeatureMatrix fm = matrix_from_columns(
        {base, near, random_column(60, 12)}, {"A", "B", "C"});
    auto [filtered, report] = filter_features(fm, 0.95);
    std::vector<std::string> all = report.kept;
    for (const auto& d : report.dropped) all.push_back(d.id);
    std::sort(all.begin(), all.end());
    REQUIRE(all == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("threshold 1 keeps everything except exact duplicates") {
    const auto a = random_column(60, 13);
    std::vector<double> b = a;
    for (auto& v : b) v += 0.05;  // still rho == 1 (affine)
    auto c = random_column(60, 14);
    const FeatureMatrix fm = matrix_from_columns({a, b, c}, {"A", "B", "C"});
    auto [filtered, report] = filter_features(fm, 1.0);
    REQUIRE(report.kept == std::vector<std::string>{"A", "C"});
    REQUIRE_THROWS_AS(filter_features(fm, 1.0 + 1e-9), ConfigError);
    REQUIRE_THROWS_AS(filter_features(fm, 0.0), ConfigError);
}

TEST_CASE("kept set grows monotonically with the threshold") {
    // block structure: two tight groups plus an independent column
    const auto g1 = random_column(200, 15);
    const auto g2 = random_column(200, 16);
    Rng rng(17);
    auto mk = [&](const std::vector<double>& g, double noise) {
        std::vector<double> v = g;
        for (auto& x : v) x += noise * rng.gaussian();
        return v;
    };
    const FeatureMatrix fm = matrix_from_columns(
        {g1, mk(g1, 0.1), mk(g1, 0.3), g2, mk(g2, 0.2), random_column(200, 18)},
        {"A", "B", "C", "D", "E", "F"});
    std::size_t previous = 0;
    for (double threshold : {0.5, 0.8, 0.9, 0.95, 1.0}) {
        auto [filtered, report] = filter_features(fm, threshold);
        REQUIRE(report.kept.size() >= previous);
        previous = report.kept.size();
        for (const auto& d : report.dropped)
            if (d.reason == "correlated") REQUIRE(d.abs_correlation >= threshold);
    }
}

TEST_CASE("order stability: identical inputs give identical kept sets") {
    const FeatureMatrix fm = matrix_from_columns(
        {random_column(100, 19), random_column(100, 20), random_column(100, 21)},
        {"A", "B", "C"});
    auto [f1, r1] = filter_features(fm, 0.9);
    auto [f2, r2] = filter_features(fm, 0.9);
    REQUIRE(r1.kept == r2.kept);
    REQUIRE(f1.rows == f2.rows);
}

TEST_CASE("an all-duplicate matrix cannot drop every feature") {
    const auto base = random_column(50, 22);
    const FeatureMatrix fm = matrix_from_columns({base, base}, {"A", "B"});
    auto [filtered, report] = filter_features(fm, 0.5);
    REQUIRE(report.kept == std::vector<std::string>{"A"});
    // only an all-constant matrix trips the degenerate error
    const FeatureMatrix constants = matrix_from_columns(
        {std::vector<double>(50, 1.0), std::vector<double>(50, 2.0)}, {"A", "B"});
    REQUIRE_THROWS_AS(filter_features(constants, 0.95), DataError);
}

TEST_CASE("correlation matrix is symmetric with unit diagonal") {
    const FeatureMatrix fm = matrix_from_columns(
        {random_column(100, 23), random_column(100, 24), std::vector<double>(100, 5.0)},
        {"A", "B", "K"});
    const CorrelationMatrix cm = correlation_matrix(fm);
    REQUIRE(cm.values[0][0] == 1.0);
    REQUIRE(cm.values[0][1] == cm.values[1][0]);
    REQUIRE(std::isnan(cm.values[2][2]));
    REQUIRE(std::abs(cm.values[0][1]) <= 1.0);
}
