#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gwshm/models/model.hpp"

namespace gwshm {

struct FeatureImportance {
    std::string feature;
    double mean_drop = 0.0;  // baseline_accuracy - mean permuted accuracy
    double std_drop = 0.0;
};

struct ImportanceReport {
    std::vector<FeatureImportance> per_feature;  // matrix column order
    double baseline_accuracy = 0.0;
    int repeats = 0;
    std::uint64_t seed = 0;
};

/// Permutation importance on held-out data: shuffle one feature column
/// at a time (repeats independent shuffles per feature, child-seeded by
/// (feature, repeat)) and record the accuracy drop. The input matrix is
/// not modified.
inline ImportanceReport permutation_importance(const Model& model,
                                               const FeatureMatrix& test, int repeats,
                                               std::uint64_t seed) {
    if (repeats < 1)
        throw ConfigError("permutation_importance: repeats must be >= 1, got " +
                          std::to_string(repeats));
    if (test.n_rows() == 0)
        throw DataError("permutation_importance: empty test set");

    ImportanceReport report;
    report.repeats = repeats;
    report.seed = seed;
    report.baseline_accuracy = evaluate(model, test).accuracy;

    const std::size_t n = test.n_rows();
    for (std::size_t j = 0; j < test.n_cols(); ++j) {
        std::vector<double> drops;
        drops.reserve(static_cast<std::size_t>(repeats));
        FeatureMatrix permuted = test;
        for (int r = 0; r < repeats; ++r) {
            Rng rng(derive_seed(seed, {0x50455246u, static_cast<std::uint64_t>(j),
                                       static_cast<std::uint64_t>(r)}));
            std::vector<std::size_t> order(n);
            for (std::size_t i = 0; i < n; ++i) order[i] = i;
            rng.shuffle(order);
            for (std::size_t i = 0; i < n; ++i)
                permuted.rows[i][j] = test.rows[order[i]][j];
            drops.push_back(report.baseline_accuracy -
                            evaluate(model, permuted).accuracy);
        }
        double mean = 0.0;
        for (double d : drops) mean += d;
        mean /= repeats;
        double var = 0.0;
        for (double d : drops) var += (d - mean) * (d - mean);
        report.per_feature.push_back(
            {test.feature_names[j], mean, std::sqrt(var / repeats)});
    }
    return report;
}

}  // namespace gwshm
