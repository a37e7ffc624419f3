#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gwshm/models/common.hpp"
#include "gwshm/models/forest.hpp"
#include "gwshm/models/logistic.hpp"
#include "gwshm/models/naive_bayes.hpp"
#include "gwshm/models/svm.hpp"
#include "gwshm/models/tree.hpp"

namespace gwshm {

enum class ModelVariant { LogisticOvR, LinearSvmOvO, GaussianNB, DecisionTree, RandomForest };

inline constexpr std::array<ModelVariant, 5> kAllVariants = {
    ModelVariant::LogisticOvR, ModelVariant::LinearSvmOvO, ModelVariant::GaussianNB,
    ModelVariant::DecisionTree, ModelVariant::RandomForest};

inline const char* variant_name(ModelVariant v) {
    switch (v) {
        case ModelVariant::LogisticOvR: return "logistic";
        case ModelVariant::LinearSvmOvO: return "linear_svm";
        case ModelVariant::GaussianNB: return "gaussian_nb";
        case ModelVariant::DecisionTree: return "decision_tree";
        case ModelVariant::RandomForest: return "random_forest";
    }
    throw ConfigError("unknown model variant id");
}

inline ModelVariant variant_from_name(const std::string& name) {
    for (ModelVariant v : kAllVariants)
        if (name == variant_name(v)) return v;
    throw ConfigError("unknown model variant: '" + name + "'");
}

/// A trained classifier. The scaler is populated for the two scale-
/// sensitive variants (logistic, linear SVM) and applied inside predict;
/// trees and naive Bayes consume raw features.
struct Model {
    ModelVariant variant = ModelVariant::RandomForest;
    std::variant<LogisticOvR, LinearSvmOvO, GaussianNB, DecisionTree, RandomForest> params;
    std::optional<Scaler> scaler;
    std::vector<std::string> feature_names;

    bool uses_scaler() const {
        return variant == ModelVariant::LogisticOvR ||
               variant == ModelVariant::LinearSvmOvO;
    }
};

inline Model train(ModelVariant variant, const FeatureMatrix& train_fm,
                   const Hyperparams& hp, std::uint64_t seed) {
    hp.validate();
    train_fm.validate();
    if (train_fm.n_rows() == 0)
        throw DataError("train: empty training matrix");
    bool seen[kNumClasses] = {};
    int distinct = 0;
    for (DamageClass c : train_fm.labels)
        if (!seen[static_cast<int>(c)]) {
            seen[static_cast<int>(c)] = true;
            ++distinct;
        }
    if (distinct < 2)
        throw DataError("train: need at least 2 classes present");

    Model model;
    model.variant = variant;
    model.feature_names = train_fm.feature_names;

    if (variant == ModelVariant::LogisticOvR || variant == ModelVariant::LinearSvmOvO) {
        auto [scaled, scaler] = standardize(train_fm);
        model.scaler = scaler;
        if (variant == ModelVariant::LogisticOvR)
            model.params = LogisticOvR::fit(scaled.rows, scaled.labels, hp);
        else
            model.params = LinearSvmOvO::fit(scaled.rows, scaled.labels, hp);
    } else if (variant == ModelVariant::GaussianNB) {
        model.params = GaussianNB::fit(train_fm.rows, train_fm.labels, hp);
    } else if (variant == ModelVariant::DecisionTree) {
        model.params = DecisionTree::fit(train_fm.rows, train_fm.labels, hp);
    } else {
        model.params = RandomForest::fit(train_fm.rows, train_fm.labels, hp, seed);
    }
    return model;
}

/// One label per row; argmax ties resolve to the canonical class order.
inline std::vector<DamageClass> predict(const Model& model, const FeatureMatrix& fm) {
    if (fm.n_rows() == 0) return {};
    if (fm.n_cols() != model.feature_names.size())
        throw DataError("predict: feature dimensionality mismatch (model " +
                        std::to_string(model.feature_names.size()) + ", data " +
                        std::to_string(fm.n_cols()) + ")");
    std::vector<DamageClass> out;
    out.reserve(fm.n_rows());
    for (const auto& raw : fm.rows) {
        const std::vector<double> row =
            model.scaler ? model.scaler->apply(raw) : raw;
        int label = 0;
        if (const auto* m = std::get_if<LogisticOvR>(&model.params)) {
            const auto s = m->scores(row);
            for (int c = 1; c < kNumClasses; ++c)
                if (s[static_cast<std::size_t>(c)] > s[static_cast<std::size_t>(label)])
                    label = c;
        } else if (const auto* m = std::get_if<LinearSvmOvO>(&model.params)) {
            label = m->vote(row);
        } else if (const auto* m = std::get_if<GaussianNB>(&model.params)) {
            const auto lp = m->log_posteriors(row);
            for (int c = 1; c < kNumClasses; ++c)
                if (lp[static_cast<std::size_t>(c)] > lp[static_cast<std::size_t>(label)])
                    label = c;
        } else if (const auto* m = std::get_if<DecisionTree>(&model.params)) {
            label = m->predict_one(row);
        } else {
            label = std::get<RandomForest>(model.params).predict_one(row);
        }
        out.push_back(static_cast<DamageClass>(label));
    }
    return out;
}

struct EvalReport {
    double accuracy = 0.0;
    std::array<std::array<int, kNumClasses>, kNumClasses> confusion{};  // [actual][predicted]
    int n_test = 0;
    std::uint64_t seed = 0;

    void check_invariants() const {
        int total = 0, trace = 0;
        for (int a = 0; a < kNumClasses; ++a)
            for (int p = 0; p < kNumClasses; ++p) {
                total += confusion[a][p];
                if (a == p) trace += confusion[a][p];
            }
        if (total != n_test)
            throw NumericError("eval report: confusion sum != n_test");
        if (std::abs(accuracy - static_cast<double>(trace) / n_test) > 1e-12)
            throw NumericError("eval report: accuracy != trace/n_test");
    }
};

inline EvalReport evaluate(const Model& model, const FeatureMatrix& test,
                           std::uint64_t seed = 0) {
    if (test.n_rows() == 0)
        throw DataError("evaluate: empty test set");
    const auto predictions = predict(model, test);
    EvalReport report;
    report.seed = seed;
    report.n_test = static_cast<int>(test.n_rows());
    int correct = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const int actual = static_cast<int>(test.labels[i]);
        const int predicted = static_cast<int>(predictions[i]);
        ++report.confusion[actual][predicted];
        if (actual == predicted) ++correct;
    }
    report.accuracy = static_cast<double>(correct) / report.n_test;
    report.check_invariants();
    return report;
}

struct TrialStats {
    ModelVariant variant = ModelVariant::RandomForest;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::vector<double> per_trial;
    std::vector<EvalReport> reports;
};

/// n independent split/train/evaluate runs with child seeds derived from
/// the master seed.
inline TrialStats repeated_trials(ModelVariant variant, const FeatureMatrix& fm,
                                  int n, std::uint64_t master_seed,
                                  const Hyperparams& hp = {},
                                  const SplitSpec& split_base = {}) {
    if (n < 1)
        throw ConfigError("repeated_trials: n must be >= 1, got " + std::to_string(n));
    TrialStats stats;
    stats.variant = variant;
    for (int t = 0; t < n; ++t) {
        SplitSpec spec = split_base;
        spec.seed = derive_seed(master_seed, {0x54524941u, static_cast<std::uint64_t>(t)});
        const auto [train_fm, test_fm] = split(fm, spec);
        const Model model = train(
            variant, train_fm, hp,
            derive_seed(master_seed, {0x4d4f444cu, static_cast<std::uint64_t>(t)}));
        EvalReport report = evaluate(model, test_fm, spec.seed);
        stats.per_trial.push_back(report.accuracy);
        stats.reports.push_back(std::move(report));
    }
    double sum = 0.0;
    for (double a : stats.per_trial) sum += a;
    stats.mean_accuracy = sum / n;
    double var = 0.0;
    for (double a : stats.per_trial)
        var += (a - stats.mean_accuracy) * (a - stats.mean_accuracy);
    stats.std_accuracy = std::sqrt(var / n);
    return stats;
}

}  // namespace gwshm
