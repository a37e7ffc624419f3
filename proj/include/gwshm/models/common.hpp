#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/features.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

struct SplitSpec {
    double train_fraction = 0.75;
    std::uint64_t seed = 0;
    bool stratified = true;

    void validate() const {
        if (!(train_fraction > 0.0 && train_fraction < 1.0))
            throw ConfigError("split: train_fraction must be in (0, 1), got " +
                              std::to_string(train_fraction));
    }
};

namespace detail {

inline FeatureMatrix take_rows(const FeatureMatrix& fm,
                               const std::vector<std::size_t>& idx) {
    FeatureMatrix out;
    out.feature_names = fm.feature_names;
    out.bank = fm.bank;
    out.baseline_path = fm.baseline_path;
    out.rows.reserve(idx.size());
    out.labels.reserve(idx.size());
    for (std::size_t i : idx) {
        out.rows.push_back(fm.rows[i]);
        out.labels.push_back(fm.labels[i]);
    }
    return out;
}

}  // namespace detail

/// Disjoint, exhaustive train/test split, deterministic given the seed.
/// Stratified mode shuffles within each class, preserving class
/// proportions within one row.
inline std::pair<FeatureMatrix, FeatureMatrix> split(const FeatureMatrix& fm,
                                                     const SplitSpec& spec) {
    spec.validate();
    fm.validate();
    if (fm.n_rows() < 2)
        throw DataError("split: need at least 2 rows");

    std::vector<std::size_t> train_idx, test_idx;
    if (spec.stratified) {
        std::map<DamageClass, std::vector<std::size_t>> by_class;
        for (std::size_t i = 0; i < fm.n_rows(); ++i)
            by_class[fm.labels[i]].push_back(i);
        for (auto& [cls, idx] : by_class) {
            if (idx.size() < 2)
                throw DataError(std::string("split: class '") + class_name(cls) +
                                "' has fewer than 2 rows; cannot stratify");
            Rng rng(derive_seed(spec.seed, {0x53504c49u, static_cast<std::uint64_t>(cls)}));
            rng.shuffle(idx);
            auto n_train = static_cast<std::size_t>(
                std::llround(spec.train_fraction * static_cast<double>(idx.size())));
            n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
            for (std::size_t k = 0; k < idx.size(); ++k)
                (k < n_train ? train_idx : test_idx).push_back(idx[k]);
        }
    } else {
        std::vector<std::size_t> idx(fm.n_rows());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        Rng rng(derive_seed(spec.seed, {0x53504c49u}));
        rng.shuffle(idx);
        auto n_train = static_cast<std::size_t>(
            std::llround(spec.train_fraction * static_cast<double>(idx.size())));
        n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
        for (std::size_t k = 0; k < idx.size(); ++k)
            (k < n_train ? train_idx : test_idx).push_back(idx[k]);
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {detail::take_rows(fm, train_idx), detail::take_rows(fm, test_idx)};
}

/// Per-feature affine transform captured on training data.
struct Scaler {
    std::vector<double> mean;
    std::vector<double> std_dev;  // constant columns get 1

    std::vector<double> apply(const std::vector<double>& row) const {
        std::vector<double> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j] = (row[j] - mean[j]) / std_dev[j];
        return out;
    }
};

inline std::pair<FeatureMatrix, Scaler> standardize(const FeatureMatrix& train) {
    train.validate();
    const std::size_t d = train.n_cols();
    const auto n = static_cast<double>(train.n_rows());
    Scaler scaler;
    scaler.mean.assign(d, 0.0);
    scaler.std_dev.assign(d, 1.0);
    for (std::size_t j = 0; j < d; ++j) {
        double s = 0.0;
        for (const auto& row : train.rows) s += row[j];
        scaler.mean[j] = s / n;
        double v = 0.0;
        for (const auto& row : train.rows) {
            const double c = row[j] - scaler.mean[j];
            v += c * c;
        }
        const double sd = std::sqrt(v / n);
        scaler.std_dev[j] = sd > 0.0 ? sd : 1.0;
    }
    FeatureMatrix scaled = train;
    for (auto& row : scaled.rows) row = scaler.apply(row);
    return {scaled, scaler};
}

/// Hyperparameters for all five variants; defaults follow common
/// toolkit settings.
struct Hyperparams {
    // logistic regression (one-vs-rest)
    double logistic_lr = 0.1;
    int logistic_max_iter = 2000;
    double logistic_tol = 1e-6;
    double logistic_l2 = 1e-4;
    // linear SVM (one-vs-one)
    double svm_c = 1.0;
    int svm_iters = 2000;
    // Gaussian naive Bayes
    double nb_var_floor_rel = 1e-9;
    // decision tree
    int tree_max_depth = 0;  // 0 = unlimited
    int tree_min_leaf = 1;
    // random forest
    int forest_trees = 100;
    bool forest_bootstrap = true;
    int forest_mtry = 0;  // 0 = round(sqrt(d))

    void validate() const {
        if (!(logistic_lr > 0.0) || logistic_max_iter < 1 || !(logistic_tol > 0.0) ||
            !(logistic_l2 >= 0.0))
            throw ConfigError("hyper: invalid logistic settings");
        if (!(svm_c > 0.0) || svm_iters < 1)
            throw ConfigError("hyper: invalid svm settings");
        if (!(nb_var_floor_rel >= 0.0))
            throw ConfigError("hyper: invalid naive-bayes variance floor");
        if (tree_max_depth < 0 || tree_min_leaf < 1)
            throw ConfigError("hyper: invalid tree settings");
        if (forest_trees < 1 || forest_mtry < 0)
            throw ConfigError("hyper: invalid forest settings");
    }
};

}  // namespace gwshm
