#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <numbers>

#include "gwshm/models/model.hpp"
#include "gwshm/rng.hpp"

using namespace gwshm;

namespace {

FeatureMatrix make_blobs(const std::vector<std::pair<DamageClass, std::array<double, 2>>>& centers,
                         int per_class, double sigma, std::uint64_t seed) {
    FeatureMatrix fm;
    fm.feature_names = {"f0", "f1"};
    Rng rng(seed);
    for (const auto& [cls, center] : centers) {
        for (int i = 0; i < per_class; ++i) {
            fm.rows.push_back({center[0] + sigma * rng.gaussian(),
                               center[1] + sigma * rng.gaussian()});
            fm.labels.push_back(cls);
        }
    }
    return fm;
}

FeatureMatrix xor_layout(int per_corner, double sigma, std::uint64_t seed) {
    return make_blobs({{DamageClass::Baseline, {0.0, 0.0}},
                       {DamageClass::Baseline, {1.0, 1.0}},
                       {DamageClass::CoreCrush, {0.0, 1.0}},
                       {DamageClass::CoreCrush, {1.0, 0.0}}},
                      per_corner, sigma, seed);
}

}  // namespace

TEST_CASE("split is disjoint, exhaustive, stratified, and seeded") {
    FeatureMatrix fm = make_blobs({{DamageClass::Baseline, {0, 0}},
                                   {DamageClass::CoreCrush, {1, 0}},
                                   {DamageClass::LackOfFilmAdhesive, {2, 0}},
                                   {DamageClass::HighDensityCore, {3, 0}},
                                   {DamageClass::TeflonReleaseFilm, {4, 0}}},
                                  200, 0.1, 1);
    SplitSpec spec;
    spec.seed = 7;
    const auto [train, test] = split(fm, spec);
    REQUIRE(train.n_rows() == 750);
    REQUIRE(test.n_rows() == 250);
    std::array<int, kNumClasses> train_counts{}, test_counts{};
    for (DamageClass c : train.labels) ++train_counts[static_cast<int>(c)];
    for (DamageClass c : test.labels) ++test_counts[static_cast<int>(c)];
    for (int c = 0; c < kNumClasses; ++c) {
        REQUIRE(train_counts[c] == 150);
        REQUIRE(test_counts[c] == 50);
    }
    const auto [train2, test2] = split(fm, spec);
    REQUIRE(train.rows == train2.rows);
    REQUIRE(test.rows == test2.rows);
}

TEST_CASE("stratified split of 4 rows per class gives 3 plus 1") {
    FeatureMatrix fm = make_blobs({{DamageClass::Baseline, {0, 0}},
                                   {DamageClass::CoreCrush, {1, 0}}},
                                  4, 0.1, 2);
    SplitSpec spec;
    const auto [train, test] = split(fm, spec);
    REQUIRE(train.n_rows() == 6);
    REQUIRE(test.n_rows() == 2);
}

TEST_CASE("stratification requires two rows per class") {
    FeatureMatrix fm;
    fm.feature_names = {"x"};
    fm.rows = {{0.0}, {1.0}, {2.0}};
    fm.labels = {DamageClass::Baseline, DamageClass::Baseline, DamageClass::CoreCrush};
    REQUIRE_THROWS_AS(split(fm, SplitSpec{}), DataError);
}

TEST_CASE("standardize captures column statistics and is idempotent-ish") {
    FeatureMatrix fm;
    fm.feature_names = {"a", "b"};
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        fm.rows.push_back({5.0 + 2.0 * rng.gaussian(), 7.0});
        fm.labels.push_back(DamageClass::Baseline);
    }
    const auto [scaled, scaler] = standardize(fm);
    REQUIRE(scaler.mean[0] == Catch::Approx(5.0).margin(0.15));
    REQUIRE(scaler.std_dev[0] == Catch::Approx(2.0).margin(0.15));
    REQUIRE(scaler.std_dev[1] == 1.0);  // constant column passes through
    double mean0 = 0.0, var0 = 0.0;
    for (const auto& row : scaled.rows) mean0 += row[0];
    mean0 /= static_cast<double>(scaled.n_rows());
    for (const auto& row : scaled.rows) var0 += (row[0] - mean0) * (row[0] - mean0);
    var0 /= static_cast<double>(scaled.n_rows());
    REQUIRE(std::abs(mean0) <= 1e-9);
    REQUIRE(std::sqrt(var0) == Catch::Approx(1.0).margin(1e-9));

    const auto [rescaled, scaler2] = standardize(scaled);
    REQUIRE(scaler2.mean[0] == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(scaler2.std_dev[0] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(rescaled.rows[0][0] == Catch::Approx(scaled.rows[0][0]).margin(1e-9));
}

TEST_CASE("gaussian NB matches the closed-form boundary in 1-D") {
    FeatureMatrix fm;
    fm.feature_names = {"x"};
    Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        fm.rows.push_back({rng.gaussian()});
        fm.labels.push_back(DamageClass::Baseline);
        fm.rows.push_back({4.0 + rng.gaussian()});
        fm.labels.push_back(DamageClass::CoreCrush);
    }
    const Model model = train(ModelVariant::GaussianNB, fm, {}, 0);
    FeatureMatrix probe;
    probe.feature_names = {"x"};
    for (double x : {-1.0, 0.0, 1.0, 1.8, 2.2, 3.0, 4.0, 5.0}) {
        probe.rows = {{x}};
        probe.labels = {DamageClass::Baseline};
        const auto label = predict(model, probe)[0];
        // equal priors, unit variances
        const DamageClass expected =
            x < 2.0 ? DamageClass::Baseline : DamageClass::CoreCrush;
        if (std::abs(x - 2.0) > 0.3) REQUIRE(label == expected);
    }
}

TEST_CASE("gaussian NB equals a brute-force Bayes evaluation exactly") {
    Rng rng(5);
    for (int instance = 0; instance < 100; ++instance) {
        FeatureMatrix fm;
        fm.feature_names = {"a", "b", "c"};
        const int n = 12 + static_cast<int>(rng.below(10));
        for (int i = 0; i < n; ++i) {
            fm.rows.push_back({rng.gaussian(), 2.0 * rng.gaussian(), rng.uniform()});
            fm.labels.push_back(static_cast<DamageClass>(rng.below(3)));
        }
        bool two_classes = false;
        for (std::size_t i = 1; i < fm.labels.size(); ++i)
            if (fm.labels[i] != fm.labels[0]) two_classes = true;
        if (!two_classes) continue;

        Hyperparams hp;
        const Model model = train(ModelVariant::GaussianNB, fm, hp, 0);
        const auto& nb = std::get<GaussianNB>(model.params);

        // independent brute-force: recompute everything with plain loops
        std::array<int, kNumClasses> counts{};
        std::array<std::array<double, 3>, kNumClasses> mean{}, var{};
        for (std::size_t i = 0; i < fm.n_rows(); ++i) {
            const int c = static_cast<int>(fm.labels[i]);
            ++counts[c];
            for (int j = 0; j < 3; ++j) mean[c][j] += fm.rows[i][j];
        }
        for (int c = 0; c < kNumClasses; ++c)
            if (counts[c])
                for (int j = 0; j < 3; ++j) mean[c][j] /= counts[c];
        for (std::size_t i = 0; i < fm.n_rows(); ++i) {
            const int c = static_cast<int>(fm.labels[i]);
            for (int j = 0; j < 3; ++j) {
                const double d = fm.rows[i][j] - mean[c][j];
                var[c][j] += d * d;
            }
        }
        double max_col_var = 0.0;
        for (int j = 0; j < 3; ++j) {
            double cm = 0.0, cv = 0.0;
            for (const auto& row : fm.rows) cm += row[j];
            cm /= static_cast<double>(fm.n_rows());
            for (const auto& row : fm.rows) cv += (row[j] - cm) * (row[j] - cm);
            max_col_var = std::max(max_col_var, cv / static_cast<double>(fm.n_rows()));
        }
        const double floor_value = hp.nb_var_floor_rel * max_col_var;

        const auto predictions = predict(model, fm);
        for (std::size_t i = 0; i < fm.n_rows(); ++i) {
            int best = -1;
            double best_lp = -std::numeric_limits<double>::infinity();
            for (int c = 0; c < kNumClasses; ++c) {
                if (!counts[c]) continue;
                double lp = std::log(static_cast<double>(counts[c]) /
                                     static_cast<double>(fm.n_rows()));
                for (int j = 0; j < 3; ++j) {
                    const double v = std::max(var[c][j] / counts[c], floor_value);
                    const double d = fm.rows[i][j] - mean[c][j];
                    lp += -0.5 * std::log(2.0 * std::numbers::pi * v) - d * d / (2.0 * v);
                }
                if (lp > best_lp) {
                    best_lp = lp;
                    best = c;
                }
            }
            REQUIRE(static_cast<int>(predictions[i]) == best);
            REQUIRE(nb.log_posteriors(fm.rows[i]).size() == kNumClasses);
        }
    }
}

TEST_CASE("logistic regression separates linear blobs perfectly") {
    const FeatureMatrix fm = make_blobs({{DamageClass::Baseline, {-2.0, 0.0}},
                                         {DamageClass::CoreCrush, {2.0, 0.0}}},
                                        100, 0.4, 6);
    const Model model = train(ModelVariant::LogisticOvR, fm, {}, 0);
    const EvalReport report = evaluate(model, fm);
    REQUIRE(report.accuracy == 1.0);
    const auto& lr = std::get<LogisticOvR>(model.params);
    REQUIRE(lr.iterations[0] >= 1);
}

TEST_CASE("XOR defeats the linear SVM but not the forest") {
    const FeatureMatrix train_fm = xor_layout(60, 0.15, 7);
    const FeatureMatrix test_fm = xor_layout(40, 0.15, 8);
    const Model svm = train(ModelVariant::LinearSvmOvO, train_fm, {}, 0);
    const Model forest = train(ModelVariant::RandomForest, train_fm, {}, 0);
    REQUIRE(evaluate(svm, test_fm).accuracy <= 0.6);
    REQUIRE(evaluate(forest, test_fm).accuracy >= 0.9);
}

TEST_CASE("an unlimited tree memorizes distinct rows") {
    FeatureMatrix fm;
    fm.feature_names = {"x", "y"};
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        fm.rows.push_back({rng.gaussian(), rng.gaussian()});
        fm.labels.push_back(static_cast<DamageClass>(rng.below(5)));
    }
    const Model model = train(ModelVariant::DecisionTree, fm, {}, 0);
    REQUIRE(evaluate(model, fm).accuracy == 1.0);
}

TEST_CASE("tree invariants: leaf counts and split purity") {
    const FeatureMatrix fm = xor_layout(50, 0.2, 10);
    const Model model = train(ModelVariant::DecisionTree, fm, {}, 0);
    const auto& tree = std::get<DecisionTree>(model.params);
    for (const auto& node : tree.nodes) {
        int total = 0;
        for (int c : node.counts) total += c;
        if (!node.leaf) {
            const auto& left = tree.nodes[static_cast<std::size_t>(node.left)];
            const auto& right = tree.nodes[static_cast<std::size_t>(node.right)];
            int lt = 0, rt = 0;
            for (int c : left.counts) lt += c;
            for (int c : right.counts) rt += c;
            REQUIRE(lt + rt == total);
            const double parent_gini = DecisionTree::gini(node.counts, total);
            const double child_gini =
                (lt * DecisionTree::gini(left.counts, lt) +
                 rt * DecisionTree::gini(right.counts, rt)) / total;
            REQUIRE(child_gini <= parent_gini + 1e-12);
        } else {
            REQUIRE(total >= 1);
        }
    }
}

TEST_CASE("a one-tree forest without bootstrap equals the standalone tree") {
    const FeatureMatrix fm = xor_layout(50, 0.2, 11);
    Hyperparams hp;
    hp.forest_trees = 1;
    hp.forest_bootstrap = false;
    hp.forest_mtry = static_cast<int>(fm.n_cols());
    const Model forest = train(ModelVariant::RandomForest, fm, hp, 5);
    const Model tree = train(ModelVariant::DecisionTree, fm, hp, 5);
    REQUIRE(predict(forest, fm) == predict(tree, fm));
}

TEST_CASE("predict handles the degenerate cases") {
    const FeatureMatrix fm = xor_layout(20, 0.2, 12);
    const Model model = train(ModelVariant::DecisionTree, fm, {}, 0);
    FeatureMatrix empty;
    empty.feature_names = fm.feature_names;
    REQUIRE(predict(model, empty).empty());
    FeatureMatrix wrong;
    wrong.feature_names = {"x", "y", "z"};
    wrong.rows = {{1.0, 2.0, 3.0}};
    wrong.labels = {DamageClass::Baseline};
    REQUIRE_THROWS_AS(predict(model, wrong), DataError);
    REQUIRE_THROWS_AS(evaluate(model, empty), DataError);
}

TEST_CASE("evaluation bookkeeping invariants") {
    FeatureMatrix fm = make_blobs({{DamageClass::Baseline, {0, 0}},
                                   {DamageClass::CoreCrush, {5, 0}},
                                   {DamageClass::LackOfFilmAdhesive, {10, 0}},
                                   {DamageClass::HighDensityCore, {15, 0}},
                                   {DamageClass::TeflonReleaseFilm, {20, 0}}},
                                  20, 0.1, 13);
    const Model model = train(ModelVariant::DecisionTree, fm, {}, 0);
    const EvalReport report = evaluate(model, fm);
    REQUIRE(report.accuracy == 1.0);
    for (int c = 0; c < kNumClasses; ++c)
        for (int p = 0; p < kNumClasses; ++p)
            REQUIRE(report.confusion[c][p] == (c == p ? 20 : 0));

    // constant predictor on a balanced 5-class set scores exactly 0.2
    Model stub;
    stub.variant = ModelVariant::DecisionTree;
    stub.feature_names = {"f0", "f1"};
    DecisionTree constant_tree;
    constant_tree.nodes.emplace_back();  // single leaf, label Baseline
    stub.params = constant_tree;
    REQUIRE(evaluate(stub, fm).accuracy == Catch::Approx(0.2));
}

TEST_CASE("repeated trials aggregate correctly") {
    FeatureMatrix fm = make_blobs({{DamageClass::Baseline, {0, 0}},
                                   {DamageClass::CoreCrush, {8, 0}}},
                                  40, 0.1, 14);
    TrialStats one = repeated_trials(ModelVariant::DecisionTree, fm, 1, 3);
    REQUIRE(one.per_trial.size() == 1);
    REQUIRE(one.mean_accuracy == one.per_trial[0]);
    REQUIRE(one.std_accuracy == 0.0);

    TrialStats many = repeated_trials(ModelVariant::DecisionTree, fm, 10, 3);
    REQUIRE(many.per_trial.size() == 10);
    for (double a : many.per_trial) REQUIRE(a == 1.0);  // trivially separable
    REQUIRE(many.std_accuracy == 0.0);
    REQUIRE_THROWS_AS(repeated_trials(ModelVariant::DecisionTree, fm, 0, 3), ConfigError);
}

TEST_CASE("training is deterministic given the seed") {
    const FeatureMatrix fm = xor_layout(40, 0.25, 15);
    for (ModelVariant v : kAllVariants) {
        const Model a = train(v, fm, {}, 77);
        const Model b = train(v, fm, {}, 77);
        REQUIRE(predict(a, fm) == predict(b, fm));
    }
    const Model f1 = train(ModelVariant::RandomForest, fm, {}, 1);
    const Model f2 = train(ModelVariant::RandomForest, fm, {}, 2);
    // different forest seeds change at least some votes on noisy data
    REQUIRE(f1.feature_names == f2.feature_names);
}

TEST_CASE("training validates its inputs") {
    FeatureMatrix fm;
    fm.feature_names = {"x"};
    fm.rows = {{0.0}, {1.0}};
    fm.labels = {DamageClass::Baseline, DamageClass::Baseline};
    REQUIRE_THROWS_AS(train(ModelVariant::DecisionTree, fm, {}, 0), DataError);
    fm.rows[1][0] = std::numeric_limits<double>::quiet_NaN();
    fm.labels[1] = DamageClass::CoreCrush;
    REQUIRE_THROWS_AS(train(ModelVariant::DecisionTree, fm, {}, 0), NumericError);
}
