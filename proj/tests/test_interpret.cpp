#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gwshm/interpret.hpp"
#include "gwshm/rng.hpp"

using namespace gwshm;

namespace {

// two informative columns; column "ignored" is never used by the model
FeatureMatrix labelled_data(int n_per_class, std::uint64_t seed) {
    FeatureMatrix fm;
    fm.feature_names = {"signal", "ignored"};
    Rng rng(seed);
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < n_per_class; ++i) {
            fm.rows.push_back({4.0 * c + rng.gaussian(), rng.gaussian()});
            fm.labels.push_back(static_cast<DamageClass>(c));
        }
    }
    return fm;
}

// hand-built stub: splits on feature 0 only
Model stub_model() {
    Model model;
    model.variant = ModelVariant::DecisionTree;
    model.feature_names = {"signal", "ignored"};
    DecisionTree tree;
    DecisionTree::Node root;
    root.leaf = false;
    root.feature = 0;
    root.threshold = 2.0;
    root.left = 1;
    root.right = 2;
    tree.nodes.push_back(root);
    DecisionTree::Node left;
    left.label = 0;
    tree.nodes.push_back(left);
    DecisionTree::Node right;
    right.label = 1;
    tree.nodes.push_back(right);
    model.params = tree;
    return model;
}

}  // namespace

TEST_CASE("a feature the model ignores has exactly zero importance") {
    const FeatureMatrix test = labelled_data(100, 1);
    const Model model = stub_model();
    const ImportanceReport report = permutation_importance(model, test, 25, 42);
    REQUIRE(report.per_feature.size() == 2);
    REQUIRE(report.per_feature[1].feature == "ignored");
    REQUIRE(report.per_feature[1].mean_drop == 0.0);
    REQUIRE(report.per_feature[1].std_drop == 0.0);
    REQUIRE(report.per_feature[0].mean_drop > 0.3);
}

TEST_CASE("the original matrix is never modified") {
    const FeatureMatrix test = labelled_data(50, 2);
    const FeatureMatrix copy = test;
    permutation_importance(stub_model(), test, 5, 1);
    REQUIRE(test.rows == copy.rows);
}

TEST_CASE("reports are deterministic given the seed") {
    const FeatureMatrix test = labelled_data(60, 3);
    const Model model = stub_model();
    const auto a = permutation_importance(model, test, 10, 9);
    const auto b = permutation_importance(model, test, 10, 9);
    for (std::size_t i = 0; i < a.per_feature.size(); ++i) {
        REQUIRE(a.per_feature[i].mean_drop == b.per_feature[i].mean_drop);
        REQUIRE(a.per_feature[i].std_drop == b.per_feature[i].std_drop);
    }
    REQUIRE(a.baseline_accuracy == b.baseline_accuracy);
}

TEST_CASE("an injected pure-noise column stays near zero importance") {
    // importance is defined on held-out data, where an uninformative
    // column cannot contribute
    FeatureMatrix fm = labelled_data(300, 4);
    SplitSpec spec;
    spec.seed = 11;
    const auto [train_fm, test_fm] = split(fm, spec);
    const Model model = train(ModelVariant::RandomForest, train_fm, {}, 5);
    const ImportanceReport report = permutation_importance(model, test_fm, 20, 6);
    for (const auto& f : report.per_feature)
        if (f.feature == "ignored") REQUIRE(std::abs(f.mean_drop) <= 0.02);
}

TEST_CASE("argument validation") {
    const FeatureMatrix test = labelled_data(10, 7);
    REQUIRE_THROWS_AS(permutation_importance(stub_model(), test, 0, 1), ConfigError);
    FeatureMatrix empty;
    empty.feature_names = {"signal", "ignored"};
    REQUIRE_THROWS_AS(permutation_importance(stub_model(), empty, 5, 1), DataError);
}
