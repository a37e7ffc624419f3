#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/models/common.hpp"
#include "gwshm/rng.hpp"

namespace gwshm {

/// CART classification tree with Gini splits, grown to purity unless a
/// depth cap is set. Split search is exhaustive over midpoints of
/// consecutive distinct values; ties prefer the lowest feature index,
/// then the lowest threshold, keeping training deterministic.
struct DecisionTree {
    struct Node {
        bool leaf = true;
        int feature = -1;
        double threshold = 0.0;
        int left = -1;   // index into nodes
        int right = -1;
        int label = 0;   // majority class at this node
        std::array<int, kNumClasses> counts{};  // rows routed here at fit time
    };

    std::vector<Node> nodes;

    static double gini(const std::array<int, kNumClasses>& counts, int total) {
        if (total == 0) return 0.0;
        double g = 1.0;
        for (int c : counts) {
            const double p = static_cast<double>(c) / total;
            g -= p * p;
        }
        return g;
    }

    /// mtry = 0 searches every feature; otherwise a per-node random
    /// subset of that size is drawn from *rng (random-forest mode).
    static DecisionTree fit(const std::vector<std::vector<double>>& x,
                            const std::vector<DamageClass>& y, const Hyperparams& hp,
                            int mtry = 0, Rng* rng = nullptr) {
        if (x.empty()) throw DataError("decision tree: empty training set");
        DecisionTree tree;
        std::vector<std::size_t> idx(x.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        tree.grow(x, y, idx, hp, 0, mtry, rng);
        return tree;
    }

    int predict_one(const std::vector<double>& row) const {
        int at = 0;
        while (!nodes[static_cast<std::size_t>(at)].leaf) {
            const Node& nd = nodes[static_cast<std::size_t>(at)];
            at = row[static_cast<std::size_t>(nd.feature)] < nd.threshold ? nd.left
                                                                          : nd.right;
        }
        return nodes[static_cast<std::size_t>(at)].label;
    }

private:
    int grow(const std::vector<std::vector<double>>& x,
             const std::vector<DamageClass>& y, std::vector<std::size_t>& idx,
             const Hyperparams& hp, int depth, int mtry, Rng* rng) {
        const int node_id = static_cast<int>(nodes.size());
        nodes.emplace_back();

        std::array<int, kNumClasses> counts{};
        for (std::size_t i : idx) ++counts[static_cast<std::size_t>(y[i])];
        const int total = static_cast<int>(idx.size());

        int majority = 0;
        for (int c = 1; c < kNumClasses; ++c)
            if (counts[c] > counts[majority]) majority = c;
        nodes[static_cast<std::size_t>(node_id)].counts = counts;
        nodes[static_cast<std::size_t>(node_id)].label = majority;

        const double parent_gini = gini(counts, total);
        const bool depth_capped = hp.tree_max_depth > 0 && depth >= hp.tree_max_depth;
        if (parent_gini == 0.0 || depth_capped ||
            total < 2 * hp.tree_min_leaf || idx.size() < 2)
            return node_id;

        const std::size_t d = x[idx[0]].size();
        std::vector<int> features;
        if (mtry > 0 && static_cast<std::size_t>(mtry) < d && rng) {
            std::vector<int> all(d);
            for (std::size_t j = 0; j < d; ++j) all[j] = static_cast<int>(j);
            rng->shuffle(all);
            features.assign(all.begin(), all.begin() + mtry);
            std::sort(features.begin(), features.end());
        } else {
            features.resize(d);
            for (std::size_t j = 0; j < d; ++j) features[j] = static_cast<int>(j);
        }

        int best_feature = -1;
        double best_threshold = 0.0;
        double best_impurity = parent_gini;
        std::vector<std::pair<double, DamageClass>> ordered(idx.size());
        for (int f : features) {
            for (std::size_t k = 0; k < idx.size(); ++k)
                ordered[k] = {x[idx[k]][static_cast<std::size_t>(f)], y[idx[k]]};
            std::sort(ordered.begin(), ordered.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            std::array<int, kNumClasses> left{};
            for (std::size_t k = 0; k + 1 < ordered.size(); ++k) {
                ++left[static_cast<std::size_t>(ordered[k].second)];
                if (ordered[k].first == ordered[k + 1].first) continue;
                const int nl = static_cast<int>(k) + 1;
                const int nr = total - nl;
                if (nl < hp.tree_min_leaf || nr < hp.tree_min_leaf) continue;
                std::array<int, kNumClasses> right{};
                for (int c = 0; c < kNumClasses; ++c) right[c] = counts[c] - left[c];
                const double impurity =
                    (nl * gini(left, nl) + nr * gini(right, nr)) / total;
                if (impurity + 1e-12 < best_impurity) {
                    best_impurity = impurity;
                    best_feature = f;
                    best_threshold = ordered[k].first +
                                     0.5 * (ordered[k + 1].first - ordered[k].first);
                }
            }
        }
        if (best_feature < 0) return node_id;

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : idx)
            (x[i][static_cast<std::size_t>(best_feature)] < best_threshold ? left_idx
                                                                           : right_idx)
                .push_back(i);
        if (left_idx.empty() || right_idx.empty()) return node_id;

        idx.clear();
        idx.shrink_to_fit();
        const int left_id = grow(x, y, left_idx, hp, depth + 1, mtry, rng);
        const int right_id = grow(x, y, right_idx, hp, depth + 1, mtry, rng);
        Node& nd = nodes[static_cast<std::size_t>(node_id)];
        nd.leaf = false;
        nd.feature = best_feature;
        nd.threshold = best_threshold;
        nd.left = left_id;
        nd.right = right_id;
        return node_id;
    }
};

}  // namespace gwshm
