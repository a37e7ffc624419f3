#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "gwshm/models/tree.hpp"

namespace gwshm {

/// Bagged CART ensemble: each tree trains on a bootstrap resample with a
/// random sqrt(d) feature subset per split, prediction by majority vote.
/// Every tree stream derives from (seed, tree index), so training order
/// does not affect the result.
struct RandomForest {
    std::vector<DecisionTree> trees;
    int mtry = 0;

    static RandomForest fit(const std::vector<std::vector<double>>& x,
                            const std::vector<DamageClass>& y, const Hyperparams& hp,
                            std::uint64_t seed) {
        if (x.empty()) throw DataError("random forest: empty training set");
        const std::size_t d = x[0].size();
        RandomForest model;
        model.mtry = hp.forest_mtry > 0
                         ? hp.forest_mtry
                         : static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
        model.trees.reserve(static_cast<std::size_t>(hp.forest_trees));

        for (int t = 0; t < hp.forest_trees; ++t) {
            Rng rng(derive_seed(seed, {0x464f5245u, static_cast<std::uint64_t>(t)}));
            std::vector<std::vector<double>> bx;
            std::vector<DamageClass> by;
            if (hp.forest_bootstrap) {
                bx.reserve(x.size());
                by.reserve(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const auto pick = static_cast<std::size_t>(rng.below(x.size()));
                    bx.push_back(x[pick]);
                    by.push_back(y[pick]);
                }
            } else {
                bx = x;
                by = y;
            }
            model.trees.push_back(DecisionTree::fit(bx, by, hp, model.mtry, &rng));
        }
        return model;
    }

    int predict_one(const std::vector<double>& row) const {
        int votes[kNumClasses] = {0};
        for (const auto& tree : trees) ++votes[tree.predict_one(row)];
        int best = 0;
        for (int c = 1; c < kNumClasses; ++c)
            if (votes[c] > votes[best]) best = c;
        return best;
    }
};

}  // namespace gwshm
