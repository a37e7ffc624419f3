#pragma once

#include <cmath>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/models/common.hpp"

namespace gwshm {

/// One-vs-one linear SVMs: kNumClasses*(kNumClasses-1)/2 pairwise
/// hinge-loss classifiers trained by deterministic full-batch Pegasos
/// subgradient steps, lambda = 1/(C n). Expects standardized inputs.
struct LinearSvmOvO {
    struct PairClassifier {
        int class_a = 0;  // predicted for positive margin
        int class_b = 0;
        std::vector<double> weights;
        double bias = 0.0;
    };

    std::vector<PairClassifier> pairs;

    static LinearSvmOvO fit(const std::vector<std::vector<double>>& x,
                            const std::vector<DamageClass>& y, const Hyperparams& hp) {
        const std::size_t d = x.empty() ? 0 : x[0].size();
        LinearSvmOvO model;
        for (int a = 0; a < kNumClasses; ++a) {
            for (int b = a + 1; b < kNumClasses; ++b) {
                std::vector<const std::vector<double>*> rows;
                std::vector<double> sign;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (static_cast<int>(y[i]) == a) {
                        rows.push_back(&x[i]);
                        sign.push_back(1.0);
                    } else if (static_cast<int>(y[i]) == b) {
                        rows.push_back(&x[i]);
                        sign.push_back(-1.0);
                    }
                }
                if (rows.empty()) continue;
                model.pairs.push_back(fit_pair(rows, sign, d, a, b, hp));
            }
        }
        return model;
    }

    /// Majority vote over the pairwise classifiers; ties resolve to the
    /// lowest class id.
    int vote(const std::vector<double>& x) const {
        int counts[kNumClasses] = {0};
        for (const auto& p : pairs) {
            double z = p.bias;
            for (std::size_t j = 0; j < x.size(); ++j) z += p.weights[j] * x[j];
            ++counts[z >= 0.0 ? p.class_a : p.class_b];
        }
        int best = 0;
        for (int c = 1; c < kNumClasses; ++c)
            if (counts[c] > counts[best]) best = c;
        return best;
    }

private:
    static PairClassifier fit_pair(const std::vector<const std::vector<double>*>& rows,
                                   const std::vector<double>& sign, std::size_t d,
                                   int a, int b, const Hyperparams& hp) {
        const auto n = static_cast<double>(rows.size());
        const double lambda = 1.0 / (hp.svm_c * n);
        const double radius = 1.0 / std::sqrt(lambda);

        PairClassifier pc;
        pc.class_a = a;
        pc.class_b = b;
        pc.weights.assign(d, 0.0);

        for (int t = 1; t <= hp.svm_iters; ++t) {
            const double eta = 1.0 / (lambda * static_cast<double>(t));
            std::vector<double> grad(d, 0.0);
            double grad_b = 0.0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                double z = pc.bias;
                for (std::size_t j = 0; j < d; ++j) z += pc.weights[j] * (*rows[i])[j];
                if (sign[i] * z < 1.0) {
                    for (std::size_t j = 0; j < d; ++j)
                        grad[j] -= sign[i] * (*rows[i])[j];
                    grad_b -= sign[i];
                }
            }
            double norm_sq = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                pc.weights[j] -= eta * (lambda * pc.weights[j] + grad[j] / n);
                norm_sq += pc.weights[j] * pc.weights[j];
            }
            pc.bias -= eta * grad_b / n;
            // Pegasos projection keeps the iterates bounded
            if (norm_sq > radius * radius) {
                const double shrink = radius / std::sqrt(norm_sq);
                for (double& w : pc.weights) w *= shrink;
            }
            if (!std::isfinite(pc.bias))
                throw NumericError("svm subgradient descent diverged at iteration " +
                                   std::to_string(t));
        }
        return pc;
    }
};

}  // namespace gwshm
