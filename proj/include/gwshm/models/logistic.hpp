#pragma once

#include <cmath>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/models/common.hpp"

namespace gwshm {

/// One-vs-rest logistic regression trained by full-batch gradient
/// descent on L2-regularized binary cross-entropy. Expects standardized
/// inputs; the owning Model applies the scaler.
struct LogisticOvR {
    std::vector<std::vector<double>> weights;  // per class, d entries
    std::vector<double> bias;                  // per class
    std::vector<int> iterations;               // per class, iterations used

    static double sigmoid(double z) {
        return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z))
                        : std::exp(z) / (1.0 + std::exp(z));
    }

    static LogisticOvR fit(const std::vector<std::vector<double>>& x,
                           const std::vector<DamageClass>& y, const Hyperparams& hp) {
        const std::size_t n = x.size();
        const std::size_t d = n ? x[0].size() : 0;
        LogisticOvR model;
        model.weights.assign(kNumClasses, std::vector<double>(d, 0.0));
        model.bias.assign(kNumClasses, 0.0);
        model.iterations.assign(kNumClasses, 0);

        for (int c = 0; c < kNumClasses; ++c) {
            std::vector<double> target(n);
            for (std::size_t i = 0; i < n; ++i)
                target[i] = fit_target(y[i], c);

            auto& w = model.weights[static_cast<std::size_t>(c)];
            double& b = model.bias[static_cast<std::size_t>(c)];
            double prev_loss = loss(x, target, w, b, hp.logistic_l2);
            int iter = 0;
            for (; iter < hp.logistic_max_iter; ++iter) {
                std::vector<double> grad_w(d, 0.0);
                double grad_b = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double z = b;
                    for (std::size_t j = 0; j < d; ++j) z += w[j] * x[i][j];
                    const double err = sigmoid(z) - target[i];
                    for (std::size_t j = 0; j < d; ++j) grad_w[j] += err * x[i][j];
                    grad_b += err;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    grad_w[j] = grad_w[j] / static_cast<double>(n) + hp.logistic_l2 * w[j];
                    w[j] -= hp.logistic_lr * grad_w[j];
                }
                b -= hp.logistic_lr * grad_b / static_cast<double>(n);

                const double cur_loss = loss(x, target, w, b, hp.logistic_l2);
                if (!std::isfinite(cur_loss))
                    throw NumericError("logistic regression diverged after " +
                                       std::to_string(iter + 1) + " iterations");
                if (std::abs(prev_loss - cur_loss) < hp.logistic_tol) {
                    ++iter;
                    break;
                }
                prev_loss = cur_loss;
            }
            model.iterations[static_cast<std::size_t>(c)] = iter;
        }
        return model;
    }

    /// Scores are the linear logits; argmax is the prediction.
    std::vector<double> scores(const std::vector<double>& x) const {
        std::vector<double> s(kNumClasses, 0.0);
        for (int c = 0; c < kNumClasses; ++c) {
            double z = bias[static_cast<std::size_t>(c)];
            const auto& w = weights[static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < x.size(); ++j) z += w[j] * x[j];
            s[static_cast<std::size_t>(c)] = z;
        }
        return s;
    }

private:
    static double fit_target(DamageClass label, int cls) {
        return static_cast<int>(label) == cls ? 1.0 : 0.0;
    }

    static double loss(const std::vector<std::vector<double>>& x,
                       const std::vector<double>& target,
                       const std::vector<double>& w, double b, double l2) {
        double total = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double z = b;
            for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * x[i][j];
            // log(1 + exp(-|z|)) form avoids overflow
            const double margin = target[i] > 0.5 ? z : -z;
            total += margin >= 0.0 ? std::log1p(std::exp(-margin))
                                   : -margin + std::log1p(std::exp(margin));
        }
        double reg = 0.0;
        for (double v : w) reg += v * v;
        return total / static_cast<double>(x.size()) + 0.5 * l2 * reg;
    }
};

}  // namespace gwshm
