#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/models/common.hpp"

namespace gwshm {

/// Gaussian naive Bayes: per-class feature means and variances with a
/// relative variance floor, class priors from training frequencies.
/// Consumes raw (unscaled) features.
struct GaussianNB {
    std::vector<std::vector<double>> means;      // [class][feature]
    std::vector<std::vector<double>> variances;  // [class][feature], floored
    std::vector<double> log_priors;              // [class]; -inf for absent classes

    static GaussianNB fit(const std::vector<std::vector<double>>& x,
                          const std::vector<DamageClass>& y, const Hyperparams& hp) {
        const std::size_t d = x.empty() ? 0 : x[0].size();
        GaussianNB model;
        model.means.assign(kNumClasses, std::vector<double>(d, 0.0));
        model.variances.assign(kNumClasses, std::vector<double>(d, 0.0));
        model.log_priors.assign(kNumClasses, -std::numeric_limits<double>::infinity());

        std::vector<std::size_t> counts(kNumClasses, 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const auto c = static_cast<std::size_t>(y[i]);
            ++counts[c];
            for (std::size_t j = 0; j < d; ++j) model.means[c][j] += x[i][j];
        }
        for (std::size_t c = 0; c < kNumClasses; ++c)
            if (counts[c])
                for (double& mj : model.means[c]) mj /= static_cast<double>(counts[c]);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const auto c = static_cast<std::size_t>(y[i]);
            for (std::size_t j = 0; j < d; ++j) {
                const double dev = x[i][j] - model.means[c][j];
                model.variances[c][j] += dev * dev;
            }
        }

        // floor is relative to the largest pooled column variance
        double max_col_var = 0.0;
        std::vector<double> col_mean(d, 0.0);
        for (const auto& row : x)
            for (std::size_t j = 0; j < d; ++j) col_mean[j] += row[j];
        for (double& m : col_mean) m /= static_cast<double>(x.size());
        for (std::size_t j = 0; j < d; ++j) {
            double v = 0.0;
            for (const auto& row : x) v += (row[j] - col_mean[j]) * (row[j] - col_mean[j]);
            max_col_var = std::max(max_col_var, v / static_cast<double>(x.size()));
        }
        const double floor_value =
            hp.nb_var_floor_rel * (max_col_var > 0.0 ? max_col_var : 1.0);

        for (std::size_t c = 0; c < kNumClasses; ++c) {
            if (!counts[c]) continue;
            for (std::size_t j = 0; j < d; ++j)
                model.variances[c][j] = std::max(
                    model.variances[c][j] / static_cast<double>(counts[c]), floor_value);
            model.log_priors[c] = std::log(static_cast<double>(counts[c]) /
                                           static_cast<double>(x.size()));
        }
        return model;
    }

    std::vector<double> log_posteriors(const std::vector<double>& x) const {
        std::vector<double> lp(kNumClasses, -std::numeric_limits<double>::infinity());
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            if (std::isinf(log_priors[c])) continue;
            double acc = log_priors[c];
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double var = variances[c][j];
                const double dev = x[j] - means[c][j];
                acc += -0.5 * std::log(2.0 * std::numbers::pi * var) -
                       dev * dev / (2.0 * var);
            }
            lp[c] = acc;
        }
        return lp;
    }
};

}  // namespace gwshm
