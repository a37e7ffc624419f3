#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/features.hpp"

namespace gwshm {

/// Standard sample Pearson correlation.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw DataError("pearson: column lengths differ");
    if (x.size() < 2)
        throw DataError("pearson: need at least 2 observations");
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw NumericError("pearson: constant feature (zero variance)");
    double r = sxy / std::sqrt(sxx * syy);
    if (r > 1.0) r = 1.0;
    if (r < -1.0) r = -1.0;
    return r;
}

struct CorrelationMatrix {
    std::vector<std::vector<double>> values;  // d x d, NaN where undefined
    std::vector<std::string> feature_names;
};

/// Pairwise Pearson correlations; constant columns get NaN rows/columns
/// (diagonal included) rather than raising.
inline CorrelationMatrix correlation_matrix(const FeatureMatrix& fm) {
    fm.validate();
    const std::size_t d = fm.n_cols();
    CorrelationMatrix cm;
    cm.feature_names = fm.feature_names;
    cm.values.assign(d, std::vector<double>(d, std::nan("")));

    std::vector<std::vector<double>> cols(d);
    std::vector<bool> constant(d, false);
    for (std::size_t j = 0; j < d; ++j) {
        cols[j] = fm.column(j);
        constant[j] = true;
        for (double v : cols[j])
            if (v != cols[j][0]) {
                constant[j] = false;
                break;
            }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (constant[i]) continue;
        cm.values[i][i] = 1.0;
        for (std::size_t j = i + 1; j < d; ++j) {
            if (constant[j]) continue;
            const double r = pearson(cols[i], cols[j]);
            cm.values[i][j] = r;
            cm.values[j][i] = r;
        }
    }
    return cm;
}

struct DroppedFeature {
    std::string id;
    std::string representative;  // kept feature it correlated with, or ""
    double abs_correlation = 0.0;
    std::string reason;  // "correlated" or "zero variance"
};

struct SelectionReport {
    std::vector<std::string> kept;
    std::vector<DroppedFeature> dropped;
    double threshold = 0.95;
};

/// Greedy correlation filter in fixed column order: a feature is dropped
/// if |rho| >= threshold against any earlier kept feature, so a group of
/// N mutually correlated features loses exactly N-1 members and the
/// earliest one survives. Zero-variance columns are dropped first.
inline std::pair<FeatureMatrix, SelectionReport> filter_features(
    const FeatureMatrix& fm, double threshold = 0.95) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ConfigError("filter_features: threshold must be in (0, 1], got " +
                          std::to_string(threshold));
    const CorrelationMatrix cm = correlation_matrix(fm);
    const std::size_t d = fm.n_cols();

    SelectionReport report;
    report.threshold = threshold;
    std::vector<std::size_t> kept_idx;
    for (std::size_t j = 0; j < d; ++j) {
        if (std::isnan(cm.values[j][j])) {
            report.dropped.push_back({fm.feature_names[j], "", 0.0, "zero variance"});
            continue;
        }
        bool keep = true;
        for (std::size_t k : kept_idx) {
            const double r = std::abs(cm.values[j][k]);
            if (r >= threshold) {
                report.dropped.push_back(
                    {fm.feature_names[j], fm.feature_names[k], r, "correlated"});
                keep = false;
                break;
            }
        }
        if (keep) {
            kept_idx.push_back(j);
            report.kept.push_back(fm.feature_names[j]);
        }
    }
    if (kept_idx.empty())
        throw DataError("filter_features: every feature was dropped");

    FeatureMatrix out;
    out.bank = fm.bank;
    out.baseline_path = fm.baseline_path;
    out.labels = fm.labels;
    out.feature_names = report.kept;
    out.rows.reserve(fm.n_rows());
    for (const auto& row : fm.rows) {
        std::vector<double> r(kept_idx.size());
        for (std::size_t j = 0; j < kept_idx.size(); ++j) r[j] = row[kept_idx[j]];
        out.rows.push_back(std::move(r));
    }
    return {out, report};
}

}  // namespace gwshm
