#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/fft.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

enum class FeatureBank { BaselineReferenced, BaselineFree };

inline const char* bank_name(FeatureBank b) {
    return b == FeatureBank::BaselineReferenced ? "baseline" : "baseline-free";
}

inline FeatureBank bank_from_name(const std::string& name) {
    if (name == "baseline") return FeatureBank::BaselineReferenced;
    if (name == "baseline-free") return FeatureBank::BaselineFree;
    throw ConfigError("unknown feature bank: '" + name + "' (use baseline|baseline-free)");
}

/// Fixed feature vocabulary; column order everywhere follows these lists.
inline const std::vector<std::string>& baseline_feature_ids() {
    static const std::vector<std::string> ids = {
        "CCD", "MAD", "NSED", "PPAD", "RMS", "RMSD", "SDD", "SER", "SIGMA", "VAR"};
    return ids;
}

inline const std::vector<std::string>& baseline_free_feature_ids() {
    static const std::vector<std::string> ids = {
        "SF1", "SF2", "SF3", "SF4", "SF5", "SF6", "SF7",
        "SF8", "SF9", "SF10", "SF11", "SF12", "SF13"};
    return ids;
}

inline const std::vector<std::string>& feature_ids(FeatureBank bank) {
    return bank == FeatureBank::BaselineReferenced ? baseline_feature_ids()
                                                   : baseline_free_feature_ids();
}

/// Ordered feature-id -> value map.
struct FeatureVector {
    std::vector<std::string> names;
    std::vector<double> values;

    double at(const std::string& id) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == id) return values[i];
        throw DataError("feature vector has no entry '" + id + "'");
    }

    void validate() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i]))
                throw NumericError("non-finite feature value for '" + names[i] + "'");
    }
};

namespace detail {

inline double sum_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

inline double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

}  // namespace detail

/// The ten baseline-referenced / statistical features. Integrals are
/// Riemann sums over samples; every deviation feature is a ratio in
/// which dt cancels, and the per-sample statistics use 1/T with T the
/// sample count. SDD is evaluated on one-sided DFT magnitudes with df
/// as the frequency measure.
inline FeatureVector extract_time_features(const TimeSeries& m, const TimeSeries& b) {
    m.validate();
    b.validate();
    if (m.samples.size() != b.samples.size() || m.dt != b.dt)
        throw DataError("extract_time_features: monitoring and baseline series must "
                        "share length and dt");

    const auto n = static_cast<double>(m.samples.size());
    const double energy_m = detail::sum_sq(m.samples);
    const double energy_b = detail::sum_sq(b.samples);
    if (energy_b == 0.0)
        throw NumericError("zero-energy baseline: NSED/SER/RMSD/CCD denominators vanish");
    if (energy_m == 0.0)
        throw NumericError("zero-energy monitoring signal: CCD/SDD denominators vanish");

    double cross = 0.0, diff_sq = 0.0;
    for (std::size_t i = 0; i < m.samples.size(); ++i) {
        cross += b.samples[i] * m.samples[i];
        const double d = m.samples[i] - b.samples[i];
        diff_sq += d * d;
    }

    const double mean_m = detail::mean_of(m.samples);
    double abs_dev = 0.0, var_sum = 0.0;
    for (double x : m.samples) {
        abs_dev += std::abs(x - mean_m);
        var_sum += (x - mean_m) * (x - mean_m);
    }

    const Spectrum sm = dft_magnitude(m);
    const Spectrum sb = dft_magnitude(b);
    double spec_abs_diff = 0.0, spec_energy_m = 0.0, spec_energy_b = 0.0;
    for (std::size_t k = 0; k < sm.magnitudes.size(); ++k) {
        spec_abs_diff += std::abs(sb.magnitudes[k] - sm.magnitudes[k]);
        spec_energy_m += sm.magnitudes[k] * sm.magnitudes[k];
        spec_energy_b += sb.magnitudes[k] * sb.magnitudes[k];
    }
    const double df = sm.df;

    FeatureVector out;
    out.names = baseline_feature_ids();
    out.values.resize(out.names.size());
    out.values[0] = 1.0 - std::sqrt((cross * cross) / (energy_b * energy_m));  // CCD
    out.values[1] = abs_dev / n;                                               // MAD
    out.values[2] = (energy_m - energy_b) / energy_b;                          // NSED
    out.values[3] = peak_to_peak(m) - peak_to_peak(b);                         // PPAD
    out.values[4] = std::sqrt(energy_m / n);                                   // RMS
    out.values[5] = std::sqrt(diff_sq / energy_b);                             // RMSD
    out.values[6] = std::sqrt((spec_abs_diff * df) * (spec_abs_diff * df) /
                              ((spec_energy_b * df) * (spec_energy_m * df)));  // SDD
    out.values[7] = energy_m / energy_b;                                       // SER
    out.values[8] = std::sqrt(var_sum / n);                                    // SIGMA
    out.values[9] = var_sum / n;                                               // VAR
    out.validate();
    return out;
}

/// The thirteen baseline-free statistics. SF11-SF13 are moments of the
/// one-sided DFT magnitude spectrum. SF4 as printed in its source
/// (mean(x^4) divided by its own square) collapses to 1/mean(x^4) and
/// duplicates SF2, so the default is the kurtosis-style ratio
/// mean(x^4)/mean(x^2)^2; pass sf4_as_printed to get the literal form.
inline FeatureVector extract_baseline_free(const TimeSeries& m,
                                           bool sf4_as_printed = false) {
    m.validate();
    const auto n = static_cast<double>(m.samples.size());

    double sum = 0.0, sum2 = 0.0, sum3 = 0.0, sum4 = 0.0, sum_sqrt_abs = 0.0;
    double vmax = m.samples[0], vmin = m.samples[0], max_abs = 0.0;
    for (double x : m.samples) {
        sum += x;
        sum2 += x * x;
        sum3 += x * x * x;
        sum4 += x * x * x * x;
        sum_sqrt_abs += std::sqrt(std::abs(x));
        vmax = std::max(vmax, x);
        vmin = std::min(vmin, x);
        max_abs = std::max(max_abs, std::abs(x));
    }
    if (sum2 == 0.0)
        throw NumericError("all-zero signal: SF7-SF10 are undefined");

    const double mean = sum / n;
    const double rms = std::sqrt(sum2 / n);
    const double mean_sqrt_abs = sum_sqrt_abs / n;
    double var_sum = 0.0;
    for (double x : m.samples) var_sum += (x - mean) * (x - mean);

    const Spectrum spec = dft_magnitude(m);
    const double f_mean = detail::mean_of(spec.magnitudes);
    double f_sq = 0.0, f_var = 0.0;
    for (double v : spec.magnitudes) {
        f_sq += v * v;
        f_var += (v - f_mean) * (v - f_mean);
    }
    const auto nf = static_cast<double>(spec.magnitudes.size());

    FeatureVector out;
    out.names = baseline_free_feature_ids();
    out.values.resize(out.names.size());
    out.values[0] = sum3 / n;                                   // SF1
    out.values[1] = sum4 / n;                                   // SF2
    out.values[2] = vmax - vmin;                                // SF3
    out.values[3] = sf4_as_printed
                        ? (sum4 / n) / ((sum4 / n) * (sum4 / n))
                        : (sum4 / n) / ((sum2 / n) * (sum2 / n));  // SF4
    out.values[4] = rms;                                        // SF5
    out.values[5] = std::sqrt(var_sum / n);                     // SF6
    out.values[6] = max_abs / rms;                              // SF7
    out.values[7] = rms / mean_sqrt_abs;                        // SF8
    out.values[8] = max_abs / mean_sqrt_abs;                    // SF9
    out.values[9] = max_abs / (mean_sqrt_abs * mean_sqrt_abs);  // SF10
    out.values[10] = f_sq / nf;                                 // SF11
    out.values[11] = f_var / nf;                                // SF12
    out.values[12] = f_mean;                                    // SF13
    out.validate();
    return out;
}

/// n-samples x d-features table with labels and provenance.
struct FeatureMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<DamageClass> labels;
    std::vector<std::string> feature_names;
    FeatureBank bank = FeatureBank::BaselineReferenced;
    std::string baseline_path;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return feature_names.size(); }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> col(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
        return col;
    }

    void validate() const {
        if (labels.size() != rows.size())
            throw DataError("feature matrix: row/label count mismatch");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != feature_names.size())
                throw DataError("feature matrix: ragged row " + std::to_string(i));
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (!std::isfinite(rows[i][j]))
                    throw NumericError("feature matrix: non-finite cell (" +
                                       std::to_string(i) + ", " + feature_names[j] + ")");
        }
    }
};

namespace detail {

/// Reference index for each dataset row. A monitoring series from trial
/// t is paired with baseline trial (t mod n_baseline_trials) so that both
/// sides of every deviation feature come from the same attachment
/// session, and with the matching noisy copy so that per-measurement
/// drift cancels in ratio features. A row never references itself.
inline std::vector<std::size_t> baseline_pairing(const std::vector<TimeSeries>& dataset,
                                                 const std::string& baseline_path) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < dataset.size(); ++i)
        if (dataset[i].meta.path_id == baseline_path) pool.push_back(i);
    if (pool.empty()) {
        std::string msg = "no baseline series with path '" + baseline_path +
                          "'; unpaired series:";
        for (std::size_t i = 0; i < dataset.size() && i < 5; ++i)
            msg += " " + std::string(class_name(dataset[i].meta.label)) + "/t" +
                   std::to_string(dataset[i].meta.trial);
        if (dataset.size() > 5)
            msg += " ... (" + std::to_string(dataset.size()) + " total)";
        throw DataError(msg);
    }

    std::map<int, std::vector<std::size_t>> by_trial;  // trial -> pool rows, dataset order
    for (std::size_t idx : pool) by_trial[dataset[idx].meta.trial].push_back(idx);
    std::vector<int> trials;
    for (const auto& [trial, rows] : by_trial) trials.push_back(trial);

    std::vector<std::size_t> pairing(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto trial_pos = static_cast<std::size_t>(
            ((dataset[i].meta.trial % static_cast<int>(trials.size())) +
             static_cast<int>(trials.size())) %
            static_cast<int>(trials.size()));
        std::size_t chosen = dataset.size();
        for (std::size_t step = 0; step < trials.size() && chosen == dataset.size();
             ++step) {
            const auto& cands = by_trial[trials[(trial_pos + step) % trials.size()]];
            // prefer the copy-matched reference, fall back in dataset order
            for (std::size_t cand : cands) {
                if (cand != i && dataset[cand].meta.copy == dataset[i].meta.copy) {
                    chosen = cand;
                    break;
                }
            }
            for (std::size_t k = 0; k < cands.size() && chosen == dataset.size(); ++k) {
                if (cands[k] != i) {
                    chosen = cands[k];
                    break;
                }
            }
        }
        if (chosen == dataset.size())
            throw DataError("baseline pool too small to pair series " +
                            std::to_string(i) + " with a distinct reference");
        pairing[i] = chosen;
    }
    return pairing;
}

}  // namespace detail

/// One row per series, columns in fixed vocabulary order. For the
/// baseline-referenced bank each row is paired against a baseline-path
/// series as described in detail::baseline_pairing.
inline FeatureMatrix build_feature_matrix(const std::vector<TimeSeries>& dataset,
                                          const std::string& baseline_path,
                                          FeatureBank bank) {
    if (dataset.empty())
        throw DataError("build_feature_matrix: empty dataset");

    FeatureMatrix fm;
    fm.bank = bank;
    fm.baseline_path = baseline_path;
    fm.feature_names = feature_ids(bank);
    fm.rows.reserve(dataset.size());
    fm.labels.reserve(dataset.size());

    if (bank == FeatureBank::BaselineReferenced) {
        const auto pairing = detail::baseline_pairing(dataset, baseline_path);
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            fm.rows.push_back(
                extract_time_features(dataset[i], dataset[pairing[i]]).values);
            fm.labels.push_back(dataset[i].meta.label);
        }
    } else {
        for (const auto& series : dataset) {
            fm.rows.push_back(extract_baseline_free(series).values);
            fm.labels.push_back(series.meta.label);
        }
    }
    fm.validate();
    return fm;
}

}  // namespace gwshm
