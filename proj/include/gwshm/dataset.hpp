#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/excitation.hpp"
#include "gwshm/noise.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/scenario.hpp"

namespace gwshm {

namespace detail {

// Stream labels keep synth and noise child seeds disjoint.
inline constexpr std::uint64_t kSynthStream = 0x73796e74;
inline constexpr std::uint64_t kNoiseStream = 0x6e6f6973;

inline std::uint64_t trial_seed(std::uint64_t master, DamageClass c, int trial) {
    return derive_seed(master, {kSynthStream, static_cast<std::uint64_t>(c),
                                static_cast<std::uint64_t>(trial)});
}

inline std::uint64_t copy_seed(std::uint64_t master, DamageClass c, int trial,
                               int copy) {
    return derive_seed(master, {kNoiseStream, static_cast<std::uint64_t>(c),
                                static_cast<std::uint64_t>(trial),
                                static_cast<std::uint64_t>(copy)});
}

inline constexpr std::uint64_t kSessionStream = 0x73657373;
inline constexpr std::uint64_t kCopyStream = 0x636f7570;

/// Per-trial acoustic coupling. Every path recorded with attachment
/// session `trial` shares this factor, whatever the class, so features
/// referenced to the session's baseline can cancel it. Draws are clamped
/// away from zero; a press can be weak but never inverts the signal.
inline double session_coupling(std::uint64_t master, int trial, double session_jitter) {
    if (session_jitter == 0.0) return 1.0;
    Rng rng(derive_seed(master, {kSessionStream, static_cast<std::uint64_t>(trial)}));
    return std::max(0.05, 1.0 + session_jitter * rng.gaussian());
}

/// Small per-measurement gain drift on top of the trial coupling, mean 1.
/// Keyed by (trial, copy) only: the c-th re-measurement of session t sees
/// the same drift on every path, so baseline-referenced ratios cancel it.
inline double copy_coupling(std::uint64_t master, int trial, int copy,
                            double copy_jitter) {
    if (copy_jitter == 0.0) return 1.0;
    Rng rng(derive_seed(master, {kCopyStream, static_cast<std::uint64_t>(trial),
                                 static_cast<std::uint64_t>(copy)}));
    return std::max(0.05, 1.0 + copy_jitter * rng.gaussian());
}

inline constexpr std::uint64_t kTriggerStream = 0x74726967;

/// Acquisition time-base offset of one re-measurement, in seconds.
/// Independent per (class, trial, copy): unlike the gain drift it is not
/// shared between the monitoring and baseline paths of a session.
inline double trigger_offset(std::uint64_t master, DamageClass c, int trial, int copy,
                             double trigger_jitter_s) {
    if (trigger_jitter_s == 0.0) return 0.0;
    Rng rng(derive_seed(master, {kTriggerStream, static_cast<std::uint64_t>(c),
                                 static_cast<std::uint64_t>(trial),
                                 static_cast<std::uint64_t>(copy)}));
    return trigger_jitter_s * rng.gaussian();
}

/// Resample a series with its time origin moved by `shift_s` seconds
/// (linear interpolation, zero outside the record).
inline TimeSeries shift_series(const TimeSeries& s, double shift_s) {
    if (shift_s == 0.0) return s;
    TimeSeries out = s;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] =
            sample_at(s, static_cast<double>(i) * s.dt - shift_s);
    return out;
}

}  // namespace detail

/// Synthesize trials_per_class responses per scenario and noise-augment
/// each into noise.copies series. Per-class count is
/// trials_per_class * noise.copies when one scenario covers the class.
/// Every series is a pure function of (master_seed, class, trial, copy),
/// so the output is independent of construction order. session_jitter
/// is the relative std of the shared per-trial coupling factor;
/// copy_jitter is the relative std of the per-copy gain drift. An
/// optional preprocess hook (offset removal, wavelet filtering) runs on
/// each clean parent before the noisy copies are drawn, matching the
/// usual acquisition order of filter-then-augment.
inline std::vector<TimeSeries> build_dataset(
    const TimeSeries& excitation,
    const std::vector<PropagationScenario>& scenarios, int trials_per_class,
    const NoiseConfig& noise, std::uint64_t master_seed, double session_jitter = 0.0,
    double copy_jitter = 0.0, double trigger_jitter_s = 0.0,
    const std::function<TimeSeries(const TimeSeries&)>& preprocess = {}) {
    if (trials_per_class < 1)
        throw ConfigError("build_dataset: trials_per_class must be >= 1, got " +
                          std::to_string(trials_per_class));
    if (!(session_jitter >= 0.0) || !(copy_jitter >= 0.0) || !(trigger_jitter_s >= 0.0))
        throw ConfigError("build_dataset: session, copy, and trigger jitters must be >= 0");
    noise.validate();
    excitation.validate();

    std::set<DamageClass> covered;
    for (const auto& scn : scenarios) {
        scn.validate();
        covered.insert(scn.damage_class);
    }
    for (DamageClass c : kAllClasses)
        if (!covered.count(c))
            throw ConfigError(std::string("build_dataset: no scenario for class '") +
                              class_name(c) + "'");

    std::set<std::pair<DamageClass, int>> seen;
    std::vector<TimeSeries> out;
    out.reserve(scenarios.size() * static_cast<std::size_t>(trials_per_class) *
                static_cast<std::size_t>(noise.copies));
    for (const auto& scn : scenarios) {
        for (int t = 0; t < trials_per_class; ++t) {
            const int trial = scn.trial_base + t;
            if (!seen.insert({scn.damage_class, trial}).second)
                throw DataError(std::string("build_dataset: duplicate (class, trial) key (") +
                                class_name(scn.damage_class) + ", " +
                                std::to_string(trial) + ")");
            TimeSeries parent = synth_response(
                excitation, scn, detail::trial_seed(master_seed, scn.damage_class, trial));
            parent.meta.trial = trial;
            const double coupling =
                detail::session_coupling(master_seed, trial, session_jitter);
            if (coupling != 1.0)
                for (double& v : parent.samples) v *= coupling;
            if (preprocess) parent = preprocess(parent);
            for (int c = 0; c < noise.copies; ++c) {
                const TimeSeries acquired = detail::shift_series(
                    parent, detail::trigger_offset(master_seed, scn.damage_class, trial,
                                                   c, trigger_jitter_s));
                AddNoiseResult augmented = add_noise(
                    acquired, noise.beta_n,
                    detail::copy_seed(master_seed, scn.damage_class, trial, c));
                augmented.series.meta.copy = c;
                const double drift =
                    detail::copy_coupling(master_seed, trial, c, copy_jitter);
                if (drift != 1.0)
                    for (double& v : augmented.series.samples) v *= drift;
                out.push_back(std::move(augmented.series));
            }
        }
    }
    return out;
}

/// Noise-augment externally acquired parent series (each one trial of
/// its class). The same child-seed streams as build_dataset are used,
/// keyed by the metadata already on each parent.
inline std::vector<TimeSeries> augment_parents(
    const std::vector<TimeSeries>& parents, const NoiseConfig& noise,
    std::uint64_t master_seed, double copy_jitter = 0.0, double trigger_jitter_s = 0.0,
    const std::function<TimeSeries(const TimeSeries&)>& preprocess = {}) {
    noise.validate();
    if (!(copy_jitter >= 0.0) || !(trigger_jitter_s >= 0.0))
        throw ConfigError("augment_parents: jitters must be >= 0");
    if (parents.empty()) throw DataError("augment_parents: empty parent set");
    std::vector<TimeSeries> out;
    out.reserve(parents.size() * static_cast<std::size_t>(noise.copies));
    for (const TimeSeries& raw : parents) {
        const TimeSeries parent = preprocess ? preprocess(raw) : raw;
        for (int c = 0; c < noise.copies; ++c) {
            const TimeSeries acquired = detail::shift_series(
                parent, detail::trigger_offset(master_seed, parent.meta.label,
                                               parent.meta.trial, c, trigger_jitter_s));
            AddNoiseResult augmented = add_noise(
                acquired, noise.beta_n,
                detail::copy_seed(master_seed, parent.meta.label, parent.meta.trial, c));
            augmented.series.meta.copy = c;
            const double drift =
                detail::copy_coupling(master_seed, parent.meta.trial, c, copy_jitter);
            if (drift != 1.0)
                for (double& v : augmented.series.samples) v *= drift;
            out.push_back(std::move(augmented.series));
        }
    }
    return out;
}

/// Scenario grid for the severity sweep: each damage class is replayed at
/// `levels` severities spanning [t_min, t_max] of its calibrated deviation,
/// with disjoint trial ids per level. The baseline class is severity-
/// invariant but swept too, so all classes contribute equal row counts.
inline std::vector<PropagationScenario> severity_sweep_scenarios(
    const std::vector<PropagationScenario>& base, int levels, double t_min,
    double t_max, int trials_per_level) {
    if (levels < 1)
        throw ConfigError("sweep: levels must be >= 1, got " + std::to_string(levels));
    if (!(t_min > 0.0) || !(t_max < 10.0) || !(t_min <= t_max))
        throw ConfigError("sweep: severity range must satisfy 0 < t_min <= t_max < 10");

    const PropagationScenario* baseline = nullptr;
    for (const auto& scn : base)
        if (scn.damage_class == DamageClass::Baseline) baseline = &scn;
    if (!baseline) throw ConfigError("sweep: scenarios must include the baseline class");

    std::vector<PropagationScenario> out;
    out.reserve(base.size() * static_cast<std::size_t>(levels));
    for (const auto& scn : base) {
        for (int k = 0; k < levels; ++k) {
            const double t = levels == 1
                                 ? t_min
                                 : t_min + (t_max - t_min) * k / (levels - 1.0);
            PropagationScenario s = scenario_at_severity(scn, *baseline, t);
            s.trial_base = scn.trial_base + k * trials_per_level;
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace gwshm
