#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

/// Parametric stand-in for a received guided-wave signal: the excitation
/// arrives delayed, amplitude-scaled and pulse-stretched, optionally with
/// a single scattered echo. Per-trial jitter on every scattering
/// parameter models transducer re-attachment and damage-interaction
/// variability; the jitter magnitudes are per-class because different
/// damage types scatter with very different repeatability.
struct PropagationScenario {
    DamageClass damage_class = DamageClass::Baseline;
    double gain = 1.0;           // multiplicative amplitude factor
    double delay_s = 20e-6;      // arrival delay
    double broadening = 1.0;     // pulse-width stretch, >= 1
    double echo_gain = 0.0;      // relative amplitude of one echo
    double echo_delay_s = 0.0;   // echo lag after the main arrival
    double jitter_gain = 0.03;   // per-trial relative std of gain
    double jitter_delay = 0.01;  // per-trial relative std of delay
    double jitter_broadening = 0.0;  // relative std of the stretch excess (broadening - 1)
    double jitter_echo = 0.0;        // relative std of echo gain and echo delay
    double jitter_corr = 0.0;    // correlation between the gain and delay draws
    int trial_base = 0;          // first trial id this scenario produces

    void validate() const {
        if (!(gain > 0.0))
            throw ConfigError("scenario " + std::string(class_name(damage_class)) +
                              ": gain must be > 0, got " + std::to_string(gain));
        if (!(delay_s >= 0.0))
            throw ConfigError("scenario: delay must be >= 0, got " +
                              std::to_string(delay_s));
        if (!(broadening >= 1.0))
            throw ConfigError("scenario: broadening must be >= 1, got " +
                              std::to_string(broadening));
        if (!(echo_gain >= 0.0 && echo_gain < 1.0))
            throw ConfigError("scenario: echo_gain must be in [0, 1), got " +
                              std::to_string(echo_gain));
        if (!(echo_delay_s >= 0.0) || !(jitter_gain >= 0.0) || !(jitter_delay >= 0.0) ||
            !(jitter_broadening >= 0.0) || !(jitter_echo >= 0.0))
            throw ConfigError("scenario: echo_delay and jitters must be >= 0");
        if (!(jitter_corr >= -1.0 && jitter_corr <= 1.0))
            throw ConfigError("scenario: jitter_corr must be in [-1, 1]");
    }
};

/// Default per-class calibration. CC and LFA raise the received
/// amplitude, HDC and TRF lower it. The same-direction pairs share
/// their amplitude and scattering shape, and differ only in arrival
/// delay: the film-type defects (LFA, TRF) arrive with a stable extra
/// path delay while the core defects (CC, HDC) scatter with a widely
/// varying one. Deviation features referenced to the session baseline
/// resolve that arrival phase; statistics of the monitoring signal
/// alone are shift-invariant and cannot.
inline std::vector<PropagationScenario> default_scenarios() {
    std::vector<PropagationScenario> v(kNumClasses);
    for (int i = 0; i < kNumClasses; ++i) v[i].damage_class = kAllClasses[i];

    // class, gain, delay, broadening, echo_gain, echo_delay,
    // jitter: gain, delay, broadening-excess, echo, gain-delay corr
    v[0] = {DamageClass::Baseline, 1.00, 20.0e-6, 1.00, 0.00, 0.0e-6,
            0.020, 0.010, 0.00, 0.00, 0.00, 0};
    v[1] = {DamageClass::CoreCrush, 1.17, 23.5e-6, 1.05, 0.10, 8.0e-6,
            0.080, 0.055, 0.00, 0.00, 0.85, 0};
    v[2] = {DamageClass::LackOfFilmAdhesive, 1.16, 23.5e-6, 1.05, 0.10, 8.0e-6,
            0.020, 0.013, 0.00, 0.00, 0.00, 0};
    v[3] = {DamageClass::HighDensityCore, 0.83, 23.5e-6, 1.05, 0.10, 8.0e-6,
            0.080, 0.055, 0.00, 0.00, 0.85, 0};
    v[4] = {DamageClass::TeflonReleaseFilm, 0.84, 23.5e-6, 1.05, 0.10, 8.0e-6,
            0.020, 0.013, 0.00, 0.00, 0.00, 0};
    return v;
}

/// Interpolate a scenario toward (t < 1) or past (t > 1) its calibrated
/// deviation from the healthy path; t = 0 is the baseline itself.
/// Jitter magnitudes stay at their class values.
inline PropagationScenario scenario_at_severity(const PropagationScenario& scn,
                                                const PropagationScenario& baseline,
                                                double t) {
    PropagationScenario out = scn;
    out.gain = 1.0 + t * (scn.gain - 1.0);
    out.broadening = 1.0 + t * (scn.broadening - 1.0);
    out.echo_gain = std::clamp(t * scn.echo_gain, 0.0, 0.999);
    out.delay_s = baseline.delay_s + t * (scn.delay_s - baseline.delay_s);
    if (!(out.gain > 0.0))
        throw ConfigError("severity " + std::to_string(t) + " drives gain of " +
                          class_name(scn.damage_class) + " to " +
                          std::to_string(out.gain) + " (must stay > 0)");
    return out;
}

namespace detail {

/// Excitation sample at continuous time t (seconds), linear interpolation,
/// zero outside the record.
inline double sample_at(const TimeSeries& e, double t) {
    if (t < 0.0) return 0.0;
    const double x = t / e.dt;
    const auto i = static_cast<std::size_t>(x);
    if (i + 1 >= e.samples.size()) return 0.0;
    const double frac = x - static_cast<double>(i);
    return e.samples[i] * (1.0 - frac) + e.samples[i + 1] * frac;
}

inline double last_support_time(const TimeSeries& e) {
    for (std::size_t i = e.samples.size(); i > 0; --i)
        if (e.samples[i - 1] != 0.0) return static_cast<double>(i - 1) * e.dt;
    return 0.0;
}

}  // namespace detail

/// Surrogate received signal for one trial.
///
/// out(t) = g * e((t - d) / broadening) + echo_gain * g * e(t - d - d_echo)
/// with all scattering parameters jittered per trial from the seeded
/// stream (five gaussian draws in a fixed order).
inline TimeSeries synth_response(const TimeSeries& excitation,
                                 const PropagationScenario& scenario,
                                 std::uint64_t rng_seed) {
    excitation.validate();
    scenario.validate();

    Rng rng(rng_seed);
    const double z_gain = rng.gaussian();
    const double z_delay_raw = rng.gaussian();
    const double z_broad = rng.gaussian();
    const double z_echo_gain = rng.gaussian();
    const double z_echo_delay = rng.gaussian();
    // scattering strength couples amplitude and path length
    const double rho = scenario.jitter_corr;
    const double z_delay = rho * z_gain + std::sqrt(1.0 - rho * rho) * z_delay_raw;

    const double gain = scenario.gain * (1.0 + scenario.jitter_gain * z_gain);
    const double delay = scenario.delay_s * (1.0 + scenario.jitter_delay * z_delay);
    const double broadening =
        1.0 + std::max(0.0, (scenario.broadening - 1.0) *
                                (1.0 + scenario.jitter_broadening * z_broad));
    const double echo_gain =
        std::clamp(scenario.echo_gain * (1.0 + scenario.jitter_echo * z_echo_gain),
                   0.0, 0.999);
    const double echo_delay = std::max(
        0.0, scenario.echo_delay_s * (1.0 + scenario.jitter_echo * z_echo_delay));
    if (!(gain > 0.0))
        throw NumericError("jitter drove gain non-positive; lower jitter_gain");
    if (!(delay >= 0.0))
        throw NumericError("jitter drove delay negative; lower jitter_delay");

    const double record = excitation.duration();
    const double support = detail::last_support_time(excitation);
    const double main_end = delay + broadening * support;
    const double echo_end = echo_gain > 0.0 ? delay + echo_delay + support : 0.0;
    if (std::max(main_end, echo_end) > record)
        throw DataError("scenario for " + std::string(class_name(scenario.damage_class)) +
                        ": delayed burst ends at " +
                        std::to_string(std::max(main_end, echo_end)) +
                        " s and would be truncated by the " + std::to_string(record) +
                        " s record");

    TimeSeries out;
    out.dt = excitation.dt;
    out.samples.resize(excitation.samples.size(), 0.0);
    out.meta.label = scenario.damage_class;
    out.meta.path_id =
        scenario.damage_class == DamageClass::Baseline ? "P3-3*" : "P2-2*";
    out.meta.provenance = Provenance::Synthetic;

    const double echo_scale = echo_gain * gain;
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        const double t = static_cast<double>(i) * out.dt;
        double v = gain * detail::sample_at(excitation, (t - delay) / broadening);
        if (echo_scale != 0.0)
            v += echo_scale * detail::sample_at(excitation, t - delay - echo_delay);
        out.samples[i] = v;
    }
    return out;
}

}  // namespace gwshm
