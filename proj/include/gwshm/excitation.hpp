#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "gwshm/errors.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

/// Five-cycle Hann-windowed toneburst drive.
struct ExcitationConfig {
    double carrier_hz = 1e5;
    int n_cycles = 5;  // envelope is tuned to five cycles
    double amplitude = 10.0;  // peak drive, i.e. 20 peak-to-peak
    double sample_rate_hz = 1e8;
    double record_seconds = 2e-4;

    void validate() const {
        if (!(carrier_hz > 0.0))
            throw ConfigError("excitation: carrier frequency must be > 0 Hz, got " +
                              std::to_string(carrier_hz));
        if (n_cycles != 5)
            throw ConfigError("excitation: burst is defined for 5 cycles, got " +
                              std::to_string(n_cycles));
        if (!(sample_rate_hz >= 20.0 * carrier_hz))
            throw ConfigError("excitation: sample rate must be >= 20x carrier (" +
                              std::to_string(20.0 * carrier_hz) + " Hz), got " +
                              std::to_string(sample_rate_hz));
        if (!(record_seconds >= n_cycles / carrier_hz))
            throw ConfigError("excitation: record must cover the burst (>= " +
                              std::to_string(n_cycles / carrier_hz) + " s), got " +
                              std::to_string(record_seconds));
        if (!std::isfinite(amplitude))
            throw ConfigError("excitation: amplitude must be finite");
    }
};

/// V(t) = 0.5 A [1 - cos(2 pi f t / 5)] sin(2 pi f t) for t < 5/f, zero after.
inline TimeSeries hann_toneburst(const ExcitationConfig& cfg) {
    cfg.validate();
    const double dt = 1.0 / cfg.sample_rate_hz;
    const auto n = static_cast<std::size_t>(std::llround(cfg.record_seconds / dt));
    const double burst_end = cfg.n_cycles / cfg.carrier_hz;
    const double w = 2.0 * std::numbers::pi * cfg.carrier_hz;

    TimeSeries out;
    out.dt = dt;
    out.meta.label = DamageClass::Baseline;
    out.meta.path_id = "excitation";
    out.meta.provenance = Provenance::Synthetic;
    out.samples.resize(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        if (t >= burst_end) break;
        out.samples[i] =
            0.5 * cfg.amplitude * (1.0 - std::cos(w * t / 5.0)) * std::sin(w * t);
    }
    return out;
}

}  // namespace gwshm
