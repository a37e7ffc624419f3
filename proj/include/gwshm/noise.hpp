#pragma once

#include <cstdint>
#include <string>

#include "gwshm/errors.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

struct NoiseConfig {
    double beta_n = 0.01;  // noise scale relative to peak amplitude
    int copies = 10;       // noisy copies generated per parent series
    std::uint64_t seed = 0;

    void validate() const {
        if (!(beta_n >= 0.0))
            throw ConfigError("noise: beta_n must be >= 0, got " + std::to_string(beta_n));
        if (copies < 1)
            throw ConfigError("noise: copies must be >= 1, got " + std::to_string(copies));
    }
};

struct AddNoiseResult {
    TimeSeries series;
    /// Set when the parent is all-zero with beta_n > 0: peak amplitude is
    /// zero, so the "noise" has zero scale and the copy equals the parent.
    bool zero_scale = false;
};

/// out(t) = s(t) + beta_n * max|s| * w(t), w ~ iid standard normal.
/// beta_n = 0 returns a bitwise copy (no RNG draws are consumed).
inline AddNoiseResult add_noise(const TimeSeries& s, double beta_n,
                                std::uint64_t rng_seed) {
    if (!(beta_n >= 0.0))
        throw ConfigError("add_noise: beta_n must be >= 0, got " + std::to_string(beta_n));
    s.validate();

    AddNoiseResult result;
    result.series = s;
    result.series.meta.provenance = Provenance::Augmented;
    if (beta_n == 0.0) return result;

    const double scale = beta_n * peak_amplitude(s);
    if (scale == 0.0) {
        result.zero_scale = true;
        return result;
    }
    Rng rng(rng_seed);
    for (double& v : result.series.samples) v += scale * rng.gaussian();
    return result;
}

}  // namespace gwshm
