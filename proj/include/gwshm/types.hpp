#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gwshm/errors.hpp"

namespace gwshm {

/// Five-way label. The ordering is canonical and fixes confusion-matrix
/// axes, one-vs-rest decompositions, and tie-breaking everywhere.
enum class DamageClass : int {
    Baseline = 0,
    CoreCrush = 1,
    LackOfFilmAdhesive = 2,
    HighDensityCore = 3,
    TeflonReleaseFilm = 4,
};

inline constexpr int kNumClasses = 5;

inline constexpr std::array<DamageClass, kNumClasses> kAllClasses = {
    DamageClass::Baseline,        DamageClass::CoreCrush,
    DamageClass::LackOfFilmAdhesive, DamageClass::HighDensityCore,
    DamageClass::TeflonReleaseFilm,
};

inline const char* class_name(DamageClass c) {
    switch (c) {
        case DamageClass::Baseline: return "baseline";
        case DamageClass::CoreCrush: return "cc";
        case DamageClass::LackOfFilmAdhesive: return "lfa";
        case DamageClass::HighDensityCore: return "hdc";
        case DamageClass::TeflonReleaseFilm: return "trf";
    }
    throw ConfigError("unknown damage class id");
}

inline DamageClass class_from_name(const std::string& name) {
    for (DamageClass c : kAllClasses)
        if (name == class_name(c)) return c;
    throw DataError("unknown damage class name: '" + name + "'");
}

enum class Provenance { Synthetic, Ingested, Augmented };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Synthetic: return "synthetic";
        case Provenance::Ingested: return "ingested";
        case Provenance::Augmented: return "augmented";
    }
    throw ConfigError("unknown provenance id");
}

inline Provenance provenance_from_name(const std::string& name) {
    if (name == "synthetic") return Provenance::Synthetic;
    if (name == "ingested") return Provenance::Ingested;
    if (name == "augmented") return Provenance::Augmented;
    throw DataError("unknown provenance name: '" + name + "'");
}

struct SeriesMeta {
    DamageClass label = DamageClass::Baseline;
    std::string path_id;  // sensor path, e.g. "P2-2*"
    int trial = 0;
    int copy = 0;  // noisy-copy index; 0 also for un-augmented series
    Provenance provenance = Provenance::Synthetic;
};

/// Uniformly sampled real-valued signal with acquisition metadata.
struct TimeSeries {
    std::vector<double> samples;
    double dt = 0.0;  // seconds per sample
    SeriesMeta meta;

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) * dt; }

    void validate() const {
        if (samples.size() < 2)
            throw DataError("time series must have length >= 2, got " +
                            std::to_string(samples.size()));
        if (!(dt > 0.0))
            throw DataError("time series dt must be > 0, got " + std::to_string(dt));
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (!std::isfinite(samples[i]))
                throw DataError("non-finite sample at index " + std::to_string(i));
    }
};

inline double peak_amplitude(const TimeSeries& s) {
    double peak = 0.0;
    for (double v : s.samples) peak = std::max(peak, std::abs(v));
    return peak;
}

inline double peak_to_peak(const TimeSeries& s) {
    double lo = s.samples.empty() ? 0.0 : s.samples[0];
    double hi = lo;
    for (double v : s.samples) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

}  // namespace gwshm
