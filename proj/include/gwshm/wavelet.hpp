#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gwshm/daubechies_tables.hpp"
#include "gwshm/errors.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

/// Boundary handling for the filter cascade.
///
/// Symmetric: half-sample symmetric extension, expansive coefficient
/// layout (floor((n+L-1)/2) per band). Reconstruction from all bands is
/// exact for any length; band energies overcount signal energy because
/// the representation is a frame, not a basis.
///
/// Periodic: circular convolution, ceil(n/2) per band. The transform is
/// orthogonal whenever every level length is even (any dyadic length),
/// so band energies then partition signal energy exactly.
enum class BoundaryMode { Symmetric, Periodic };

inline const char* boundary_name(BoundaryMode m) {
    return m == BoundaryMode::Symmetric ? "symmetric" : "periodic";
}

inline BoundaryMode boundary_from_name(const std::string& name) {
    if (name == "symmetric") return BoundaryMode::Symmetric;
    if (name == "periodic") return BoundaryMode::Periodic;
    throw ConfigError("unknown boundary mode: '" + name + "'");
}

struct WaveletSpec {
    int order = 40;          // Daubechies vanishing moments, filter has 2*order taps
    int levels = 7;          // decomposition depth
    int selected_level = 6;  // detail band kept by wavelet_denoise
    BoundaryMode boundary = BoundaryMode::Symmetric;

    void validate() const {
        if (order < 1 || order > detail::kMaxDaubechiesOrder)
            throw ConfigError("wavelet: order must be in [1, " +
                              std::to_string(detail::kMaxDaubechiesOrder) + "], got " +
                              std::to_string(order));
        if (levels < 1)
            throw ConfigError("wavelet: levels must be >= 1, got " +
                              std::to_string(levels));
        if (selected_level < 1 || selected_level > levels)
            throw ConfigError("wavelet: selected_level must be in [1, levels], got " +
                              std::to_string(selected_level));
    }
};

struct WaveletFilters {
    std::vector<double> lowpass;
    std::vector<double> highpass;
};

/// Minimum-phase Daubechies analysis pair; highpass is the
/// alternating-sign reversal of the lowpass.
inline WaveletFilters daubechies_filters(int order) {
    if (order < 1 || order > detail::kMaxDaubechiesOrder)
        throw ConfigError("daubechies_filters: order must be in [1, " +
                          std::to_string(detail::kMaxDaubechiesOrder) + "], got " +
                          std::to_string(order));
    const std::size_t len = 2 * static_cast<std::size_t>(order);
    const double* table = detail::kDaubechiesLowpass[order - 1];
    WaveletFilters f;
    f.lowpass.assign(table, table + len);
    f.highpass.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        const double v = f.lowpass[len - 1 - i];
        f.highpass[i] = (i % 2 == 0) ? v : -v;
    }
    return f;
}

struct DwtCoefficients {
    std::vector<std::vector<double>> details;  // details[l-1] = level l, level 1 finest
    std::vector<double> approximation;         // coarsest-level band
    std::vector<std::size_t> level_input_lengths;
    std::size_t original_length = 0;
    double dt = 0.0;
    SeriesMeta meta;
    WaveletSpec spec;

    int levels() const { return static_cast<int>(details.size()); }
};

namespace detail {

/// Half-sample symmetric extension: fold any integer index into [0, n).
inline std::size_t fold_symmetric(long long i, std::size_t n) {
    const long long period = 2 * static_cast<long long>(n);
    long long q = i % period;
    if (q < 0) q += period;
    return static_cast<std::size_t>(q < static_cast<long long>(n) ? q : period - 1 - q);
}

inline std::size_t wrap_periodic(long long i, std::size_t n) {
    long long q = i % static_cast<long long>(n);
    if (q < 0) q += static_cast<long long>(n);
    return static_cast<std::size_t>(q);
}

/// One analysis level: convolve with both filters, keep odd phases.
inline void dwt_level(const std::vector<double>& x, const WaveletFilters& f,
                      BoundaryMode mode, std::vector<double>& approx,
                      std::vector<double>& det) {
    const std::size_t filter_len = f.lowpass.size();
    if (mode == BoundaryMode::Symmetric) {
        const std::size_t n_out = (x.size() + filter_len - 1) / 2;
        approx.assign(n_out, 0.0);
        det.assign(n_out, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) {
            double a = 0.0, d = 0.0;
            for (std::size_t m = 0; m < filter_len; ++m) {
                const double v =
                    x[fold_symmetric(2 * static_cast<long long>(k) + 1 -
                                         static_cast<long long>(m),
                                     x.size())];
                a += f.lowpass[m] * v;
                d += f.highpass[m] * v;
            }
            approx[k] = a;
            det[k] = d;
        }
    } else {
        std::vector<double> padded;
        const std::vector<double>* src = &x;
        if (x.size() % 2 != 0) {
            padded = x;
            padded.push_back(x.back());
            src = &padded;
        }
        const std::size_t n = src->size();
        const std::size_t n_out = n / 2;
        approx.assign(n_out, 0.0);
        det.assign(n_out, 0.0);
        for (std::size_t k = 0; k < n_out; ++k) {
            double a = 0.0, d = 0.0;
            for (std::size_t m = 0; m < filter_len; ++m) {
                const double v =
                    (*src)[wrap_periodic(2 * static_cast<long long>(k) + 1 -
                                             static_cast<long long>(m),
                                         n)];
                a += f.lowpass[m] * v;
                d += f.highpass[m] * v;
            }
            approx[k] = a;
            det[k] = d;
        }
    }
}

/// One synthesis level; adjoint of dwt_level, cropped to target_len.
inline std::vector<double> idwt_level(const std::vector<double>& approx,
                                      const std::vector<double>& det,
                                      const WaveletFilters& f, BoundaryMode mode,
                                      std::size_t target_len) {
    const std::size_t filter_len = f.lowpass.size();
    std::vector<double> out(target_len, 0.0);
    if (mode == BoundaryMode::Symmetric) {
        for (std::size_t k = 0; k < approx.size(); ++k) {
            for (std::size_t m = 0; m < filter_len; ++m) {
                const long long j = 2 * static_cast<long long>(k) + 1 -
                                    static_cast<long long>(m);
                if (j < 0 || j >= static_cast<long long>(target_len)) continue;
                out[static_cast<std::size_t>(j)] +=
                    f.lowpass[m] * approx[k] + f.highpass[m] * det[k];
            }
        }
    } else {
        const std::size_t n = 2 * approx.size();
        std::vector<double> full(n, 0.0);
        for (std::size_t k = 0; k < approx.size(); ++k) {
            for (std::size_t m = 0; m < filter_len; ++m) {
                const std::size_t j = wrap_periodic(
                    2 * static_cast<long long>(k) + 1 - static_cast<long long>(m), n);
                full[j] += f.lowpass[m] * approx[k] + f.highpass[m] * det[k];
            }
        }
        for (std::size_t j = 0; j < target_len && j < n; ++j) out[j] = full[j];
    }
    return out;
}

inline std::size_t next_level_length(std::size_t n, std::size_t filter_len,
                                     BoundaryMode mode) {
    if (mode == BoundaryMode::Symmetric) return (n + filter_len - 1) / 2;
    return (n + 1) / 2;
}

}  // namespace detail

/// Deepest decomposition such that every level still sees >= 2 samples.
inline int max_feasible_depth(std::size_t n, const WaveletSpec& spec) {
    const std::size_t filter_len = 2 * static_cast<std::size_t>(spec.order);
    int depth = 0;
    while (n >= 2) {
        n = detail::next_level_length(n, filter_len, spec.boundary);
        ++depth;
        if (depth > 64) break;  // symmetric lengths plateau near the filter length
    }
    return depth;
}

inline DwtCoefficients dwt_decompose(const TimeSeries& s, const WaveletSpec& spec) {
    spec.validate();
    s.validate();
    const auto filters = daubechies_filters(spec.order);
    const std::size_t filter_len = filters.lowpass.size();
    if (s.samples.size() < filter_len)
        throw DataError("dwt: signal length " + std::to_string(s.samples.size()) +
                        " is below the db" + std::to_string(spec.order) +
                        " filter length " + std::to_string(filter_len));
    const int feasible = max_feasible_depth(s.samples.size(), spec);
    if (spec.levels > feasible)
        throw DataError("dwt: signal of length " + std::to_string(s.samples.size()) +
                        " is too short for a " + std::to_string(spec.levels) +
                        "-level decomposition; maximum feasible depth is " +
                        std::to_string(feasible));

    DwtCoefficients out;
    out.original_length = s.samples.size();
    out.dt = s.dt;
    out.meta = s.meta;
    out.spec = spec;

    std::vector<double> current = s.samples;
    for (int level = 1; level <= spec.levels; ++level) {
        out.level_input_lengths.push_back(current.size());
        std::vector<double> approx, det;
        detail::dwt_level(current, filters, spec.boundary, approx, det);
        out.details.push_back(std::move(det));
        current = std::move(approx);
    }
    out.approximation = std::move(current);
    return out;
}

/// Band ids accepted by dwt_reconstruct: "d1".."d<levels>" and "a".
inline std::vector<std::string> band_ids(const DwtCoefficients& c) {
    std::vector<std::string> ids;
    for (int l = 1; l <= c.levels(); ++l) ids.push_back("d" + std::to_string(l));
    ids.push_back("a");
    return ids;
}

/// Inverse cascade with every band not in `keep` zeroed.
inline TimeSeries dwt_reconstruct(const DwtCoefficients& c,
                                  const std::set<std::string>& keep) {
    if (keep.empty()) throw ConfigError("dwt_reconstruct: keep set must be non-empty");
    std::set<std::string> valid;
    for (const auto& id : band_ids(c)) valid.insert(id);
    for (const auto& id : keep)
        if (!valid.count(id))
            throw ConfigError("dwt_reconstruct: unknown band id '" + id + "'");

    const auto filters = daubechies_filters(c.spec.order);
    std::vector<double> current(c.approximation.size(), 0.0);
    if (keep.count("a")) current = c.approximation;

    for (int level = c.levels(); level >= 1; --level) {
        const auto& det_src = c.details[static_cast<std::size_t>(level - 1)];
        std::vector<double> det(det_src.size(), 0.0);
        if (keep.count("d" + std::to_string(level))) det = det_src;
        current = detail::idwt_level(
            current, det, filters, c.spec.boundary,
            c.level_input_lengths[static_cast<std::size_t>(level - 1)]);
    }

    TimeSeries out;
    out.samples = std::move(current);
    out.dt = c.dt;
    out.meta = c.meta;
    return out;
}

/// Subtract the series mean; length, dt, and metadata are preserved.
inline TimeSeries remove_offset(const TimeSeries& s) {
    s.validate();
    double sum = 0.0;
    for (double v : s.samples) sum += v;
    const double mean = sum / static_cast<double>(s.samples.size());
    TimeSeries out = s;
    for (double& v : out.samples) v -= mean;
    return out;
}

/// Offset removal, then reconstruction from the selected detail band only.
inline TimeSeries wavelet_denoise(const TimeSeries& s, const WaveletSpec& spec) {
    spec.validate();
    const TimeSeries centered = remove_offset(s);
    const DwtCoefficients coeffs = dwt_decompose(centered, spec);
    return dwt_reconstruct(coeffs, {"d" + std::to_string(spec.selected_level)});
}

}  // namespace gwshm
