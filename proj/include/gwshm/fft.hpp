#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

/// One-sided magnitude spectrum, bins 0..floor(N/2).
struct Spectrum {
    std::vector<double> magnitudes;
    double df = 0.0;          // Hz per bin, 1/(N*dt)
    std::size_t n_samples = 0;  // N of the originating record

    std::size_t n_bins() const { return magnitudes.size(); }
};

namespace detail {

inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                           (inverse ? 1.0 : -1.0);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

/// Chirp factor exp(sign * i * pi * n^2 / N) with the phase reduced
/// mod 2N in exact integer arithmetic.
inline std::complex<double> chirp(std::uint64_t n, std::uint64_t big_n, double sign) {
    const std::uint64_t q = (n * n) % (2 * big_n);
    const double ang = sign * std::numbers::pi * static_cast<double>(q) /
                       static_cast<double>(big_n);
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace detail

/// Forward DFT of arbitrary length: radix-2 when N is a power of two,
/// Bluestein's chirp-z convolution otherwise.
inline std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x) {
    const std::size_t n = x.size();
    if (n == 0) return {};
    if ((n & (n - 1)) == 0) {
        auto a = x;
        detail::fft_pow2(a, false);
        return a;
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<std::complex<double>> a(m), b(m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto w = detail::chirp(i, n, -1.0);
        a[i] = x[i] * w;
        b[i] = std::conj(w);
        if (i > 0) b[m - i] = b[i];
    }
    detail::fft_pow2(a, false);
    detail::fft_pow2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    detail::fft_pow2(a, true);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * detail::chirp(k, n, -1.0);
    return out;
}

/// One-sided magnitude of the raw (unnormalized, unwindowed) DFT.
inline Spectrum dft_magnitude(const TimeSeries& s) {
    s.validate();
    const std::size_t n = s.samples.size();
    std::vector<std::complex<double>> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = {s.samples[i], 0.0};
    const auto spec = fft(x);

    Spectrum out;
    out.n_samples = n;
    out.df = 1.0 / (static_cast<double>(n) * s.dt);
    out.magnitudes.resize(n / 2 + 1);
    for (std::size_t k = 0; k < out.magnitudes.size(); ++k)
        out.magnitudes[k] = std::abs(spec[k]);
    return out;
}

}  // namespace gwshm
