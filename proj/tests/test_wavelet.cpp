#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "daubechies_oracle.hpp"
#include "gwshm/excitation.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/wavelet.hpp"

using namespace gwshm;

namespace {

TimeSeries random_series(std::size_t n, std::uint64_t seed) {
    TimeSeries s;
    s.dt = 1e-6;
    s.samples.resize(n);
    Rng rng(seed);
    for (auto& v : s.samples) v = rng.gaussian();
    return s;
}

double energy(const std::vector<double>& v) {
    double e = 0.0;
    for (double x : v) e += x * x;
    return e;
}

double rel_err(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        ref += b[i] * b[i];
    }
    return std::sqrt(diff / ref);
}

}  // namespace

TEST_CASE("db1 is the Haar pair") {
    const auto f = daubechies_filters(1);
    REQUIRE(f.lowpass[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
    REQUIRE(f.lowpass[1] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
    REQUIRE(f.highpass[0] == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
    REQUIRE(f.highpass[1] == Catch::Approx(-1.0 / std::sqrt(2.0)).margin(1e-15));
}

TEST_CASE("filter identities hold for every supported order") {
    for (int order = 1; order <= 45; ++order) {
        const auto f = daubechies_filters(order);
        REQUIRE(f.lowpass.size() == 2 * static_cast<std::size_t>(order));
        double sum_h = 0.0, sum_g = 0.0, sum_h2 = 0.0;
        for (std::size_t i = 0; i < f.lowpass.size(); ++i) {
            sum_h += f.lowpass[i];
            sum_g += f.highpass[i];
            sum_h2 += f.lowpass[i] * f.lowpass[i];
        }
        REQUIRE(std::abs(sum_h - std::sqrt(2.0)) <= 1e-10);
        REQUIRE(std::abs(sum_g) <= 1e-10);
        REQUIRE(std::abs(sum_h2 - 1.0) <= 1e-10);
        for (std::size_t k = 1; k < static_cast<std::size_t>(order); ++k) {
            double dot = 0.0;
            for (std::size_t i = 0; i + 2 * k < f.lowpass.size(); ++i)
                dot += f.lowpass[i] * f.lowpass[i + 2 * k];
            REQUIRE(std::abs(dot) <= 1e-10);
        }
    }
    REQUIRE_THROWS_AS(daubechies_filters(0), ConfigError);
    REQUIRE_THROWS_AS(daubechies_filters(46), ConfigError);
}

TEST_CASE("db40 matches the independent factorization oracle") {
    const auto f = daubechies_filters(40);
    double max_err = 0.0;
    for (std::size_t i = 0; i < 80; ++i)
        max_err = std::max(max_err, std::abs(f.lowpass[i] - gwshm_test::kDb40Oracle[i]));
    REQUIRE(max_err <= 1e-9);
}

TEST_CASE("all-zero input decomposes to all-zero bands") {
    TimeSeries s;
    s.dt = 1e-6;
    s.samples.assign(512, 0.0);
    WaveletSpec spec{8, 3, 1};
    const auto c = dwt_decompose(s, spec);
    for (const auto& band : c.details)
        for (double v : band) REQUIRE(v == 0.0);
    for (double v : c.approximation) REQUIRE(v == 0.0);
}

TEST_CASE("constants vanish in the Haar detail band") {
    TimeSeries s;
    s.dt = 1e-6;
    s.samples.assign(64, 3.7);
    WaveletSpec spec{1, 1, 1};
    const auto c = dwt_decompose(s, spec);
    for (double v : c.details[0]) REQUIRE(std::abs(v) <= 1e-12);
}

TEST_CASE("perfect reconstruction for both boundary modes") {
    for (BoundaryMode mode : {BoundaryMode::Symmetric, BoundaryMode::Periodic}) {
        for (int order : {1, 2, 8, 40}) {
            for (std::size_t n : {255u, 256u, 1000u, 2048u}) {
                if (n < 2 * static_cast<std::size_t>(order)) continue;
                const TimeSeries s = random_series(n, 1000 * n + order);
                WaveletSpec spec{order, 3, 1, mode};
                const auto c = dwt_decompose(s, spec);
                const auto ids = band_ids(c);
                const std::set<std::string> all(ids.begin(), ids.end());
                const TimeSeries rec = dwt_reconstruct(c, all);
                REQUIRE(rec.samples.size() == n);
                REQUIRE(rel_err(rec.samples, s.samples) <= 1e-8);
            }
        }
    }
}

TEST_CASE("periodized transform partitions energy on dyadic lengths") {
    for (int order : {1, 2, 8, 40}) {
        for (std::size_t n : {256u, 1024u, 2048u}) {
            const int levels = n == 256 ? 4 : 7;
            const TimeSeries s = random_series(n, 7 * n + order);
            WaveletSpec spec{order, levels, 1, BoundaryMode::Periodic};
            const auto c = dwt_decompose(s, spec);
            double band_energy = energy(c.approximation);
            for (const auto& band : c.details) band_energy += energy(band);
            REQUIRE(band_energy == Catch::Approx(energy(s.samples)).epsilon(1e-8));
        }
    }
}

TEST_CASE("reconstruction is linear across bands") {
    const TimeSeries s = random_series(1000, 4);
    WaveletSpec spec{8, 4, 1};
    const auto c = dwt_decompose(s, spec);
    const TimeSeries approx_only = dwt_reconstruct(c, {"a"});
    std::vector<double> detail_sum(s.samples.size(), 0.0);
    for (int l = 1; l <= 4; ++l) {
        const TimeSeries d = dwt_reconstruct(c, {"d" + std::to_string(l)});
        for (std::size_t i = 0; i < detail_sum.size(); ++i)
            detail_sum[i] += d.samples[i];
    }
    std::vector<double> residual(s.samples.size());
    for (std::size_t i = 0; i < residual.size(); ++i)
        residual[i] = s.samples[i] - detail_sum[i];
    REQUIRE(rel_err(approx_only.samples, residual) <= 1e-8);
}

TEST_CASE("keep-set validation") {
    const TimeSeries s = random_series(256, 9);
    WaveletSpec spec{2, 3, 1};
    const auto c = dwt_decompose(s, spec);
    REQUIRE_THROWS_AS(dwt_reconstruct(c, {}), ConfigError);
    REQUIRE_THROWS_MATCHES(dwt_reconstruct(c, {"d9"}), ConfigError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("unknown band id")));
}

TEST_CASE("depth limits are reported with the feasible maximum") {
    TimeSeries s = random_series(16, 2);
    WaveletSpec spec{1, 5, 1, BoundaryMode::Periodic};
    REQUIRE_THROWS_MATCHES(dwt_decompose(s, spec), DataError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("maximum feasible depth is 4")));
    s.samples.assign(60, 1.0);  // below the db40 filter length
    REQUIRE_THROWS_AS(dwt_decompose(s, WaveletSpec{40, 1, 1}), DataError);
}

TEST_CASE("remove_offset zeroes the mean and is idempotent") {
    TimeSeries s;
    s.dt = 1e-6;
    s.samples.assign(100, 2.5);
    const TimeSeries centered = remove_offset(s);
    for (double v : centered.samples) REQUIRE(std::abs(v) <= 1e-12);

    const TimeSeries burst = hann_toneburst(ExcitationConfig{});
    TimeSeries shifted = burst;
    for (double& v : shifted.samples) v += 0.5;
    const TimeSeries recovered = remove_offset(shifted);
    double burst_mean = 0.0;
    for (double v : burst.samples) burst_mean += v;
    burst_mean /= static_cast<double>(burst.samples.size());
    for (std::size_t i = 0; i < burst.samples.size(); ++i)
        REQUIRE(recovered.samples[i] ==
                Catch::Approx(burst.samples[i] - burst_mean).margin(1e-12));
    const TimeSeries twice = remove_offset(recovered);
    REQUIRE(rel_err(twice.samples, recovered.samples) <= 1e-12);
}

TEST_CASE("denoise keeps a carrier inside the selected band") {
    // carrier centered in the level-6 band [78.1, 156.2] kHz at 10 MHz
    const TimeSeries burst = hann_toneburst({1.17e5, 5, 10.0, 1e7, 2e-4});
    WaveletSpec spec;  // db40, 7 levels, keep d6
    const TimeSeries den = wavelet_denoise(burst, spec);
    double num = 0.0, e1 = 0.0, e2 = 0.0;
    for (std::size_t i = 0; i < burst.samples.size(); ++i) {
        num += den.samples[i] * burst.samples[i];
        e1 += den.samples[i] * den.samples[i];
        e2 += burst.samples[i] * burst.samples[i];
    }
    REQUIRE(num / std::sqrt(e1 * e2) >= 0.99);
}

TEST_CASE("denoise of DC-only input is zero") {
    TimeSeries s;
    s.dt = 1e-7;
    s.samples.assign(2000, 4.2);
    const TimeSeries den = wavelet_denoise(s, WaveletSpec{});
    for (double v : den.samples) REQUIRE(std::abs(v) <= 1e-10);
}

TEST_CASE("a band disjoint from the carrier passes almost no energy") {
    const TimeSeries burst = hann_toneburst({1e5, 5, 10.0, 1e7, 2e-4});
    WaveletSpec spec;
    spec.selected_level = 2;  // [1.25, 2.5] MHz, far above 100 kHz
    const TimeSeries den = wavelet_denoise(burst, spec);
    REQUIRE(energy(den.samples) < 0.01 * energy(burst.samples));
}

TEST_CASE("band-selective denoise suppresses broadband noise") {
    const TimeSeries burst = hann_toneburst({1.17e5, 5, 10.0, 1e7, 2e-4});
    WaveletSpec spec;
    const TimeSeries clean_ref = wavelet_denoise(burst, spec);
    Rng rng(3);
    TimeSeries noisy = burst;
    const double sigma = 0.05 * peak_amplitude(burst);
    for (double& v : noisy.samples) v += sigma * rng.gaussian();
    const TimeSeries den = wavelet_denoise(noisy, spec);

    double err_before = 0.0, err_after = 0.0, ref = energy(burst.samples);
    for (std::size_t i = 0; i < burst.samples.size(); ++i) {
        err_before += (noisy.samples[i] - burst.samples[i]) * (noisy.samples[i] - burst.samples[i]);
        err_after += (den.samples[i] - clean_ref.samples[i]) * (den.samples[i] - clean_ref.samples[i]);
    }
    const double gain_db = 10.0 * std::log10(err_before / err_after);
    REQUIRE(gain_db >= 10.0);
    REQUIRE(ref > 0.0);
}
