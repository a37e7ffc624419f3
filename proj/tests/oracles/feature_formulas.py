#!/usr/bin/env python3
"""Independent evaluation of the feature formulas, used once to freeze
the regression constants in test_features.cpp.

Reads monitoring/baseline series CSVs (the "# dt=" format) and prints
every feature computed directly from its defining expression with numpy:
integrals as Riemann sums, per-sample statistics with 1/N, spectra as
one-sided raw DFT magnitudes with df as the frequency measure.

Usage: feature_formulas.py monitoring.csv baseline.csv
"""

import sys

import numpy as np


def load(path):
    with open(path) as fh:
        header = fh.readline().strip()
        assert header.startswith("# dt="), header
        dt = float(header[5:])
        assert fh.readline().strip() == "amplitude"
        samples = np.array([float(line) for line in fh if line.strip()])
    return samples, dt


def one_sided_mag(x):
    return np.abs(np.fft.fft(x))[: len(x) // 2 + 1]


def time_features(m, b, dt):
    n = len(m)
    em, eb = np.sum(m * m), np.sum(b * b)
    cross = np.sum(m * b)
    mean = np.mean(m)
    fm, fb = one_sided_mag(m), one_sided_mag(b)
    df = 1.0 / (n * dt)
    sdd_num = (np.sum(np.abs(fb - fm)) * df) ** 2
    sdd_den = (np.sum(fb * fb) * df) * (np.sum(fm * fm) * df)
    return {
        "CCD": 1.0 - np.sqrt(cross * cross / (eb * em)),
        "MAD": np.mean(np.abs(m - mean)),
        "NSED": (em - eb) / eb,
        "PPAD": (m.max() - m.min()) - (b.max() - b.min()),
        "RMS": np.sqrt(em / n),
        "RMSD": np.sqrt(np.sum((m - b) ** 2) / eb),
        "SDD": np.sqrt(sdd_num / sdd_den),
        "SER": em / eb,
        "SIGMA": np.sqrt(np.sum((m - mean) ** 2) / n),
        "VAR": np.sum((m - mean) ** 2) / n,
    }


def baseline_free_features(x):
    n = len(x)
    rms = np.sqrt(np.mean(x * x))
    mean_sqrt_abs = np.mean(np.sqrt(np.abs(x)))
    f = one_sided_mag(x)
    return {
        "SF1": np.mean(x ** 3),
        "SF2": np.mean(x ** 4),
        "SF3": x.max() - x.min(),
        "SF4": np.mean(x ** 4) / np.mean(x * x) ** 2,
        "SF5": rms,
        "SF6": np.sqrt(np.mean((x - x.mean()) ** 2)),
        "SF7": np.max(np.abs(x)) / rms,
        "SF8": rms / mean_sqrt_abs,
        "SF9": np.max(np.abs(x)) / mean_sqrt_abs,
        "SF10": np.max(np.abs(x)) / mean_sqrt_abs ** 2,
        "SF11": np.mean(f * f),
        "SF12": np.mean((f - f.mean()) ** 2),
        "SF13": np.mean(f),
    }


def main():
    m, dt = load(sys.argv[1])
    b, dt_b = load(sys.argv[2])
    assert dt == dt_b and len(m) == len(b)
    for name, value in time_features(m, b, dt).items():
        print(f"{name} {value!r}")
    for name, value in baseline_free_features(m).items():
        print(f"{name} {value!r}")


if __name__ == "__main__":
    main()
