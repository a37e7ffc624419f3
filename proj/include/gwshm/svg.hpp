#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gwshm/errors.hpp"
#include "gwshm/interpret.hpp"
#include "gwshm/models/model.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

/// Minimal static SVG emitters for --plot output.
namespace svg {

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline void save(const std::string& body, double w, double h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body << "</svg>\n";
}

}  // namespace detail

inline void line_plot(const std::vector<double>& y, const std::string& title,
                      const std::string& path) {
    const double w = 720, h = 240, pad = 30;
    double lo = y.empty() ? 0.0 : y[0], hi = lo;
    for (double v : y) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi == lo) hi = lo + 1.0;
    std::ostringstream body;
    body << "<text x=\"10\" y=\"16\" font-size=\"12\" font-family=\"sans-serif\">"
         << title << "</text>\n<polyline fill=\"none\" stroke=\"#2266aa\" "
         << "stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double px = pad + (w - 2 * pad) * static_cast<double>(i) /
                                    std::max<std::size_t>(1, y.size() - 1);
        const double py = h - pad - (h - 2 * pad) * (y[i] - lo) / (hi - lo);
        body << detail::num(px) << "," << detail::num(py) << " ";
    }
    body << "\"/>\n";
    detail::save(body.str(), w, h, path);
}

inline void confusion_plot(const EvalReport& report, const std::string& path) {
    const double cell = 64, pad = 70;
    const double w = pad + cell * kNumClasses + 20, h = pad + cell * kNumClasses + 20;
    int max_count = 1;
    for (const auto& row : report.confusion)
        for (int v : row) max_count = std::max(max_count, v);
    std::ostringstream body;
    for (int a = 0; a < kNumClasses; ++a) {
        body << "<text x=\"" << pad - 6 << "\" y=\"" << pad + cell * a + cell / 2
             << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">"
             << class_name(static_cast<DamageClass>(a)) << "</text>\n";
        body << "<text x=\"" << pad + cell * a + cell / 2 << "\" y=\"" << pad - 8
             << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
             << class_name(static_cast<DamageClass>(a)) << "</text>\n";
        for (int p = 0; p < kNumClasses; ++p) {
            const double frac = static_cast<double>(report.confusion[a][p]) / max_count;
            const int shade = static_cast<int>(255 - 180 * frac);
            body << "<rect x=\"" << pad + cell * p << "\" y=\"" << pad + cell * a
                 << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"rgb("
                 << shade << "," << shade << ",255)\" stroke=\"#999\"/>\n";
            body << "<text x=\"" << pad + cell * p + cell / 2 << "\" y=\""
                 << pad + cell * a + cell / 2 + 4
                 << "\" font-size=\"12\" text-anchor=\"middle\" "
                    "font-family=\"sans-serif\">"
                 << report.confusion[a][p] << "</text>\n";
        }
    }
    detail::save(body.str(), w, h, path);
}

inline void importance_plot(const ImportanceReport& report, const std::string& path) {
    const double bar_h = 22, pad = 90, w = 640;
    const double h = 40 + bar_h * static_cast<double>(report.per_feature.size());
    double max_drop = 1e-9;
    for (const auto& f : report.per_feature) max_drop = std::max(max_drop, f.mean_drop);
    std::ostringstream body;
    for (std::size_t i = 0; i < report.per_feature.size(); ++i) {
        const auto& f = report.per_feature[i];
        const double y = 20 + bar_h * static_cast<double>(i);
        const double len = std::max(0.0, f.mean_drop) / max_drop * (w - pad - 40);
        body << "<text x=\"" << pad - 6 << "\" y=\"" << y + bar_h / 2 + 4
             << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">"
             << f.feature << "</text>\n";
        body << "<rect x=\"" << pad << "\" y=\"" << y << "\" width=\""
             << detail::num(len) << "\" height=\"" << bar_h - 6
             << "\" fill=\"#338855\"/>\n";
        body << "<text x=\"" << pad + len + 4 << "\" y=\"" << y + bar_h / 2 + 2
             << "\" font-size=\"10\" font-family=\"sans-serif\">"
             << detail::num(f.mean_drop) << "</text>\n";
    }
    detail::save(body.str(), w, h, path);
}

}  // namespace svg
}  // namespace gwshm
