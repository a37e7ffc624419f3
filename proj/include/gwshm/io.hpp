#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gwshm/errors.hpp"
#include "gwshm/features.hpp"
#include "gwshm/interpret.hpp"
#include "gwshm/models/model.hpp"
#include "gwshm/selection.hpp"
#include "gwshm/types.hpp"

namespace gwshm {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace io_detail {

/// Shortest-exact decimal for a double; parsing it back is lossless.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DataError(where + ": cannot parse number '" + s + "'");
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

inline std::string sanitize_path_id(const std::string& path_id) {
    std::string out;
    for (char c : path_id) out.push_back(c == '*' ? 's' : c);
    return out;
}

}  // namespace io_detail

// ---------------------------------------------------------------------------
// time-series CSV: "# dt=<seconds>" header line, "amplitude" column header,
// one sample per line

inline void write_series_csv(const TimeSeries& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << "# dt=" << io_detail::format_double(s.dt) << "\n";
    out << "amplitude\n";
    for (double v : s.samples) out << io_detail::format_double(v) << "\n";
    if (!out) throw DataError("write failed for '" + path + "'");
}

inline TimeSeries read_series_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    TimeSeries s;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# dt=", 0) != 0)
        throw DataError(path + ": missing '# dt=' header");
    s.dt = io_detail::parse_double(line.substr(5), path + " header");
    if (!std::getline(in, line) || line != "amplitude")
        throw DataError(path + ": missing 'amplitude' column header");
    std::size_t line_no = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        s.samples.push_back(
            io_detail::parse_double(line, path + ":" + std::to_string(line_no)));
    }
    s.validate();
    return s;
}

// ---------------------------------------------------------------------------
// dataset directory: per-series files plus index.csv carrying the metadata

inline std::string series_filename(const SeriesMeta& meta) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s_%s_t%04d_c%03d.csv", class_name(meta.label),
                  io_detail::sanitize_path_id(meta.path_id).c_str(), meta.trial,
                  meta.copy);
    return buf;
}

inline std::vector<std::string> write_dataset(const std::vector<TimeSeries>& dataset,
                                              const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream index(fs::path(dir) / "index.csv", std::ios::binary);
    if (!index) throw DataError("cannot open '" + dir + "/index.csv' for writing");
    index << "file,class,path,trial,copy,provenance\n";
    std::vector<std::string> files;
    for (const auto& s : dataset) {
        const std::string name = series_filename(s.meta);
        write_series_csv(s, (fs::path(dir) / name).string());
        index << name << "," << class_name(s.meta.label) << "," << s.meta.path_id << ","
              << s.meta.trial << "," << s.meta.copy << ","
              << provenance_name(s.meta.provenance) << "\n";
        files.push_back(name);
    }
    if (!index) throw DataError("write failed for '" + dir + "/index.csv'");
    return files;
}

inline std::vector<TimeSeries> read_dataset(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path index_path = fs::path(dir) / "index.csv";
    std::ifstream index(index_path, std::ios::binary);
    if (!index) throw DataError("cannot open '" + index_path.string() + "'");
    std::string line;
    if (!std::getline(index, line) || line != "file,class,path,trial,copy,provenance")
        throw DataError(index_path.string() + ": unexpected header '" + line + "'");
    std::vector<TimeSeries> out;
    std::size_t line_no = 1;
    while (std::getline(index, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = io_detail::split_csv_line(line);
        if (fields.size() != 6)
            throw DataError(index_path.string() + ":" + std::to_string(line_no) +
                            ": expected 6 fields, got " + std::to_string(fields.size()));
        TimeSeries s = read_series_csv((fs::path(dir) / fields[0]).string());
        s.meta.label = class_from_name(fields[1]);
        s.meta.path_id = fields[2];
        s.meta.trial = static_cast<int>(io_detail::parse_double(fields[3], "index trial"));
        s.meta.copy = static_cast<int>(io_detail::parse_double(fields[4], "index copy"));
        s.meta.provenance = provenance_from_name(fields[5]);
        out.push_back(std::move(s));
    }
    if (out.empty()) throw DataError(dir + ": dataset is empty");
    return out;
}

// ---------------------------------------------------------------------------
// feature-matrix CSV: feature ids + "label" header, one row per series

inline void write_feature_matrix_csv(const FeatureMatrix& fm, const std::string& path) {
    fm.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    for (const auto& name : fm.feature_names) out << name << ",";
    out << "label\n";
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        for (double v : fm.rows[i]) out << io_detail::format_double(v) << ",";
        out << class_name(fm.labels[i]) << "\n";
    }
    if (!out) throw DataError("write failed for '" + path + "'");
}

inline FeatureMatrix read_feature_matrix_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": empty file");
    auto header = io_detail::split_csv_line(line);
    if (header.size() < 2 || header.back() != "label")
        throw DataError(path + ": header must end with 'label'");
    FeatureMatrix fm;
    fm.feature_names.assign(header.begin(), header.end() - 1);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = io_detail::split_csv_line(line);
        if (fields.size() != header.size())
            throw DataError(path + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        std::vector<double> row(fm.feature_names.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            row[j] = io_detail::parse_double(fields[j],
                                             path + ":" + std::to_string(line_no));
        fm.rows.push_back(std::move(row));
        fm.labels.push_back(class_from_name(fields.back()));
    }
    fm.validate();
    return fm;
}

// ---------------------------------------------------------------------------
// ingest: external three-column recordings (time,amplitude,label)

struct IngestReport {
    std::size_t rows = 0;
    double dt = 0.0;
    DamageClass label = DamageClass::Baseline;
};

/// Validate and normalize one externally recorded series. The time
/// column must be uniform within 1e-6 relative jitter; amplitudes must
/// be finite; the label column must hold one known class name.
inline std::pair<TimeSeries, IngestReport> ingest_series_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": empty file");
    {
        auto header = io_detail::split_csv_line(line);
        if (header.size() != 3 || header[0] != "time" || header[1] != "amplitude" ||
            header[2] != "label")
            throw DataError(path + ": expected header 'time,amplitude,label'");
    }

    std::vector<double> times, amplitudes;
    std::string label_name;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = io_detail::split_csv_line(line);
        if (fields.size() != 3)
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": expected 3 fields, got " + std::to_string(fields.size()));
        const double t =
            io_detail::parse_double(fields[0], path + ":" + std::to_string(line_no));
        const double a =
            io_detail::parse_double(fields[1], path + ":" + std::to_string(line_no));
        if (!std::isfinite(a))
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": non-finite amplitude");
        if (fields[2].empty())
            throw DataError(path + ":" + std::to_string(line_no) + ": missing label");
        if (label_name.empty()) label_name = fields[2];
        else if (label_name != fields[2])
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": label changes mid-file ('" + label_name + "' -> '" +
                            fields[2] + "')");
        times.push_back(t);
        amplitudes.push_back(a);
    }
    if (times.size() < 2) throw DataError(path + ": need at least 2 samples");

    const double dt = times[1] - times[0];
    if (!(dt > 0.0)) throw DataError(path + ": time column must be increasing");
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double step = times[i] - times[i - 1];
        if (std::abs(step - dt) > 1e-6 * std::abs(dt))
            throw DataError(path + ":" + std::to_string(i + 2) +
                            ": non-uniform sampling (dt jitter " +
                            io_detail::format_double(std::abs(step - dt) / dt) +
                            " relative exceeds 1e-6)");
    }

    TimeSeries s;
    s.samples = std::move(amplitudes);
    s.dt = dt;
    s.meta.label = class_from_name(label_name);
    s.meta.path_id = "ingested";
    s.meta.provenance = Provenance::Ingested;
    s.validate();
    return {s, IngestReport{s.samples.size(), dt, s.meta.label}};
}

// ---------------------------------------------------------------------------
// JSON reports

inline ordered_json eval_report_json(const EvalReport& r, ModelVariant variant) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["variant"] = variant_name(variant);
    j["accuracy"] = r.accuracy;
    j["n_test"] = r.n_test;
    j["seed"] = r.seed;
    j["classes"] = ordered_json::array();
    for (DamageClass c : kAllClasses) j["classes"].push_back(class_name(c));
    j["confusion"] = ordered_json::array();
    for (const auto& row : r.confusion) {
        ordered_json jr = ordered_json::array();
        for (int v : row) jr.push_back(v);
        j["confusion"].push_back(jr);
    }
    return j;
}

inline ordered_json selection_report_json(const SelectionReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["threshold"] = r.threshold;
    j["kept"] = r.kept;
    j["dropped"] = ordered_json::array();
    for (const auto& d : r.dropped) {
        ordered_json jd;
        jd["id"] = d.id;
        jd["reason"] = d.reason;
        jd["representative"] = d.representative;
        jd["abs_correlation"] = d.abs_correlation;
        j["dropped"].push_back(jd);
    }
    return j;
}

inline ordered_json importance_report_json(const ImportanceReport& r) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["baseline_accuracy"] = r.baseline_accuracy;
    j["repeats"] = r.repeats;
    j["seed"] = r.seed;
    j["features"] = ordered_json::array();
    for (const auto& f : r.per_feature) {
        ordered_json jf;
        jf["feature"] = f.feature;
        jf["mean_drop"] = f.mean_drop;
        jf["std_drop"] = f.std_drop;
        j["features"].push_back(jf);
    }
    return j;
}

inline void write_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) throw DataError("write failed for '" + path + "'");
}

inline ordered_json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw DataError(path + ": invalid JSON: " + e.what());
    }
}

// ---------------------------------------------------------------------------
// model serialization (versioned JSON)

inline ordered_json model_to_json(const Model& model) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["variant"] = variant_name(model.variant);
    j["feature_names"] = model.feature_names;
    if (model.scaler) {
        j["scaler"]["mean"] = model.scaler->mean;
        j["scaler"]["std"] = model.scaler->std_dev;
    }
    ordered_json p;
    if (const auto* m = std::get_if<LogisticOvR>(&model.params)) {
        p["weights"] = m->weights;
        p["bias"] = m->bias;
        p["iterations"] = m->iterations;
    } else if (const auto* m = std::get_if<LinearSvmOvO>(&model.params)) {
        p["pairs"] = ordered_json::array();
        for (const auto& pc : m->pairs) {
            ordered_json jp;
            jp["class_a"] = pc.class_a;
            jp["class_b"] = pc.class_b;
            jp["weights"] = pc.weights;
            jp["bias"] = pc.bias;
            p["pairs"].push_back(jp);
        }
    } else if (const auto* m = std::get_if<GaussianNB>(&model.params)) {
        p["means"] = m->means;
        p["variances"] = m->variances;
        // priors stored as probabilities: absent classes become 0,
        // which JSON can represent (log of 0 restores -inf on load)
        ordered_json priors = ordered_json::array();
        for (double lp : m->log_priors) priors.push_back(std::isinf(lp) ? 0.0 : std::exp(lp));
        p["priors"] = priors;
    } else if (const auto* m = std::get_if<DecisionTree>(&model.params)) {
        p["nodes"] = ordered_json::array();
        for (const auto& nd : m->nodes) {
            ordered_json jn;
            jn["leaf"] = nd.leaf;
            jn["feature"] = nd.feature;
            jn["threshold"] = nd.threshold;
            jn["left"] = nd.left;
            jn["right"] = nd.right;
            jn["label"] = nd.label;
            jn["counts"] = nd.counts;
            p["nodes"].push_back(jn);
        }
    } else {
        const auto& forest = std::get<RandomForest>(model.params);
        p["mtry"] = forest.mtry;
        p["trees"] = ordered_json::array();
        for (const auto& tree : forest.trees) {
            ordered_json jt = ordered_json::array();
            for (const auto& nd : tree.nodes) {
                ordered_json jn;
                jn["leaf"] = nd.leaf;
                jn["feature"] = nd.feature;
                jn["threshold"] = nd.threshold;
                jn["left"] = nd.left;
                jn["right"] = nd.right;
                jn["label"] = nd.label;
                jn["counts"] = nd.counts;
                jt.push_back(jn);
            }
            p["trees"].push_back(jt);
        }
    }
    j["params"] = p;
    return j;
}

namespace io_detail {

inline DecisionTree tree_from_json(const ordered_json& jt) {
    DecisionTree tree;
    for (const auto& jn : jt) {
        DecisionTree::Node nd;
        nd.leaf = jn.at("leaf").get<bool>();
        nd.feature = jn.at("feature").get<int>();
        nd.threshold = jn.at("threshold").get<double>();
        nd.left = jn.at("left").get<int>();
        nd.right = jn.at("right").get<int>();
        nd.label = jn.at("label").get<int>();
        const auto& counts = jn.at("counts");
        for (int c = 0; c < kNumClasses; ++c)
            nd.counts[static_cast<std::size_t>(c)] = counts.at(static_cast<std::size_t>(c)).get<int>();
        tree.nodes.push_back(nd);
    }
    return tree;
}

}  // namespace io_detail

inline Model model_from_json(const ordered_json& j) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion)
            throw DataError("model: unsupported schema_version");
        Model model;
        model.variant = variant_from_name(j.at("variant").get<std::string>());
        model.feature_names = j.at("feature_names").get<std::vector<std::string>>();
        if (j.contains("scaler")) {
            Scaler s;
            s.mean = j["scaler"].at("mean").get<std::vector<double>>();
            s.std_dev = j["scaler"].at("std").get<std::vector<double>>();
            model.scaler = s;
        }
        const auto& p = j.at("params");
        switch (model.variant) {
            case ModelVariant::LogisticOvR: {
                LogisticOvR m;
                m.weights = p.at("weights").get<std::vector<std::vector<double>>>();
                m.bias = p.at("bias").get<std::vector<double>>();
                m.iterations = p.at("iterations").get<std::vector<int>>();
                model.params = std::move(m);
                break;
            }
            case ModelVariant::LinearSvmOvO: {
                LinearSvmOvO m;
                for (const auto& jp : p.at("pairs")) {
                    LinearSvmOvO::PairClassifier pc;
                    pc.class_a = jp.at("class_a").get<int>();
                    pc.class_b = jp.at("class_b").get<int>();
                    pc.weights = jp.at("weights").get<std::vector<double>>();
                    pc.bias = jp.at("bias").get<double>();
                    m.pairs.push_back(std::move(pc));
                }
                model.params = std::move(m);
                break;
            }
            case ModelVariant::GaussianNB: {
                GaussianNB m;
                m.means = p.at("means").get<std::vector<std::vector<double>>>();
                m.variances = p.at("variances").get<std::vector<std::vector<double>>>();
                for (const auto& prior : p.at("priors"))
                    m.log_priors.push_back(std::log(prior.get<double>()));
                model.params = std::move(m);
                break;
            }
            case ModelVariant::DecisionTree:
                model.params = io_detail::tree_from_json(p.at("nodes"));
                break;
            case ModelVariant::RandomForest: {
                RandomForest m;
                m.mtry = p.at("mtry").get<int>();
                for (const auto& jt : p.at("trees"))
                    m.trees.push_back(io_detail::tree_from_json(jt));
                model.params = std::move(m);
                break;
            }
        }
        return model;
    } catch (const ordered_json::exception& e) {
        throw DataError(std::string("model JSON malformed: ") + e.what());
    }
}

}  // namespace gwshm
