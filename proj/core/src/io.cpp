#include "netpers/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace netpers {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::logic_error("double formatting failed");
    return std::string(buf, end);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw input_error("cannot parse number '" + text + "'");
    return v;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_weight_cell(const std::string& text, const std::string& origin, int row, int col) {
    try {
        return parse_double(trimmed(text));
    } catch (const input_error&) {
        throw input_error(origin + ": cannot parse weight at row " + std::to_string(row) +
                          ", column " + std::to_string(col) + ": '" + trimmed(text) + "'");
    }
}

}  // namespace

Network read_network_json(std::istream& in, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("weights"))
        throw input_error(origin + ": expected an object with 'labels' and 'weights'");
    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
        if (!l.is_string()) throw input_error(origin + ": labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<double>> weights;
    int row = 0;
    for (const auto& r : doc["weights"]) {
        std::vector<double> w;
        int col = 0;
        for (const auto& v : r) {
            if (!v.is_number())
                throw input_error(origin + ": non-numeric weight at row " + std::to_string(row) +
                                  ", column " + std::to_string(col));
            w.push_back(v.get<double>());
            ++col;
        }
        weights.push_back(std::move(w));
        ++row;
    }
    try {
        return Network(std::move(labels), std::move(weights));
    } catch (const input_error& e) {
        throw input_error(origin + ": " + e.what());
    }
}

Network read_network_csv(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) throw input_error(origin + ": empty file");
    std::vector<std::string> labels;
    for (auto& f : split_csv_line(line)) labels.push_back(trimmed(f));
    std::vector<std::vector<double>> weights;
    int row = 0;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        auto fields = split_csv_line(line);
        std::vector<double> w;
        for (std::size_t c = 0; c < fields.size(); ++c)
            w.push_back(parse_weight_cell(fields[c], origin, row, static_cast<int>(c)));
        weights.push_back(std::move(w));
        ++row;
    }
    try {
        return Network(std::move(labels), std::move(weights));
    } catch (const input_error& e) {
        throw input_error(origin + ": " + e.what());
    }
}

Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open network file '" + path + "'");
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return read_network_csv(in, path);
    return read_network_json(in, path);
}

std::string network_to_json(const Network& x) {
    json doc;
    doc["labels"] = x.labels();
    json rows = json::array();
    for (int i = 0; i < x.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < x.size(); ++j) row.push_back(x.weight(i, j));
        rows.push_back(std::move(row));
    }
    doc["weights"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string network_to_csv(const Network& x) {
    std::string out;
    for (int i = 0; i < x.size(); ++i) {
        const auto& l = x.labels()[i];
        if (l.find(',') != std::string::npos || l.find('\n') != std::string::npos)
            throw input_error("label '" + l + "' cannot be written to CSV");
        out += (i ? "," : "") + l;
    }
    out += '\n';
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < x.size(); ++j) {
            if (j) out += ',';
            out += format_double(x.weight(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string diagram_to_csv(const PersistenceDiagram& d) {
    std::string out = "dim,birth,death\n";
    for (int dim = 0; dim <= d.max_dim(); ++dim)
        for (const auto& p : d.at_dim(dim)) {  // stored sorted by (birth, death)
            out += std::to_string(dim);
            out += ',';
            out += format_double(p.birth);
            out += ',';
            out += p.essential() ? "inf" : format_double(p.death);
            out += '\n';
        }
    return out;
}

PersistenceDiagram read_diagram_csv(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) throw input_error(origin + ": empty diagram file");
    if (trimmed(line) != "dim,birth,death")
        throw input_error(origin + ": expected header 'dim,birth,death'");
    PersistenceDiagram d;
    int row = 1;
    while (std::getline(in, line)) {
        if (trimmed(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw input_error(origin + ": line " + std::to_string(row + 1) +
                              ": expected 3 fields");
        int dim = 0;
        try {
            dim = std::stoi(trimmed(fields[0]));
        } catch (...) {
            throw input_error(origin + ": bad dimension '" + trimmed(fields[0]) + "'");
        }
        double birth = parse_weight_cell(fields[1], origin, row, 1);
        std::string death_text = trimmed(fields[2]);
        double death = death_text == "inf" ? kInfiniteDeath : parse_weight_cell(fields[2], origin, row, 2);
        d.add(dim, {birth, death});
        ++row;
    }
    d.sort_points();
    return d;
}

PersistenceDiagram load_diagram_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open diagram file '" + path + "'");
    return read_diagram_csv(in, path);
}

std::string filtration_to_text(const FilteredComplex& f) {
    std::string out;
    for (const auto& s : f.simplices()) {
        out += format_double(s.birth);
        out += ' ';
        out += std::to_string(simplex_dim(s.vertices));
        for (int v : s.vertices) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

std::string distance_matrix_to_csv(const DistanceMatrix& m) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        const auto& l = m.labels[i];
        if (l.find(',') != std::string::npos)
            throw input_error("label '" + l + "' cannot be written to CSV");
        out += (i ? "," : "") + l;
    }
    out += '\n';
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) out += ',';
            out += std::isfinite(m.d[i][j]) ? format_double(m.d[i][j]) : "inf";
        }
        out += '\n';
    }
    return out;
}

std::string dendrogram_to_json(const Dendrogram& d) {
    json doc;
    doc["leaves"] = d.leaves;
    json merges = json::array();
    for (const auto& m : d.merges)
        merges.push_back(json::array({m.height, m.cluster_a, m.cluster_b, m.new_id}));
    doc["merges"] = std::move(merges);
    return doc.dump(2) + "\n";
}

ExperimentConfig read_experiment_config(std::istream& in, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(origin + ": invalid JSON: " + std::string(e.what()));
    }
    ExperimentConfig cfg;
    if (!doc.contains("master_seed"))
        throw input_error(origin + ": config must pin 'master_seed' explicitly");
    try {
        cfg.master_seed = doc["master_seed"].get<std::uint64_t>();
        auto grab = [&](const char* key, auto& field) {
            if (doc.contains(key)) field = doc[key].get<std::decay_t<decltype(field)>>();
        };
        grab("arena_side", cfg.arena_side);
        grab("grid_points", cfg.grid_points);
        grab("hole_radius_factor", cfg.hole_radius_factor);
        grab("classes", cfg.classes);
        grab("trials_per_class", cfg.trials_per_class);
        grab("steps", cfg.steps);
        grab("fields_min", cfg.fields_min);
        grab("fields_max", cfg.fields_max);
        grab("field_radius_factor", cfg.field_radius_factor);
        grab("delay_window", cfg.delay_window);
        grab("snap_grid", cfg.snap_grid);
        grab("coverage_threshold", cfg.coverage_threshold);
        grab("max_dim", cfg.max_dim);
        grab("diagram_dim", cfg.diagram_dim);
    } catch (const json::exception& e) {
        throw input_error(origin + ": bad config field: " + std::string(e.what()));
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file '" + path + "'");
    return read_experiment_config(in, path);
}

void atomic_write_file(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write to '" + tmp.string() + "'");
        out << contents;
        if (!out.good()) {
            fs::remove(tmp);
            throw input_error("write failed for '" + path + "'");
        }
    }
    fs::rename(tmp, target);
}

}  // namespace netpers
