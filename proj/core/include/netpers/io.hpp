#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netpers/dendrogram.hpp"
#include "netpers/diagram_distance.hpp"
#include "netpers/filtration.hpp"
#include "netpers/hippocampus.hpp"
#include "netpers/network.hpp"
#include "netpers/persistence.hpp"

namespace netpers {

/// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);
double parse_double(const std::string& text);  // throws input_error

// Network JSON: {"labels": [...], "weights": [[...]]}. CSV: label header row,
// then one matrix row per node. Both round-trip bit-exactly.
Network load_network(const std::string& path);  // dispatches on extension (.json/.csv)
Network read_network_json(std::istream& in, const std::string& origin = "<stream>");
Network read_network_csv(std::istream& in, const std::string& origin = "<stream>");
std::string network_to_json(const Network& x);
std::string network_to_csv(const Network& x);

// Diagram CSV: header "dim,birth,death", death "inf" for essential points,
// rows sorted by (dim, birth, death), multiplicities expanded.
std::string diagram_to_csv(const PersistenceDiagram& d);
PersistenceDiagram read_diagram_csv(std::istream& in, const std::string& origin = "<stream>");
PersistenceDiagram load_diagram_csv(const std::string& path);

// Filtration dump: lines "birth dim v0 v1 ... vk" in canonical order.
std::string filtration_to_text(const FilteredComplex& f);

// DistanceMatrix CSV: label header row, then one row of distances per label.
std::string distance_matrix_to_csv(const DistanceMatrix& m);

// Dendrogram JSON: {"leaves": [...], "merges": [[height, a, b, new_id], ...]}.
std::string dendrogram_to_json(const Dendrogram& d);

// Experiment config JSON. master_seed is mandatory (no ambient entropy);
// every other field falls back to the desk-scale default.
ExperimentConfig read_experiment_config(std::istream& in, const std::string& origin = "<stream>");
ExperimentConfig load_experiment_config(const std::string& path);

/// Writes to a temporary file in the destination directory and renames on
/// success, so failed commands never leave partial output behind.
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace netpers
