#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "walklen/classify.hpp"
#include "walklen/digraph.hpp"
#include "walklen/filtration.hpp"
#include "walklen/persistence.hpp"

namespace walklen {

// All numeric output uses 12 significant digits with the token `inf` for
// +infinity, so subcommand chains round-trip decimally printed values.
std::string format_value(double v);
double parse_value(const std::string& token);

// Dense square matrix CSV: headerless grid of decimal numbers, `inf` allowed.
void write_matrix_csv(std::ostream& os, const std::vector<std::vector<double>>& m);
std::vector<std::vector<double>> read_matrix_csv(std::istream& is);

void write_graph_csv(std::ostream& os, const WeightedDigraph& g);

// Edge-list CSV with header `source,target,weight`; vertex names map to
// indices in first-appearance order, missing pairs become +inf.
WeightedDigraph read_edge_list_csv(std::istream& is, std::vector<std::string>* names = nullptr);

// Reads either format, detected by the edge-list header.
WeightedDigraph read_graph_csv(std::istream& is);
WeightedDigraph read_graph_file(const std::string& path);

// Filtration dump CSV with header `dim,vertices,value`; vertices are
// `;`-joined indices.
void write_filtration_csv(std::ostream& os, const FilteredComplex& fc);
FilteredComplex read_filtration_csv(std::istream& is);
bool looks_like_filtration_csv(const std::string& first_line);

// Diagram CSV with header `dim,birth,death`.
void write_diagram_csv(std::ostream& os, const PersistenceDiagram& dgm);
PersistenceDiagram read_diagram_csv(std::istream& is);
PersistenceDiagram read_diagram_file(const std::string& path);

// Linkage CSV with header `step,cluster_a,cluster_b,distance`.
void write_linkage_csv(std::ostream& os, const std::vector<LinkageMerge>& merges);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace walklen
