#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalmorse/crystal.hpp"
#include "crystalmorse/morse.hpp"
#include "crystalmorse/poset.hpp"
#include "crystalmorse/relations.hpp"
#include "crystalmorse/scan.hpp"

namespace crystalmorse {

/// {cartan:{family,rank}, lambda, vertices:[{id, word, weight}],
/// edges:[{from,to,color}]}; words as integer lists, barred letters negative.
std::string graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const std::string& text);

CrystalGraph load_graph(const std::string& path);
void save_text(const std::string& path, const std::string& text);

std::string morse_result_to_json(const MorseResult& r);
std::string relations_to_json(const std::vector<RelationRecord>& records);
std::string axiom_report_to_json(const AxiomReport& r);
std::string scan_report_to_json(const ScanReport& r);
std::string witness_to_json(const CrystalGraph& g, const WitnessReport& w);
std::string lattice_to_json(const std::optional<LatticeWitness>& w);

/// DOT with one node per vertex (tableau for type A, word otherwise) and
/// edges labeled and colored by operator index.
std::string to_dot(const CrystalGraph& g);
std::string to_dot(const Interval& iv);

/// Display label: tableau rows joined by '/' for type A, word otherwise.
std::string vertex_label(const CrystalGraph& g, VertexId x);

}  // namespace crystalmorse
