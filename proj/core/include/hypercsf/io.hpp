#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercsf/assignment.hpp"
#include "hypercsf/hypergraph.hpp"
#include "hypercsf/qsym.hpp"

namespace hypercsf::io {

// Parsed hypergraph file: {"vertices": [...], "edges": [[...]...],
// "cycles": optional, "edge_order": optional}.  Labels may be strings or
// numbers; edge_order entries are 0-based indices into "edges".
struct HypergraphInput {
  Hypergraph h;
  std::optional<std::vector<int>> edge_order;
  std::optional<std::vector<std::vector<int>>> cycles;  // canonical indices
};

HypergraphInput parse_hypergraph(const std::string& json_text);

// Fills the omitted pieces with leaf_edge_ordering / default_cycles.
Hypertree to_hypertree(const HypergraphInput& in);

// {"degree": n, "basis": ..., "terms": [{"index": [...], "coeff": c}...]}
std::string expansion_json(const QSymF& x);
std::string expansion_json(const QSymM& x);
std::string expansion_json(const SymExpansion& x);

// {"n": k, "table": [{"perm": [...], "S": [...]}...]}, rows in
// lexicographic order of perm.
std::string assignment_json(const PartitionAssignment& a);
// Re-verifies the table; rejects tampered or incomplete files.
PartitionAssignment parse_assignment(const std::string& json_text);

std::string fnv1a_digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hypercsf::io
