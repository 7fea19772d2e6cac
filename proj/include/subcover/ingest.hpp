#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/objectives.hpp"
#include "subcover/universe.hpp"

namespace subcover {

// Edge-list graph loader ("u v" per line, '#' comments, blank lines skipped).
// Vertex ids are remapped to dense ids in first-seen order; undirected
// duplicates collapse and self-loops are dropped (both counted). Malformed
// lines raise std::runtime_error naming the line number; a graph with no
// edges is an error.
struct SnapLoadResult {
  CutGraph graph;
  std::vector<std::int64_t> original_ids;  // by dense id
  std::unordered_map<std::int64_t, ElementId> id_map;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicate_edges_dropped = 0;
};

SnapLoadResult load_snap_graph(const std::string& path);
SnapLoadResult load_snap_graph(std::istream& in, const std::string& name);

// Canonical form: one "u v" line per edge, dense ids, u < v, sorted;
// reloading reproduces the same edge set and ids.
void write_snap_canonical(const CutGraph& g, std::ostream& out);

// Tagged-corpus loader. Tab-separated: item-id, optional cost column (only
// when with_cost_column), comma-separated tags. Tags are interned in
// first-seen order. Items with zero tags, empty tag tokens, and duplicate
// item ids are errors (with line numbers).
struct CorpusLoadResult {
  TaggedCorpus corpus;
  std::vector<double> costs;  // 1.0 per item unless a cost column was read
  std::unordered_map<std::string, ElementId> item_map;
};

CorpusLoadResult load_tagged_corpus(const std::string& path, bool with_cost_column);
CorpusLoadResult load_tagged_corpus(std::istream& in, const std::string& name,
                                    bool with_cost_column);

// Cost file: "element-id<TAB>cost" per line, one line per element, ids
// resolved through the loader's id map (originals for graphs, item names for
// corpora). Every element must be covered exactly once.
std::vector<double> load_cost_file(const std::string& path,
                                   const std::unordered_map<std::string, ElementId>& ids,
                                   std::size_t n);
std::vector<double> load_cost_file_int(const std::string& path,
                                       const std::unordered_map<std::int64_t, ElementId>& ids,
                                       std::size_t n);

// Seeded synthetic instances.
enum class SynthKind { kErGraph, kCoverage, kModular };

struct SynthSpec {
  SynthKind kind = SynthKind::kModular;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  double edge_prob = 0.1;        // er_graph
  std::size_t vocab = 0;         // coverage; 0 → 3n tags
  std::size_t tags_per_item = 4; // coverage
  // Element costs: uniform 1 when cost_lo == cost_hi == 1, else seeded
  // uniform in [cost_lo, cost_hi].
  double cost_lo = 1.0;
  double cost_hi = 1.0;
  bool shuffle_order = false;    // seeded stream order instead of identity
};

struct SynthInstance {
  std::unique_ptr<SubmodularOracle> oracle;
  CostedUniverse universe;
  std::string description;
};

// modular with n == 3 always yields element values {3, 2, 1} (the worked
// fixture); other sizes draw seeded values in [0.5, 4].
SynthInstance synth_instance(const SynthSpec& spec);

CutGraph synth_er_graph(std::size_t n, double edge_prob, std::uint64_t seed);

}  // namespace subcover
