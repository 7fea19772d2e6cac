#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "subcover/core.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

// Undirected weighted graph over vertices 0..vertex_count-1, stored both as an
// edge list and as CSR adjacency. No self-loops, no duplicate edges.
struct CutGraph {
  std::size_t vertex_count = 0;
  struct Edge {
    ElementId u, v;
    double w;
  };
  std::vector<Edge> edges;

  // CSR adjacency, built by finalize().
  std::vector<std::size_t> adj_offsets;
  std::vector<ElementId> adj_vertex;
  std::vector<double> adj_weight;

  void finalize();  // validates edges and builds adjacency
  double weighted_degree(ElementId v) const;
};

// Cut value f(X) = Σ weight of edges with exactly one endpoint in X.
// f(∅) = f(V) = 0; symmetric, nonnegative, submodular.
double graph_cut_value(const CutGraph& g, ElementSpan x_set);

class GraphCutOracle final : public SubmodularOracle {
 public:
  explicit GraphCutOracle(CutGraph g);
  std::size_t ground_size() const override { return graph_.vertex_count; }
  double value(ElementSpan subset) const override { return graph_cut_value(graph_, subset); }
  const CutGraph& graph() const { return graph_; }

 private:
  CutGraph graph_;
};

// Plain coverage f(X) = |∪_{x∈X} tags(x)| over an interned tag vocabulary.
class CoverageOracle final : public SubmodularOracle {
 public:
  // item_tags[i]: tag ids of item i, each in [0, vocab_size).
  CoverageOracle(std::vector<std::vector<std::int32_t>> item_tags, std::size_t vocab_size);
  std::size_t ground_size() const override { return tags_.size(); }
  double value(ElementSpan subset) const override;
  std::size_t vocab_size() const { return vocab_; }

 private:
  std::vector<std::vector<std::int32_t>> tags_;  // sorted, deduplicated
  std::size_t vocab_;
};

enum class SimilarityMode {
  kJaccard,        // |t(x) ∩ t(y)| / |t(x) ∪ t(y)|
  kInverseJaccard  // |t(x) ∪ t(y)| / |t(x) ∩ t(y)|, 0 for disjoint pairs
};

// Tagged item corpus for the diverse summarization objective.
struct TaggedCorpus {
  std::vector<std::vector<std::int32_t>> item_tags;  // sorted tag ids per item
  std::vector<std::string> tag_names;                // vocabulary, by tag id
  std::vector<std::string> item_names;               // optional, by item id
  double gamma_div = 0.0;
  SimilarityMode similarity = SimilarityMode::kJaccard;

  std::size_t size() const { return item_tags.size(); }
  std::size_t vocab_size() const { return tag_names.size(); }
};

double tag_similarity(const TaggedCorpus& c, ElementId a, ElementId b);

// f(X) = |∪ tags| - gamma_div * Σ_{ordered pairs x≠y in X} sim(x, y), clamped
// at 0. clamped (when non-null) is set to true if the clamp fired.
double diverse_summary_value(const TaggedCorpus& c, ElementSpan x_set, bool* clamped = nullptr);

// Default diversity weight: |∪_{x∈U} t(x)| / Σ_{ordered pairs x≠y} sim(x, y),
// or 0 when the pair-similarity mass is 0.
double default_gamma_div(const TaggedCorpus& c);

class DiverseSummaryOracle final : public SubmodularOracle {
 public:
  explicit DiverseSummaryOracle(TaggedCorpus corpus) : corpus_(std::move(corpus)) {}
  std::size_t ground_size() const override { return corpus_.size(); }
  double value(ElementSpan subset) const override {
    bool fired = false;
    double v = diverse_summary_value(corpus_, subset, &fired);
    if (fired) clamp_fired_.store(true, std::memory_order_relaxed);
    return v;
  }
  const TaggedCorpus& corpus() const { return corpus_; }
  // Warning flag: the penalty exceeded the coverage term on some evaluated set.
  bool clamp_fired() const { return clamp_fired_.load(std::memory_order_relaxed); }

 private:
  TaggedCorpus corpus_;
  mutable std::atomic<bool> clamp_fired_{false};
};

}  // namespace subcover
