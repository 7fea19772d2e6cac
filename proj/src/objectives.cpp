#include "subcover/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcover {
namespace {

// Generation-stamped membership scratch: mark/test without re-zeroing.
struct StampSet {
  std::vector<std::uint64_t> stamp;
  std::uint64_t gen = 0;

  void begin(std::size_t n) {
    if (stamp.size() < n) stamp.resize(n, 0);
    ++gen;
  }
  void mark(std::size_t i) { stamp[i] = gen; }
  bool marked(std::size_t i) const { return stamp[i] == gen; }
};

thread_local StampSet t_member;
thread_local StampSet t_tags;
thread_local std::vector<ElementId> t_sorted;

void sort_subset(ElementSpan subset, std::size_t ground, const char* what) {
  t_sorted.assign(subset.begin(), subset.end());
  std::sort(t_sorted.begin(), t_sorted.end());
  if (!t_sorted.empty() && t_sorted.back() >= ground)
    throw std::invalid_argument(std::string("unknown ") + what + " id " +
                                std::to_string(t_sorted.back()));
}

std::size_t intersection_size(const std::vector<std::int32_t>& a,
                              const std::vector<std::int32_t>& b) {
  std::size_t i = 0, j = 0, k = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++k; ++i; ++j; }
  }
  return k;
}

}  // namespace

void CutGraph::finalize() {
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint outside vertex range");
    if (e.u == e.v) throw std::invalid_argument("self-loop in finalized graph");
    if (!std::isfinite(e.w) || e.w < 0.0)
      throw std::invalid_argument("edge weights must be finite and nonnegative");
    ++deg[e.u];
    ++deg[e.v];
  }
  adj_offsets.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) adj_offsets[v + 1] = adj_offsets[v] + deg[v];
  adj_vertex.resize(adj_offsets[vertex_count]);
  adj_weight.resize(adj_offsets[vertex_count]);
  std::vector<std::size_t> fill(adj_offsets.begin(), adj_offsets.end() - 1);
  for (const Edge& e : edges) {
    adj_vertex[fill[e.u]] = e.v;
    adj_weight[fill[e.u]++] = e.w;
    adj_vertex[fill[e.v]] = e.u;
    adj_weight[fill[e.v]++] = e.w;
  }
}

double CutGraph::weighted_degree(ElementId v) const {
  double total = 0.0;
  for (std::size_t k = adj_offsets[v]; k < adj_offsets[v + 1]; ++k) total += adj_weight[k];
  return total;
}

double graph_cut_value(const CutGraph& g, ElementSpan x_set) {
  if (g.adj_offsets.size() != g.vertex_count + 1)
    throw std::logic_error("graph not finalized before evaluation");
  sort_subset(x_set, g.vertex_count, "vertex");
  t_member.begin(g.vertex_count);
  for (ElementId v : t_sorted) t_member.mark(v);
  double total = 0.0;
  for (ElementId v : t_sorted) {
    for (std::size_t k = g.adj_offsets[v]; k < g.adj_offsets[v + 1]; ++k) {
      if (!t_member.marked(g.adj_vertex[k])) total += g.adj_weight[k];
    }
  }
  return total;
}

GraphCutOracle::GraphCutOracle(CutGraph g) : graph_(std::move(g)) {
  if (graph_.adj_offsets.size() != graph_.vertex_count + 1) graph_.finalize();
}

CoverageOracle::CoverageOracle(std::vector<std::vector<std::int32_t>> item_tags,
                               std::size_t vocab_size)
    : tags_(std::move(item_tags)), vocab_(vocab_size) {
  for (auto& ts : tags_) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::int32_t t : ts) {
      if (t < 0 || static_cast<std::size_t>(t) >= vocab_)
        throw std::invalid_argument("tag id outside vocabulary");
    }
  }
}

double CoverageOracle::value(ElementSpan subset) const {
  sort_subset(subset, tags_.size(), "item");
  t_tags.begin(vocab_);
  std::size_t covered = 0;
  for (ElementId x : t_sorted) {
    for (std::int32_t t : tags_[x]) {
      if (!t_tags.marked(static_cast<std::size_t>(t))) {
        t_tags.mark(static_cast<std::size_t>(t));
        ++covered;
      }
    }
  }
  return static_cast<double>(covered);
}

double tag_similarity(const TaggedCorpus& c, ElementId a, ElementId b) {
  const auto& ta = c.item_tags[a];
  const auto& tb = c.item_tags[b];
  std::size_t inter = intersection_size(ta, tb);
  std::size_t uni = ta.size() + tb.size() - inter;
  if (c.similarity == SimilarityMode::kJaccard) {
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
  }
  // Literal ratio is undefined for disjoint tag sets; those pairs contribute 0.
  return inter == 0 ? 0.0 : static_cast<double>(uni) / static_cast<double>(inter);
}

double diverse_summary_value(const TaggedCorpus& c, ElementSpan x_set, bool* clamped) {
  sort_subset(x_set, c.size(), "item");
  std::vector<ElementId> items = t_sorted;  // pair loop reuses the scratch otherwise
  t_tags.begin(c.vocab_size());
  std::size_t covered = 0;
  for (ElementId x : items) {
    for (std::int32_t t : c.item_tags[x]) {
      if (!t_tags.marked(static_cast<std::size_t>(t))) {
        t_tags.mark(static_cast<std::size_t>(t));
        ++covered;
      }
    }
  }
  double penalty = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      penalty += tag_similarity(c, items[i], items[j]);
    }
  }
  double raw = static_cast<double>(covered) - c.gamma_div * 2.0 * penalty;
  if (raw < 0.0) {
    if (clamped) *clamped = true;
    return 0.0;
  }
  return raw;
}

double default_gamma_div(const TaggedCorpus& c) {
  t_tags.begin(c.vocab_size());
  std::size_t covered = 0;
  for (const auto& ts : c.item_tags) {
    for (std::int32_t t : ts) {
      if (!t_tags.marked(static_cast<std::size_t>(t))) {
        t_tags.mark(static_cast<std::size_t>(t));
        ++covered;
      }
    }
  }
  double pair_mass = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      pair_mass += tag_similarity(c, static_cast<ElementId>(i), static_cast<ElementId>(j));
    }
  }
  pair_mass *= 2.0;  // ordered pairs
  return pair_mass == 0.0 ? 0.0 : static_cast<double>(covered) / pair_mass;
}

}  // namespace subcover
