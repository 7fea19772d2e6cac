#include "subcover/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace subcover {
namespace {

[[noreturn]] void fail_at(const std::string& name, std::size_t line, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

// Tolerate CRLF input: getline leaves the '\r' on the line.
void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

double parse_cost_token(const std::string& tok, const std::string& name, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    double c = std::stod(tok, &pos);
    if (pos != tok.size()) fail_at(name, line_no, "trailing characters in cost '" + tok + "'");
    if (!(c > 0.0) || !std::isfinite(c)) fail_at(name, line_no, "cost must be positive");
    return c;
  } catch (const std::invalid_argument&) {
    fail_at(name, line_no, "unreadable cost '" + tok + "'");
  } catch (const std::out_of_range&) {
    fail_at(name, line_no, "cost out of range '" + tok + "'");
  }
}

}  // namespace

SnapLoadResult load_snap_graph(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return load_snap_graph(in, path);
}

SnapLoadResult load_snap_graph(std::istream& in, const std::string& name) {
  SnapLoadResult r;
  std::set<std::pair<ElementId, ElementId>> seen;
  std::string line;
  std::size_t line_no = 0;

  auto dense = [&](std::int64_t orig) {
    auto [it, fresh] = r.id_map.try_emplace(orig, static_cast<ElementId>(r.original_ids.size()));
    if (fresh) r.original_ids.push_back(orig);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::int64_t a, b;
    if (!(ls >> a >> b)) fail_at(name, line_no, "expected two integer vertex ids");
    std::string extra;
    if (ls >> extra) fail_at(name, line_no, "unexpected trailing token '" + extra + "'");
    if (a == b) {
      ++r.self_loops_dropped;
      continue;
    }
    ElementId u = dense(a), v = dense(b);
    ElementId lo = std::min(u, v), hi = std::max(u, v);
    if (!seen.insert({lo, hi}).second) {
      ++r.duplicate_edges_dropped;
      continue;
    }
    r.graph.edges.push_back({lo, hi, 1.0});
  }
  if (r.graph.edges.empty()) throw std::runtime_error(name + ": no edges");
  r.graph.vertex_count = r.original_ids.size();
  r.graph.finalize();
  return r;
}

void write_snap_canonical(const CutGraph& g, std::ostream& out) {
  std::vector<std::pair<ElementId, ElementId>> es;
  es.reserve(g.edges.size());
  for (const auto& e : g.edges) es.push_back(std::minmax(e.u, e.v));
  std::sort(es.begin(), es.end());
  for (const auto& [u, v] : es) out << u << '\t' << v << '\n';
}

CorpusLoadResult load_tagged_corpus(const std::string& path, bool with_cost_column) {
  std::ifstream in = open_or_throw(path);
  return load_tagged_corpus(in, path, with_cost_column);
}

CorpusLoadResult load_tagged_corpus(std::istream& in, const std::string& name,
                                    bool with_cost_column) {
  CorpusLoadResult r;
  std::unordered_map<std::string, std::int32_t> tag_ids;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (blank_or_comment(line)) continue;

    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    std::size_t expected = with_cost_column ? 3u : 2u;
    if (cols.size() != expected)
      fail_at(name, line_no,
              "expected " + std::to_string(expected) + " tab-separated columns, got " +
                  std::to_string(cols.size()));

    const std::string& item = cols[0];
    if (item.empty()) fail_at(name, line_no, "empty item id");
    if (!r.item_map.try_emplace(item, static_cast<ElementId>(r.corpus.item_tags.size())).second)
      fail_at(name, line_no, "duplicate item id '" + item + "'");

    double cost = 1.0;
    if (with_cost_column) cost = parse_cost_token(cols[1], name, line_no);

    const std::string& tag_col = cols.back();
    std::vector<std::int32_t> tags;
    std::size_t tstart = 0;
    while (tstart <= tag_col.size()) {
      std::size_t comma = tag_col.find(',', tstart);
      std::string tok = tag_col.substr(tstart, comma == std::string::npos ? comma : comma - tstart);
      if (tok.empty()) fail_at(name, line_no, "empty tag token");
      auto [it, fresh] = tag_ids.try_emplace(tok, static_cast<std::int32_t>(r.corpus.tag_names.size()));
      if (fresh) r.corpus.tag_names.push_back(tok);
      tags.push_back(it->second);
      if (comma == std::string::npos) break;
      tstart = comma + 1;
    }
    if (tags.empty()) fail_at(name, line_no, "item has no tags");
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());

    r.corpus.item_tags.push_back(std::move(tags));
    r.corpus.item_names.push_back(item);
    r.costs.push_back(cost);
  }
  if (r.corpus.item_tags.empty()) throw std::runtime_error(name + ": no items");
  return r;
}

namespace {

template <typename Key, typename ParseKey>
std::vector<double> load_costs_impl(const std::string& path,
                                    const std::unordered_map<Key, ElementId>& ids, std::size_t n,
                                    ParseKey parse_key) {
  std::ifstream in = open_or_throw(path);
  std::vector<double> costs(n, 0.0);
  std::vector<char> covered(n, 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (blank_or_comment(line)) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) fail_at(path, line_no, "expected 'id<TAB>cost'");
    std::string key_tok = line.substr(0, tab);
    std::string cost_tok = line.substr(tab + 1);
    Key key = parse_key(key_tok, line_no);
    auto it = ids.find(key);
    if (it == ids.end()) fail_at(path, line_no, "unknown element '" + key_tok + "'");
    ElementId e = it->second;
    if (covered[e]) fail_at(path, line_no, "duplicate cost for element '" + key_tok + "'");
    covered[e] = 1;
    costs[e] = parse_cost_token(cost_tok, path, line_no);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i])
      throw std::runtime_error(path + ": missing cost for element " + std::to_string(i));
  return costs;
}

}  // namespace

std::vector<double> load_cost_file(const std::string& path,
                                   const std::unordered_map<std::string, ElementId>& ids,
                                   std::size_t n) {
  return load_costs_impl(path, ids, n,
                         [](const std::string& tok, std::size_t) { return tok; });
}

std::vector<double> load_cost_file_int(const std::string& path,
                                       const std::unordered_map<std::int64_t, ElementId>& ids,
                                       std::size_t n) {
  return load_costs_impl(path, ids, n, [&path](const std::string& tok, std::size_t line_no) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      fail_at(path, line_no, "unreadable vertex id '" + tok + "'");
    return v;
  });
}

CutGraph synth_er_graph(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random graph needs at least 2 vertices");
  if (!(edge_prob >= 0.0) || !(edge_prob <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  CutGraph g;
  g.vertex_count = n;
  Rng rng(seed);
  for (std::size_t u = 0; u + 1 < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.next_double() < edge_prob)
        g.edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v), 1.0});
  g.finalize();
  return g;
}

SynthInstance synth_instance(const SynthSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("need at least one element");
  if (!(spec.cost_lo > 0.0) || spec.cost_hi < spec.cost_lo)
    throw std::invalid_argument("cost range must satisfy 0 < lo <= hi");

  // Draw order: costs, then structure, then stream order, so each knob
  // perturbs later draws only.
  Rng rng(spec.seed);
  std::vector<double> costs(spec.n, 1.0);
  if (spec.cost_lo != 1.0 || spec.cost_hi != 1.0)
    for (double& c : costs) c = rng.next_range(spec.cost_lo, spec.cost_hi);

  std::unique_ptr<SubmodularOracle> oracle;
  std::string desc;
  switch (spec.kind) {
    case SynthKind::kErGraph: {
      oracle = std::make_unique<GraphCutOracle>(
          synth_er_graph(spec.n, spec.edge_prob, rng.next_u64()));
      desc = "er-cut n=" + std::to_string(spec.n);
      break;
    }
    case SynthKind::kCoverage: {
      std::size_t vocab = spec.vocab ? spec.vocab : 3 * spec.n;
      if (spec.tags_per_item == 0 || spec.tags_per_item > vocab)
        throw std::invalid_argument("tags per item must lie in [1, vocab]");
      std::vector<std::vector<std::int32_t>> tags(spec.n);
      for (auto& t : tags) {
        std::set<std::int32_t> picked;
        while (picked.size() < spec.tags_per_item)
          picked.insert(static_cast<std::int32_t>(rng.next_below(vocab)));
        t.assign(picked.begin(), picked.end());
      }
      oracle = std::make_unique<CoverageOracle>(std::move(tags), vocab);
      desc = "coverage n=" + std::to_string(spec.n);
      break;
    }
    case SynthKind::kModular: {
      std::vector<double> vals(spec.n);
      if (spec.n == 3) {
        vals = {3.0, 2.0, 1.0};
      } else {
        for (double& v : vals) v = rng.next_range(0.5, 4.0);
      }
      oracle = make_modular(std::move(vals));
      desc = "modular n=" + std::to_string(spec.n);
      break;
    }
  }

  std::vector<ElementId> order(spec.n);
  std::iota(order.begin(), order.end(), 0u);
  if (spec.shuffle_order) {
    for (std::size_t i = spec.n; i > 1; --i)
      std::swap(order[i - 1], order[rng.next_below(i)]);
  }

  SynthInstance out{std::move(oracle), CostedUniverse(std::move(order), std::move(costs)), desc};
  return out;
}

}  // namespace subcover
