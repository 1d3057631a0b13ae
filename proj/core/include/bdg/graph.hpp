#pragma once

// Undirected simple graph plus the batch-update plumbing shared by every
// dynamic algorithm in the library: batch preprocessing (dedup to the latest
// operation per edge), edge-list / batch-file loaders, workload generation
// (insert-only, delete-only, mixed), and a seeded G(n, p) generator used by
// the tests and benchmarks.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bdg/util.hpp"

namespace bdg {

using VertexId = uint32_t;

struct Edge {
  VertexId u = 0, v = 0;
  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return mix64((uint64_t(e.u) << 32) | e.v);
  }
};

// One edge operation inside a batch. batch_index preserves arrival order so
// algorithms that care about within-batch order (clique counting) can replay
// operations as given.
struct EdgeUpdate {
  VertexId u = 0, v = 0;
  uint32_t batch_index = 0;
};

struct UpdateBatch {
  std::vector<EdgeUpdate> insertions;
  std::vector<EdgeUpdate> deletions;
  std::size_t size() const { return insertions.size() + deletions.size(); }
  bool empty() const { return insertions.empty() && deletions.empty(); }
};

// Adjacency-set graph over vertex ids [0, n).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return m_; }

  void ensure_vertex(VertexId v) {
    if (v >= adj_.size()) adj_.resize(v + 1);
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return adj_[u].count(v) > 0;
  }

  bool insert_edge(VertexId u, VertexId v) {
    if (u == v) return false;
    ensure_vertex(std::max(u, v));
    if (!adj_[u].insert(v).second) return false;
    adj_[v].insert(u);
    ++m_;
    return true;
  }

  bool delete_edge(VertexId u, VertexId v) {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    if (adj_[u].erase(v) == 0) return false;
    adj_[v].erase(u);
    --m_;
    return true;
  }

  const std::unordered_set<VertexId>& neighbors(VertexId v) const {
    return adj_[v];
  }

  std::size_t degree(VertexId v) const {
    return v < adj_.size() ? adj_[v].size() : 0;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
    return d;
  }

  // Applies a preprocessed batch: deletions and insertions of distinct edges.
  void apply(const UpdateBatch& batch) {
    for (const auto& e : batch.deletions) delete_edge(e.u, e.v);
    for (const auto& e : batch.insertions) insert_edge(e.u, e.v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < adj_.size(); ++u)
      for (VertexId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<std::unordered_set<VertexId>> adj_;
  std::size_t m_ = 0;
};

// A raw batch operation before preprocessing: is_insert selects the op.
struct RawOp {
  bool is_insert = true;
  VertexId u = 0, v = 0;
};

struct PreprocessStats {
  std::size_t dropped = 0;  // self-loops, duplicates, and no-op operations
};

// Collapses a raw operation stream against the current graph into a batch of
// distinct, effective operations. For each undirected edge only the latest
// operation survives; surviving operations that would not change the graph
// (inserting a present edge, deleting an absent one) are dropped, as are
// self-loops. Running the result through preprocessing again is a no-op.
inline UpdateBatch preprocess_batch(const Graph& g,
                                    const std::vector<RawOp>& ops,
                                    PreprocessStats* stats = nullptr) {
  std::unordered_map<Edge, std::pair<bool, uint32_t>, EdgeHash> last;
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const RawOp& op = ops[i];
    if (op.u == op.v) {
      ++dropped;
      continue;
    }
    auto [it, fresh] =
        last.try_emplace(Edge(op.u, op.v), op.is_insert, uint32_t(i));
    if (!fresh) {
      ++dropped;  // superseded earlier op on the same edge
      it->second = {op.is_insert, uint32_t(i)};
    }
  }
  UpdateBatch out;
  for (const auto& [e, op] : last) {
    bool present = g.has_edge(e.u, e.v);
    if (op.first && !present) {
      out.insertions.push_back({e.u, e.v, op.second});
    } else if (!op.first && present) {
      out.deletions.push_back({e.u, e.v, op.second});
    } else {
      ++dropped;  // no-op against the current graph
    }
  }
  auto by_index = [](const EdgeUpdate& a, const EdgeUpdate& b) {
    return a.batch_index < b.batch_index;
  };
  std::sort(out.insertions.begin(), out.insertions.end(), by_index);
  std::sort(out.deletions.begin(), out.deletions.end(), by_index);
  if (stats) stats->dropped = dropped;
  return out;
}

// Reads a whitespace-separated edge list ("u v" per line, '#' comments).
// Vertex ids are compacted to [0, n) in first-appearance order, so vertices
// that never appear in an edge do not exist in the loaded graph.
inline Graph load_edge_list(std::istream& in,
                            std::vector<uint64_t>* original_ids = nullptr) {
  Graph g;
  std::unordered_map<uint64_t, VertexId> remap;
  auto id_of = [&](uint64_t raw) {
    auto [it, fresh] = remap.try_emplace(raw, VertexId(remap.size()));
    if (fresh && original_ids) original_ids->push_back(raw);
    return it->second;
  };
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    uint64_t a, b;
    if (!(ss >> a >> b)) continue;
    if (a == b) continue;
    VertexId ua = id_of(a);  // sequenced: ids compact in appearance order
    VertexId ub = id_of(b);
    g.insert_edge(ua, ub);
  }
  return g;
}

inline Graph load_edge_list_file(const std::string& path,
                                 std::vector<uint64_t>* original_ids = nullptr) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return load_edge_list(in, original_ids);
}

// Reads a batch file: one "op,u,v" line per operation, op in {i, d}.
inline std::vector<RawOp> load_batch_csv(std::istream& in) {
  std::vector<RawOp> ops;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 3) continue;
    if (fields[0] == "op") continue;  // header
    RawOp op;
    if (fields[0] == "i")
      op.is_insert = true;
    else if (fields[0] == "d")
      op.is_insert = false;
    else
      continue;
    op.u = VertexId(std::stoul(fields[1]));
    op.v = VertexId(std::stoul(fields[2]));
    ops.push_back(op);
  }
  return ops;
}

// Seeded Erdos-Renyi G(n, p) graph; identical output for identical arguments.
inline Graph random_graph(std::size_t n, double p, uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (VertexId u = 0; u + 1 < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.insert_edge(u, v);
  return g;
}

enum class WorkloadMode { kInsert, kDelete, kMixed };

inline WorkloadMode parse_mode(const std::string& s) {
  if (s == "ins" || s == "insert") return WorkloadMode::kInsert;
  if (s == "del" || s == "delete") return WorkloadMode::kDelete;
  if (s == "mix" || s == "mixed") return WorkloadMode::kMixed;
  throw std::runtime_error("unknown mode: " + s + " (want ins|del|mix)");
}

// A generated workload: the graph state the algorithm should be primed with
// before the batches are streamed, plus the batches themselves.
struct Workload {
  Graph start;
  std::vector<std::vector<RawOp>> batches;
};

// Builds a workload from a base graph.
//  - insert: start empty; the shuffled edge set arrives in insertion batches.
//  - delete: start full; the shuffled edge set leaves in deletion batches.
//  - mixed: one batch of batch_size/2 insertions (held out of the start
//    graph) plus batch_size/2 deletions of distinct still-present edges.
inline Workload generate_batches(const Graph& base, WorkloadMode mode,
                                 std::size_t batch_size, uint64_t seed) {
  if (batch_size == 0) throw std::runtime_error("batch size must be positive");
  std::vector<Edge> edges = base.edges();
  std::sort(edges.begin(), edges.end());  // canonical order before shuffling
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);

  Workload w;
  auto chunked = [&](bool inserts) {
    for (std::size_t i = 0; i < edges.size(); i += batch_size) {
      std::vector<RawOp> batch;
      std::size_t hi = std::min(edges.size(), i + batch_size);
      batch.reserve(hi - i);
      for (std::size_t j = i; j < hi; ++j)
        batch.push_back({inserts, edges[j].u, edges[j].v});
      w.batches.push_back(std::move(batch));
    }
  };
  switch (mode) {
    case WorkloadMode::kInsert:
      w.start = Graph(base.num_vertices());
      chunked(true);
      break;
    case WorkloadMode::kDelete: {
      w.start = Graph(base.num_vertices());
      for (const Edge& e : edges) w.start.insert_edge(e.u, e.v);
      chunked(false);
      break;
    }
    case WorkloadMode::kMixed: {
      std::size_t half = batch_size / 2;
      if (half == 0 || 2 * half > edges.size())
        throw std::runtime_error(
            "mixed workload needs batch_size/2 in [1, num_edges]");
      // First `half` edges are held out and re-inserted; the next `half`
      // remain present and get deleted.
      w.start = Graph(base.num_vertices());
      for (std::size_t j = half; j < edges.size(); ++j)
        w.start.insert_edge(edges[j].u, edges[j].v);
      std::vector<RawOp> batch;
      batch.reserve(2 * half);
      for (std::size_t j = 0; j < half; ++j)
        batch.push_back({true, edges[j].u, edges[j].v});
      for (std::size_t j = half; j < 2 * half; ++j)
        batch.push_back({false, edges[j].u, edges[j].v});
      w.batches.push_back(std::move(batch));
      break;
    }
  }
  return w;
}

}  // namespace bdg
