#pragma once

// Batch-dynamic k-clique counting (constant k >= 3) over the acyclic
// orientation.
//
// Any vertex set whose members each have directed edges into all later ones
// has a unique "source"; repeatedly stripping sources from a k-vertex set
// yields a chain of shrinking subsets. The counter keeps one table per arity
// in [2, k-1] mapping a subset J to the number of k-vertex sets whose chain
// passes through J. A k-set reaching a fully-connected subset is necessarily
// a clique, so when a batch edge completes a subset, the subset's table entry
// is exactly the number of k-cliques to add; the chain below it is then
// patched so later updates see consistent counts.
//
// Flips are modeled as a directed deletion plus re-insertion of the same
// undirected edge, leaving the total unchanged. Batch edges are applied
// first and marked; an arrival-order guard makes sure each affected subset
// is handled by exactly one marked edge.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bdg/framework.hpp"
#include "bdg/graph.hpp"

namespace bdg {

// Exact k-clique count by ordered enumeration; the test oracle.
inline uint64_t brute_force_count(const Graph& g, uint32_t k) {
  if (k == 0 || g.num_vertices() == 0) return 0;
  if (k == 1) return g.num_vertices();
  uint64_t count = 0;
  std::vector<std::vector<VertexId>> stack;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::vector<VertexId> pool;
    for (VertexId w : g.neighbors(v))
      if (w > v) pool.push_back(w);
    std::sort(pool.begin(), pool.end());
    stack.assign(1, std::move(pool));
    std::vector<uint32_t> depth_stack{1};
    while (!stack.empty()) {
      std::vector<VertexId> cur = std::move(stack.back());
      stack.pop_back();
      uint32_t depth = depth_stack.back();
      depth_stack.pop_back();
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (depth + 1 == k) {
          ++count;
          continue;
        }
        std::vector<VertexId> next;
        for (std::size_t j = i + 1; j < cur.size(); ++j)
          if (g.has_edge(cur[i], cur[j])) next.push_back(cur[j]);
        if (next.size() + depth + 1 >= k) {
          stack.push_back(std::move(next));
          depth_stack.push_back(depth + 1);
        }
      }
    }
  }
  return count;
}

class CliqueCounter : public ProblemHooks {
 public:
  using Key = std::vector<VertexId>;  // ascending ids
  using Table = std::map<Key, int64_t>;

  explicit CliqueCounter(uint32_t k) : k_(k), tables_(k) {}

  uint32_t k() const { return k_; }
  int64_t total() const { return total_; }
  const Table& table(uint32_t arity) const { return tables_[arity]; }
  const std::set<VertexId>& out(VertexId v) const {
    static const std::set<VertexId> kEmpty;
    return v < out_.size() ? out_[v] : kEmpty;
  }
  std::size_t num_vertices_tracked() const { return out_.size(); }

  // The unique member of S with directed edges into all other members, if
  // any, under the given directed adjacency predicate.
  template <typename HasArc>
  static std::optional<VertexId> source_of(const Key& s, HasArc&& has_arc) {
    for (VertexId cand : s) {
      bool all = true;
      for (VertexId other : s)
        if (other != cand && !has_arc(cand, other)) {
          all = false;
          break;
        }
      if (all) return cand;
    }
    return std::nullopt;
  }

  std::optional<VertexId> source_of(const Key& s) const {
    return source_of(s, [this](VertexId a, VertexId b) { return has_arc(a, b); });
  }

  void batch_flips(const std::vector<DirectedEdge>& flipped,
                   std::vector<DirectedEdge>& inserted,
                   std::vector<DirectedEdge>& deleted) override {
    for (const DirectedEdge& f : flipped) {
      deleted.push_back(f);                // old direction leaves ...
      inserted.push_back({f.to, f.from});  // ... and the new one re-enters
    }
  }

  void batch_delete(const std::vector<DirectedEdge>& deleted) override {
    if (deleted.empty()) return;
    for (std::size_t r = 0; r < deleted.size(); ++r) {
      const DirectedEdge& d = deleted[r];
      ensure(std::max(d.from, d.to));
      out_[d.from].insert(d.to);  // keep present until the whole pass is done
      marked_[Edge(d.from, d.to)] = uint32_t(r);
    }
    for (uint32_t i = k_ - 1; i-- > 0;)  // i = k-2 .. 0
      for (std::size_t r = 0; r < deleted.size(); ++r)
        process(deleted[r].from, deleted[r].to, uint32_t(r), i, -1);
    for (const DirectedEdge& d : deleted) out_[d.from].erase(d.to);
    marked_.clear();
  }

  void batch_insert(const std::vector<DirectedEdge>& inserted) override {
    if (inserted.empty()) return;
    for (std::size_t r = 0; r < inserted.size(); ++r) {
      const DirectedEdge& i = inserted[r];
      ensure(std::max(i.from, i.to));
      out_[i.from].insert(i.to);
      marked_[Edge(i.from, i.to)] = uint32_t(r);
    }
    for (uint32_t i = 0; i + 2 <= k_; ++i)  // i = 0 .. k-2
      for (std::size_t r = 0; r < inserted.size(); ++r)
        process(inserted[r].from, inserted[r].to, uint32_t(r), i, +1);
    marked_.clear();
  }

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
  };

  // Quiescent sanity: non-negative counts, no retained zeros, keys well formed.
  Report check(std::size_t max_problems = 64) const {
    Report r;
    for (uint32_t arity = 2; arity < k_; ++arity)
      for (const auto& [key, cnt] : tables_[arity]) {
        if (r.problems.size() >= max_problems) return r;
        if (cnt < 0)
          r.problems.push_back("negative count at arity " + std::to_string(arity));
        if (cnt == 0)
          r.problems.push_back("zero count retained at arity " + std::to_string(arity));
        if (key.size() != arity || !std::is_sorted(key.begin(), key.end()))
          r.problems.push_back("malformed key at arity " + std::to_string(arity));
      }
    if (total_ < 0) r.problems.push_back("negative total");
    return r;
  }

 private:
  bool has_arc(VertexId a, VertexId b) const {
    return a < out_.size() && out_[a].count(b) > 0;
  }
  bool has_edge_either(VertexId a, VertexId b) const {
    return has_arc(a, b) || has_arc(b, a);
  }

  void ensure(VertexId v) {
    if (v >= out_.size()) out_.resize(std::size_t(v) + 1);
  }

  // Handles one marked edge (u,v) at subset size i: every i-subset T of u's
  // out-neighbors (excluding v) forms T' = T + {u,v}, a set u is now the
  // source of. If T' is fully connected the k-cliques flowing through it are
  // counted; either way the chain below T' absorbs T''s flow.
  void process(VertexId u, VertexId v, uint32_t r, uint32_t i, int64_t sign) {
    std::vector<VertexId> pool(out_[u].begin(), out_[u].end());
    pool.erase(std::remove(pool.begin(), pool.end(), v), pool.end());
    if (pool.size() < i) return;
    std::vector<VertexId> pick(i);
    enumerate_subsets(pool, 0, 0, pick, u, v, r, sign);
  }

  void enumerate_subsets(const std::vector<VertexId>& pool, std::size_t start,
                         std::size_t depth, std::vector<VertexId>& pick,
                         VertexId u, VertexId v, uint32_t r, int64_t sign) {
    if (depth == pick.size()) {
      handle_subset(pick, u, v, r, sign);
      return;
    }
    for (std::size_t i = start; i + (pick.size() - depth) <= pool.size(); ++i) {
      pick[depth] = pool[i];
      enumerate_subsets(pool, i + 1, depth + 1, pick, u, v, r, sign);
    }
  }

  void handle_subset(const std::vector<VertexId>& t, VertexId u, VertexId v,
                     uint32_t r, int64_t sign) {
    Key tp;
    tp.reserve(t.size() + 2);
    tp.insert(tp.end(), t.begin(), t.end());
    tp.push_back(u);
    tp.push_back(v);
    std::sort(tp.begin(), tp.end());

    // Exactly one marked edge out of u into T' gets to handle T': the one
    // earliest in arrival order.
    uint32_t earliest = r;
    for (VertexId w : tp) {
      if (w == u) continue;
      auto it = marked_.find(Edge(u, w));
      if (it != marked_.end() && has_arc(u, w))
        earliest = std::min(earliest, it->second);
    }
    if (earliest != r) return;

    bool complete = true;
    for (std::size_t a = 0; a < tp.size() && complete; ++a)
      for (std::size_t b = a + 1; b < tp.size(); ++b)
        if (!has_edge_either(tp[a], tp[b])) {
          complete = false;
          break;
        }

    // Chain floor: fully connected sets cascade down to pairs; others stop
    // at the largest subset left without a source.
    std::size_t floor_size = 2;
    if (!complete) {
      Key probe = tp;
      while (probe.size() > 2) {
        auto s = source_of(probe);
        if (!s) break;
        probe.erase(std::find(probe.begin(), probe.end(), *s));
      }
      if (probe.size() > 2)
        floor_size = probe.size();
    }

    int64_t delta = tp.size() == k_ ? 1 : table_value(tp);
    if (delta == 0) return;  // no k-sets flow through T'
    if (complete) total_ += sign * delta;
    Key sub = tp;
    while (sub.size() > floor_size) {
      auto s = source_of(sub);
      if (!s) break;  // defensive; a source exists above the floor
      sub.erase(std::find(sub.begin(), sub.end(), *s));
      if (sub.size() >= 2 && sub.size() < k_) bump(sub, sign * delta);
    }
  }

  int64_t table_value(const Key& key) const {
    if (key.size() < 2 || key.size() >= k_) return 0;
    const Table& t = tables_[key.size()];
    auto it = t.find(key);
    return it == t.end() ? 0 : it->second;
  }

  void bump(const Key& key, int64_t delta) {
    if (delta == 0) return;
    Table& t = tables_[key.size()];
    auto [it, fresh] = t.try_emplace(key, 0);
    it->second += delta;
    if (it->second == 0) t.erase(it);
  }

  uint32_t k_;
  int64_t total_ = 0;
  std::vector<Table> tables_;            // indexed by arity; [2, k-1] used
  std::vector<std::set<VertexId>> out_;  // module view of the orientation
  std::map<Edge, uint32_t> marked_;      // canonical batch edge -> arrival index
};

}  // namespace bdg
