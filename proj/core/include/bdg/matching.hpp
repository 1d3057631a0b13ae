#pragma once

// Batch-dynamic maximal matching over the oriented graph.
//
// Alongside the matching itself (symmetric mate pointers), each vertex v
// keeps I_v: its unmatched in-neighbors under the current orientation. When
// a deletion breaks a matched pair, the freed endpoints look for replacement
// partners first among their out-neighbors, then among I_v in rounds that
// double the number of candidates tried, so a vertex of in-degree d resolves
// within ceil(log2 d) + 1 rounds.

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bdg/framework.hpp"
#include "bdg/graph.hpp"
#include "bdg/orientation.hpp"

namespace bdg {

// Greedy maximal matching over an explicit edge list, scanning edges in
// canonical (min-id, max-id) order. Only maximality is promised.
inline std::vector<Edge> static_maximal_matching(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::unordered_set<VertexId> used;
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (e.u == e.v || used.count(e.u) || used.count(e.v)) continue;
    used.insert(e.u);
    used.insert(e.v);
    out.push_back(e);
  }
  return out;
}

class MaximalMatching : public ProblemHooks {
 public:
  static constexpr VertexId kNone = ~VertexId(0);

  explicit MaximalMatching(const Orientation* orientation)
      : orientation_(orientation) {}

  bool is_matched(VertexId v) const {
    return v < mate_.size() && mate_[v] != kNone;
  }
  VertexId mate(VertexId v) const { return v < mate_.size() ? mate_[v] : kNone; }
  std::size_t matching_size() const { return matched_pairs_; }
  const std::set<VertexId>& unmatched_in(VertexId v) const {
    static const std::set<VertexId> kEmpty;
    return v < in_.size() ? in_[v] : kEmpty;
  }
  std::size_t last_delete_doubling_iterations() const {
    return last_doubling_iterations_;
  }

  // A flip (u,v) -> (v,u) moves the unmatched-in-neighbor bookkeeping from
  // v's side to u's side.
  void batch_flips(const std::vector<DirectedEdge>& flipped,
                   std::vector<DirectedEdge>&, std::vector<DirectedEdge>&) override {
    for (const DirectedEdge& f : flipped) {
      ensure(std::max(f.from, f.to));
      if (!is_matched(f.from)) in_[f.to].erase(f.from);
      if (!is_matched(f.to)) in_[f.from].insert(f.to);
    }
  }

  void batch_delete(const std::vector<DirectedEdge>& deleted) override {
    last_doubling_iterations_ = 0;
    if (deleted.empty()) return;
    for (const DirectedEdge& d : deleted) {
      ensure(std::max(d.from, d.to));
      in_[d.to].erase(d.from);  // the edge is gone, registered or not
    }
    // Endpoints freed by deleted matched edges.
    std::set<VertexId> freed;
    for (const DirectedEdge& d : deleted) {
      if (mate_[d.from] != d.to) continue;
      mate_[d.from] = kNone;
      mate_[d.to] = kNone;
      --matched_pairs_;
      freed.insert(d.from);
      freed.insert(d.to);
    }
    if (freed.empty()) return;
    const std::vector<VertexId> originally_freed(freed.begin(), freed.end());

    // First try: rematch within the freed vertices and their out-neighbors.
    {
      std::set<VertexId> pool = freed;
      for (VertexId u : freed)
        for (VertexId w : orientation_->out_neighbors(u)) pool.insert(w);
      run_static_matching(pool);
    }

    // Doubling rounds over each survivor's unmatched in-neighbors.
    std::set<VertexId> live = freed;
    std::size_t c = 1;
    while (true) {
      for (auto it = live.begin(); it != live.end();) {
        VertexId u = *it;
        if (is_matched(u) || in_[u].empty())
          it = live.erase(it);  // resolved, or out of candidates
        else
          ++it;
      }
      if (live.empty()) break;
      ++last_doubling_iterations_;
      std::set<VertexId> pool = live;
      for (VertexId u : live) {
        std::size_t taken = 0;
        for (VertexId w : in_[u]) {  // ascending ids
          if (taken++ == c) break;
          pool.insert(w);
        }
      }
      run_static_matching(pool);
      c *= 2;
    }

    // Vertices that stayed unmatched re-register with their out-neighbors.
    for (VertexId v : originally_freed) {
      if (is_matched(v)) continue;
      for (VertexId w : orientation_->out_neighbors(v)) {
        ensure(w);
        in_[w].insert(v);
      }
    }
  }

  void batch_insert(const std::vector<DirectedEdge>& inserted) override {
    if (inserted.empty()) return;
    std::vector<Edge> candidates;
    for (const DirectedEdge& i : inserted) {
      ensure(std::max(i.from, i.to));
      if (!is_matched(i.from) && !is_matched(i.to))
        candidates.emplace_back(i.from, i.to);
    }
    for (const Edge& e : static_maximal_matching(std::move(candidates)))
      if (!is_matched(e.u) && !is_matched(e.v)) set_match(e.u, e.v);
    // New edges whose tail stayed unmatched enter the head's candidate set.
    for (const DirectedEdge& i : inserted)
      if (!is_matched(i.from)) in_[i.to].insert(i.from);
  }

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
  };

  // Verifies mate symmetry, edge-validity, maximality, and that every I_v
  // equals the set recomputed from the graph and orientation.
  Report check(const Graph& g, std::size_t max_problems = 64) const {
    Report r;
    auto complain = [&](const std::string& what) {
      if (r.problems.size() < max_problems) r.problems.push_back(what);
    };
    for (VertexId v = 0; v < mate_.size(); ++v) {
      VertexId m = mate_[v];
      if (m == kNone) continue;
      if (m >= mate_.size() || mate_[m] != v)
        complain("mate pointer of " + std::to_string(v) + " not symmetric");
      else if (!g.has_edge(v, m))
        complain("matched pair " + std::to_string(v) + "-" + std::to_string(m) +
                 " is not an edge");
    }
    std::vector<std::set<VertexId>> want(g.num_vertices());
    for (const Edge& e : g.edges()) {
      if (!is_matched(e.u) && !is_matched(e.v))
        complain("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " has both endpoints unmatched");
      DirectedEdge d = orientation_->direction(e.u, e.v);
      if (!is_matched(d.from)) want[d.to].insert(d.from);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto& have = unmatched_in(v);
      if (have != want[v])
        complain("candidate set of " + std::to_string(v) +
                 " disagrees with recomputation (" + std::to_string(have.size()) +
                 " vs " + std::to_string(want[v].size()) + ")");
    }
    return r;
  }

 private:
  void ensure(VertexId v) {
    if (v >= mate_.size()) {
      mate_.resize(v + 1, kNone);
      in_.resize(v + 1);
    }
  }

  void set_match(VertexId u, VertexId v) {
    mate_[u] = v;
    mate_[v] = u;
    ++matched_pairs_;
    for (VertexId w : orientation_->out_neighbors(u)) {
      ensure(w);
      in_[w].erase(u);
    }
    for (VertexId w : orientation_->out_neighbors(v)) {
      ensure(w);
      in_[w].erase(v);
    }
  }

  // Greedy maximal matching over the edges induced by the pool's unmatched
  // vertices, read off the orientation's out-sets.
  void run_static_matching(const std::set<VertexId>& pool) {
    std::vector<Edge> edges;
    for (VertexId u : pool) {
      if (is_matched(u)) continue;
      for (VertexId w : orientation_->out_neighbors(u))
        if (!is_matched(w) && pool.count(w)) edges.emplace_back(u, w);
    }
    for (const Edge& e : static_maximal_matching(std::move(edges)))
      if (!is_matched(e.u) && !is_matched(e.v)) set_match(e.u, e.v);
  }

  const Orientation* orientation_;
  std::vector<VertexId> mate_;
  std::vector<std::set<VertexId>> in_;  // I_v: unmatched in-neighbors
  std::size_t matched_pairs_ = 0;
  std::size_t last_doubling_iterations_ = 0;
};

}  // namespace bdg
