#pragma once

// Acyclic low out-degree edge orientation derived from the level structure:
// every edge points from the endpoint with the lexicographically smaller
// (level, id) pair to the larger one. Out-neighbors of v therefore sit at
// level >= level(v), so each out-degree is capped by the same per-group bound
// as the up-degree, and the strict total order on (level, id) makes the
// directed graph acyclic.
//
// Directions are stored as one bit per canonical (min-id, max-id) edge and
// patched incrementally per batch: deletions leave, stale directions flip
// after the levels settled, insertions enter.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/plds.hpp"

namespace bdg {

struct DirectedEdge {
  VertexId from = 0, to = 0;
  bool operator==(const DirectedEdge& o) const {
    return from == o.from && to == o.to;
  }
  bool operator<(const DirectedEdge& o) const {
    return from != o.from ? from < o.from : to < o.to;
  }
};

class Orientation {
 public:
  // True iff the edge {u,v} points u -> v under the level/id order.
  static bool points_from(VertexId u, VertexId v, const Plds& plds) {
    uint32_t lu = plds.level(u), lv = plds.level(v);
    return lu != lv ? lu < lv : u < v;
  }

  bool tracks(VertexId u, VertexId v) const {
    return direction_.count(Edge(u, v)) > 0;
  }

  // Current stored direction of a tracked edge.
  DirectedEdge direction(VertexId u, VertexId v) const {
    Edge e(u, v);
    bool reversed = direction_.at(e);
    return reversed ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v};
  }

  std::size_t out_degree(VertexId v) const {
    return v < out_.size() ? out_[v].size() : 0;
  }
  const std::unordered_set<VertexId>& out_neighbors(VertexId v) const {
    static const std::unordered_set<VertexId> kEmpty;
    return v < out_.size() ? out_[v] : kEmpty;
  }
  std::size_t num_edges() const { return direction_.size(); }

  // Canonical edge -> reversed flag for every tracked edge.
  const std::unordered_map<Edge, bool, EdgeHash>& directions() const {
    return direction_;
  }

  // Reorients everything from scratch for the given graph and levels.
  void rebuild(const Graph& g, const Plds& plds) {
    direction_.clear();
    out_.assign(g.num_vertices(), {});
    for (const Edge& e : g.edges()) store(e, plds);
  }

  struct BatchResult {
    std::vector<DirectedEdge> flipped;   // pre-flip directions
    std::vector<DirectedEdge> inserted;  // directions after the batch
    std::vector<DirectedEdge> deleted;   // directions before the batch
  };

  // Brings the orientation in line after one batch. Expects the graph with
  // the batch already applied and the level structure already updated;
  // `changed` lists the vertices whose level moved. Flips never involve
  // batch edges: deleted edges leave before the scan and inserted edges only
  // enter after it.
  BatchResult update(const Graph& g_after, const Plds& plds,
                     const std::vector<VertexId>& changed,
                     const UpdateBatch& batch) {
    BatchResult r;
    if (!g_after.num_vertices()) return r;
    if (out_.size() < g_after.num_vertices()) out_.resize(g_after.num_vertices());

    for (const EdgeUpdate& d : batch.deletions) {
      Edge e(d.u, d.v);
      auto it = direction_.find(e);
      if (it == direction_.end()) continue;
      DirectedEdge old = it->second ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v};
      r.deleted.push_back(old);
      out_[old.from].erase(old.to);
      direction_.erase(it);
    }

    std::map<Edge, DirectedEdge> flips;  // keyed for deterministic output
    for (VertexId v : changed) {
      if (v >= g_after.num_vertices()) continue;
      for (VertexId w : g_after.neighbors(v)) {
        Edge e(v, w);
        auto it = direction_.find(e);
        if (it == direction_.end()) continue;  // inserted this batch
        bool want_reversed = !points_from(e.u, e.v, plds);
        if (it->second == want_reversed) continue;
        DirectedEdge old = it->second ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v};
        flips.emplace(e, old);
        out_[old.from].erase(old.to);
        out_[old.to].insert(old.from);
        it->second = want_reversed;
      }
    }
    r.flipped.reserve(flips.size());
    for (const auto& [e, old] : flips) r.flipped.push_back(old);

    for (const EdgeUpdate& i : batch.insertions) {
      Edge e(i.u, i.v);
      r.inserted.push_back(store(e, plds));
    }
    return r;
  }

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
  };

  // Verifies coverage (exactly the graph's edges), agreement of every stored
  // direction with the level/id order, the out-set mirror, and the per-vertex
  // out-degree cap below the top level.
  Report check(const Graph& g, const Plds& plds,
               std::size_t max_problems = 64) const {
    Report r;
    auto complain = [&](const std::string& what) {
      if (r.problems.size() < max_problems) r.problems.push_back(what);
    };
    std::vector<Edge> edges = g.edges();
    if (edges.size() != direction_.size())
      complain("tracked edge count " + std::to_string(direction_.size()) +
               " differs from graph edge count " + std::to_string(edges.size()));
    for (const Edge& e : edges) {
      auto it = direction_.find(e);
      if (it == direction_.end()) {
        complain("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " untracked");
        continue;
      }
      bool want_reversed = !points_from(e.u, e.v, plds);
      if (it->second != want_reversed)
        complain("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " points against the level order");
      DirectedEdge d = it->second ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v};
      if (d.from >= out_.size() || !out_[d.from].count(d.to))
        complain("out-set missing " + std::to_string(d.from) + "->" +
                 std::to_string(d.to));
    }
    std::size_t total_out = 0;
    for (VertexId v = 0; v < out_.size(); ++v) {
      total_out += out_[v].size();
      if (v < plds.size() && plds.level(v) + 1 < plds.num_levels()) {
        double cap = plds.threshold_upper(plds.group_of_level(plds.level(v)));
        if (double(out_[v].size()) > cap + 1e-9)
          complain("v" + std::to_string(v) + ": out-degree " +
                   std::to_string(out_[v].size()) + " above the cap");
      }
    }
    if (total_out != direction_.size())
      complain("out-set sizes do not sum to the edge count");
    return r;
  }

  // True iff this orientation equals the one rebuilt from scratch.
  bool equals_rebuilt(const Graph& g, const Plds& plds) const {
    Orientation fresh;
    fresh.rebuild(g, plds);
    return fresh.direction_ == direction_;
  }

 private:
  DirectedEdge store(const Edge& e, const Plds& plds) {
    bool reversed = !points_from(e.u, e.v, plds);
    direction_[e] = reversed;
    DirectedEdge d = reversed ? DirectedEdge{e.v, e.u} : DirectedEdge{e.u, e.v};
    if (out_.size() <= std::max(d.from, d.to)) out_.resize(std::max(d.from, d.to) + 1);
    out_[d.from].insert(d.to);
    return d;
  }

  std::unordered_map<Edge, bool, EdgeHash> direction_;
  std::vector<std::unordered_set<VertexId>> out_;
};

}  // namespace bdg
