#pragma once

// Independent reference implementations the suites compare the library
// against.  Everything here favors obviousness over speed: linear scans,
// explicit subset enumeration, bitmask recursion.  None of it shares code
// with the structures under test.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/orientation.hpp"
#include "bdg/plds.hpp"

namespace oracles {

using bdg::Edge;
using bdg::Graph;
using bdg::Orientation;
using bdg::Plds;
using bdg::VertexId;

// Highest admissible level <= level(v) for a vertex moving down: the top
// target where the lower-bound rule (seen from one level below) and the
// upper-bound rule (at the target's group) both hold, scanned linearly.
inline uint32_t desire_level_oracle(const Plds& plds, VertexId v) {
  const double eps = 1e-9;
  std::vector<VertexId> nbrs = plds.neighbors(v);
  auto count_at_or_above = [&](uint32_t t) {
    std::size_t c = 0;
    for (VertexId w : nbrs)
      if (plds.level(w) >= t) ++c;
    return c;
  };
  for (uint32_t t = plds.level(v);; --t) {
    bool lower_ok =
        t == 0 || double(count_at_or_above(t - 1)) + eps >=
                      plds.threshold_lower(plds.group_of_level(t - 1));
    bool upper_ok =
        t + 1 >= plds.num_levels() ||
        !(double(count_at_or_above(t)) >
          plds.threshold_upper(plds.group_of_level(t)) + eps);
    if (lower_ok && upper_ok) return t;
    if (t == 0) return 0;
  }
}

// Exact coreness by repeated minimum-degree removal.
inline std::vector<uint32_t> exact_kcore_oracle(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<uint32_t> core(n, 0);
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  uint32_t k = 0;
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = 0;
    std::size_t best_deg = ~std::size_t(0);
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    k = std::max<uint32_t>(k, uint32_t(best_deg));
    core[best] = k;
    gone[best] = 1;
    for (VertexId w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return core;
}

// Kahn's algorithm over the oriented edges; false if a cycle survives.
inline bool orientation_acyclic(const Orientation& orient, const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const Edge& e : g.edges()) {
    bdg::DirectedEdge d = orient.direction(e.u, e.v);
    succ[d.from].push_back(d.to);
    ++indeg[d.to];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++seen;
    for (VertexId w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

// k-clique count by bitmask recursion over increasing vertex ids (n <= 64).
inline uint64_t clique_count_oracle(const Graph& g, uint32_t k) {
  std::size_t n = g.num_vertices();
  std::vector<uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1ull << e.v;
    adj[e.v] |= 1ull << e.u;
  }
  struct Frame {
    uint64_t cand;
    uint32_t need;
  };
  uint64_t all = n >= 64 ? ~0ull : (1ull << n) - 1;
  uint64_t count = 0;
  std::vector<Frame> stack{{all, k}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.need == 0) {
      ++count;
      continue;
    }
    uint64_t c = f.cand;
    while (c) {
      uint64_t low = c & (~c + 1);
      VertexId v = VertexId(std::countr_zero(low));
      c ^= low;
      uint64_t higher = ~(low | (low - 1));
      stack.push_back({f.cand & adj[v] & higher, f.need - 1});
    }
  }
  return count;
}

// Expected contents of the clique counter's subset tables: for every
// k-vertex subset, walk its source-stripping chain (repeatedly remove the
// unique vertex with arcs into all others, stopping at size 2 or when no
// unique source exists) and credit every proper chain set of size 2..k-1.
using SubsetKey = std::vector<VertexId>;
using SubsetTable = std::map<SubsetKey, int64_t>;

inline std::vector<SubsetTable> chain_tables_oracle(const Orientation& orient,
                                                    std::size_t n, uint32_t k) {
  auto has_arc = [&](VertexId a, VertexId b) {
    return orient.tracks(a, b) && orient.direction(a, b).from == a;
  };
  auto source_of = [&](const SubsetKey& s) -> std::optional<VertexId> {
    std::optional<VertexId> found;
    for (VertexId cand : s) {
      bool all = true;
      for (VertexId other : s)
        if (other != cand && !has_arc(cand, other)) {
          all = false;
          break;
        }
      if (all) {
        if (found) return std::nullopt;  // not unique
        found = cand;
      }
    }
    return found;
  };
  std::vector<SubsetTable> tables(k);
  SubsetKey subset;
  // Enumerate k-subsets of [0, n) in lexicographic order.
  std::vector<VertexId> idx(k);
  for (uint32_t i = 0; i < k; ++i) idx[i] = i;
  if (n < k) return tables;
  for (;;) {
    SubsetKey chain(idx.begin(), idx.end());
    while (chain.size() > 2) {
      std::optional<VertexId> src = source_of(chain);
      if (!src) break;
      chain.erase(std::find(chain.begin(), chain.end(), *src));
      if (chain.size() >= 2 && chain.size() < k) ++tables[chain.size()][chain];
    }
    // Advance the combination.
    uint32_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (uint32_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return tables;
}

}  // namespace oracles
