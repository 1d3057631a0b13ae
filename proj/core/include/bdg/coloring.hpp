#pragma once

// Two dynamic coloring schemes driven by the orientation maintained on top of
// the level structure.
//
// ExplicitColoring keeps one color per vertex, drawn from a palette attached
// to the vertex's current level.  Palettes of distinct levels are disjoint, so
// cross-level conflicts are impossible by construction and a recoloring vertex
// only ever needs to avoid the colors of its up-neighbors (same-level
// neighbors see each other as up-neighbors, so both sides check the pair).
//
// ImplicitColoring stores no colors at all.  It partitions the oriented edges
// into parent-pointer forests F_0, F_1, ... such that every vertex has at most
// one outgoing edge per forest, packed into the lowest-indexed forests.  A
// vertex's color is read on demand as the vector of root-distance parities in
// the forests that hold one of its outgoing edges; adjacent vertices always
// differ in some coordinate (or in vector length).

#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "framework.hpp"
#include "graph.hpp"
#include "orientation.hpp"
#include "plds.hpp"
#include "util.hpp"

namespace bdg {

// ---------------------------------------------------------------------------
// Explicit coloring
// ---------------------------------------------------------------------------

class ExplicitColoring : public ProblemHooks {
 public:
  using Color = std::uint64_t;

  ExplicitColoring(const Plds* plds, std::uint64_t seed)
      : plds_(plds), seed_(seed) {
    assert(plds_ != nullptr);
    build_palettes();
  }

  // Number of colors in the palette of a level.
  std::uint64_t palette_size(std::uint32_t level) const {
    return palette_size_[level];
  }

  // First color id of the palette of a level; palettes occupy disjoint
  // contiguous id ranges [offset, offset + size).
  std::uint64_t palette_offset(std::uint32_t level) const {
    return palette_offset_[level];
  }

  Color color(VertexId v) const {
    ensure(v);
    return color_[v];
  }

  std::size_t distinct_colors() const {
    std::set<Color> seen;
    for (std::size_t v = 0; v < color_.size(); ++v)
      if (plds_->alive(VertexId(v)) && plds_->degree(VertexId(v)) > 0)
        seen.insert(color_[v]);
    return seen.size();
  }

  std::uint64_t total_draws() const { return total_draws_; }
  std::uint64_t max_draws_single_recolor() const { return max_draws_; }

  // --- hook interface ------------------------------------------------------

  void batch_flips(const std::vector<DirectedEdge>& flipped,
                   std::vector<DirectedEdge>& inserted,
                   std::vector<DirectedEdge>& deleted) override {
    (void)flipped;
    (void)inserted;
    (void)deleted;
    // Vertices whose level changed must move to the palette of their new
    // level before the batch ends.
    stale_ = plds_->changed_vertices();
    for (VertexId v : stale_) ensure(v);
  }

  void batch_delete(const std::vector<DirectedEdge>& deleted) override {
    for (const DirectedEdge& e : deleted) {
      for (VertexId v : {e.from, e.to}) {
        auto it = stale_.find(v);
        if (it != stale_.end()) {
          recolor(v);
          stale_.erase(it);
        }
      }
    }
  }

  void batch_insert(const std::vector<DirectedEdge>& inserted) override {
    for (const DirectedEdge& e : inserted) {
      ensure(e.from);
      ensure(e.to);
      if (color_[e.from] == color_[e.to]) {
        VertexId pick = std::min(e.from, e.to);
        recolor(pick);
        stale_.erase(pick);
      }
    }
    for (VertexId v : stale_) recolor(v);
    stale_.clear();
  }

  // --- validation ----------------------------------------------------------

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
    void fail(std::string msg) {
      if (problems.size() < 64) problems.push_back(std::move(msg));
    }
  };

  Report check(const Graph& g) const {
    Report rep;
    // Palette discipline: every live vertex holds a color from the palette of
    // its current level (colors materialize lazily, so read via color()).
    for (VertexId v = 0; v < VertexId(g.num_vertices()); ++v) {
      if (!plds_->alive(v)) continue;
      std::uint32_t lev = plds_->level(v);
      Color c = color(v);
      if (c < palette_offset_[lev] ||
          c >= palette_offset_[lev] + palette_size_[lev])
        rep.fail("vertex " + std::to_string(v) + " color " + std::to_string(c) +
                 " outside palette of level " + std::to_string(lev));
    }
    // Properness.
    for (const Edge& e : g.edges())
      if (color(e.u) == color(e.v))
        rep.fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 ") endpoints share color " + std::to_string(color(e.u)));
    // Color budget: the distinct colors in use fit within the palettes of the
    // levels whose groups are occupied.
    std::set<std::uint32_t> groups_in_use;
    for (VertexId v = 0; v < VertexId(g.num_vertices()); ++v)
      if (plds_->alive(v) && g.degree(v) > 0)
        groups_in_use.insert(plds_->group_of_level(plds_->level(v)));
    std::uint64_t budget = 0;
    for (std::uint32_t lev = 0; lev < plds_->num_levels(); ++lev)
      if (groups_in_use.count(plds_->group_of_level(lev)))
        budget += palette_size_[lev];
    if (distinct_colors() > budget)
      rep.fail("distinct colors " + std::to_string(distinct_colors()) +
               " exceed budget " + std::to_string(budget));
    return rep;
  }

 private:
  void build_palettes() {
    std::uint32_t levels = plds_->num_levels();
    palette_size_.resize(levels);
    palette_offset_.resize(levels);
    std::uint64_t offset = 0;
    for (std::uint32_t lev = 0; lev < levels; ++lev) {
      double want = 2.0 * plds_->threshold_upper(plds_->group_of_level(lev));
      palette_offset_[lev] = offset;
      palette_size_[lev] = std::uint64_t(std::ceil(want - 1e-9));
      offset += palette_size_[lev];
    }
  }

  void ensure(VertexId v) const {
    while (color_.size() <= std::size_t(v)) {
      VertexId nv = VertexId(color_.size());
      draw_counter_.push_back(0);
      std::uint32_t lev = plds_->level(nv);
      Color c = palette_offset_[lev] +
                hash_draw(seed_, nv, draw_counter_[nv]++) % palette_size_[lev];
      color_.push_back(c);
    }
  }

  void recolor(VertexId v) {
    ensure(v);
    std::uint32_t lev = plds_->level(v);
    std::uint64_t draws = 0;
    for (;;) {
      ++draws;
      if (draws > (1u << 20))
        throw std::runtime_error("recolor: palette exhausted");
      Color c = palette_offset_[lev] +
                hash_draw(seed_, v, draw_counter_[v]++) % palette_size_[lev];
      bool conflict = false;
      for (VertexId w : plds_->up_neighbors(v)) {
        ensure(w);
        if (color_[w] == c) {
          conflict = true;
          break;
        }
      }
      if (!conflict) {
        color_[v] = c;
        break;
      }
    }
    total_draws_ += draws;
    max_draws_ = std::max(max_draws_, draws);
  }

  const Plds* plds_;
  std::uint64_t seed_;
  std::vector<std::uint64_t> palette_size_;
  std::vector<std::uint64_t> palette_offset_;
  mutable std::vector<Color> color_;
  mutable std::vector<std::uint32_t> draw_counter_;
  std::set<VertexId> stale_;
  std::uint64_t total_draws_ = 0;
  std::uint64_t max_draws_ = 0;
};

// ---------------------------------------------------------------------------
// Implicit coloring
// ---------------------------------------------------------------------------

class ImplicitColoring : public ProblemHooks {
 public:
  ImplicitColoring() = default;

  std::size_t num_forests() const { return parent_.size(); }

  std::uint32_t out_slots(VertexId v) const {
    auto it = slots_.find(v);
    return it == slots_.end() ? 0 : it->second;
  }

  // Parity of v's distance to the root of its tree in each forest holding an
  // outgoing edge of v (lowest forest first).
  std::vector<std::uint8_t> parity_vector(VertexId v) const {
    std::uint32_t d = out_slots(v);
    std::vector<std::uint8_t> bits(d);
    for (std::uint32_t i = 0; i < d; ++i)
      bits[i] = std::uint8_t(root_distance(i, v) & 1);
    return bits;
  }

  // Length-prefixed binary encoding of the parity vector, injective across
  // vectors of different lengths.
  std::uint64_t color_code(VertexId v) const {
    std::vector<std::uint8_t> bits = parity_vector(v);
    if (bits.size() > 60)
      throw std::runtime_error("color_code: too many forests to encode");
    std::uint64_t code = 1;
    for (std::uint8_t b : bits) code = (code << 1) | b;
    return code;
  }

  // --- hook interface ------------------------------------------------------

  void batch_flips(const std::vector<DirectedEdge>& flipped,
                   std::vector<DirectedEdge>& inserted,
                   std::vector<DirectedEdge>& deleted) override {
    (void)inserted;
    (void)deleted;
    for (const DirectedEdge& f : flipped) {
      forest_delete(f.from, f.to);
      forest_insert(f.to, f.from);
    }
  }

  void batch_delete(const std::vector<DirectedEdge>& deleted) override {
    for (const DirectedEdge& e : deleted) forest_delete(e.from, e.to);
  }

  void batch_insert(const std::vector<DirectedEdge>& inserted) override {
    for (const DirectedEdge& e : inserted) forest_insert(e.from, e.to);
  }

  // Place the new outgoing edge u->v in the lowest forest where u has none;
  // with slots kept packed that is forest out_slots(u).
  void forest_insert(VertexId u, VertexId v) {
    std::uint32_t slot = out_slots(u);
    if (slot >= parent_.size()) parent_.resize(slot + 1);
    auto [it, fresh] = parent_[slot].emplace(u, v);
    if (!fresh)
      throw std::runtime_error("forest_insert: slot already occupied");
    slots_[u] = slot + 1;
  }

  // Remove u->v, then close the hole by moving u's edge from its highest
  // occupied forest down into the freed slot.
  void forest_delete(VertexId u, VertexId v) {
    std::uint32_t d = out_slots(u);
    std::uint32_t slot = d;
    for (std::uint32_t i = 0; i < d; ++i) {
      auto it = parent_[i].find(u);
      if (it != parent_[i].end() && it->second == v) {
        slot = i;
        break;
      }
    }
    if (slot == d) throw std::runtime_error("forest_delete: edge not present");
    parent_[slot].erase(u);
    std::uint32_t high = d - 1;
    if (high != slot) {
      auto it = parent_[high].find(u);
      parent_[slot].emplace(u, it->second);
      parent_[high].erase(it);
    }
    if (d == 1)
      slots_.erase(u);
    else
      slots_[u] = d - 1;
  }

  // --- validation ----------------------------------------------------------

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
    void fail(std::string msg) {
      if (problems.size() < 64) problems.push_back(std::move(msg));
    }
  };

  Report check(const Orientation& orient) const {
    Report rep;
    // Forest edges, pooled, are exactly the oriented edges.
    std::set<std::pair<VertexId, VertexId>> forest_edges;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      for (const auto& [u, v] : parent_[i])
        if (!forest_edges.emplace(u, v).second)
          rep.fail("edge " + std::to_string(u) + "->" + std::to_string(v) +
                   " appears in two forests");
    std::set<std::pair<VertexId, VertexId>> oriented;
    for (const auto& [e, rev] : orient.directions()) {
      VertexId from = rev ? e.v : e.u;
      VertexId to = rev ? e.u : e.v;
      oriented.emplace(from, to);
    }
    if (forest_edges != oriented)
      rep.fail("forest edge set does not match oriented edge set (" +
               std::to_string(forest_edges.size()) + " vs " +
               std::to_string(oriented.size()) + ")");
    // Slots are packed: vertex v occupies forests [0, out_slots(v)) exactly.
    std::unordered_map<VertexId, std::uint32_t> count;
    for (std::size_t i = 0; i < parent_.size(); ++i)
      for (const auto& [u, v] : parent_[i]) {
        ++count[u];
        if (i >= out_slots(u))
          rep.fail("vertex " + std::to_string(u) + " occupies forest " +
                   std::to_string(i) + " beyond its slot count " +
                   std::to_string(out_slots(u)));
      }
    for (const auto& [u, d] : slots_)
      if (count[u] != d)
        rep.fail("vertex " + std::to_string(u) + " slot count " +
                 std::to_string(d) + " but occupies " +
                 std::to_string(count[u]) + " forests");
    // Each forest is acyclic: parent chains terminate.
    for (std::size_t i = 0; i < parent_.size(); ++i)
      for (const auto& [u, v] : parent_[i]) {
        VertexId cur = u;
        std::size_t steps = 0;
        for (;;) {
          auto it = parent_[i].find(cur);
          if (it == parent_[i].end()) break;
          cur = it->second;
          if (++steps > parent_[i].size()) {
            rep.fail("cycle in forest " + std::to_string(i) + " reachable from " +
                     std::to_string(u));
            break;
          }
        }
      }
    return rep;
  }

 private:
  std::uint64_t root_distance(std::uint32_t forest, VertexId v) const {
    std::uint64_t dist = 0;
    VertexId cur = v;
    for (;;) {
      auto it = parent_[forest].find(cur);
      if (it == parent_[forest].end()) return dist;
      cur = it->second;
      if (++dist > parent_[forest].size() + 1)
        throw std::runtime_error("root_distance: cycle in forest");
    }
  }

  // parent_[i][u] = head of u's outgoing edge stored in forest i.
  std::vector<std::unordered_map<VertexId, VertexId>> parent_;
  std::unordered_map<VertexId, std::uint32_t> slots_;
};

}  // namespace bdg
