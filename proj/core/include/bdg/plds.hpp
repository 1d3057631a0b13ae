#pragma once

// Leveled vertex partition maintaining an approximate core decomposition
// under batches of edge insertions and deletions.
//
// Vertices live on K levels arranged into groups of equal height. Two
// per-group degree thresholds steer rebalancing:
//   upper(i) = (2 + 3/lambda) * (1+delta)^i   (cap on up-degree)
//   lower(i) = (1+delta)^i                    (floor on up*-degree)
// Between batches the structure satisfies, for every vertex v in group i:
//   (1) if level(v) < K-1: up_degree(v) <= upper(group_of(level(v)))
//   (2) if level(v) > 0:   upstar_degree(v) >= lower(group_of(level(v)-1))
// where up_degree counts neighbors at level >= level(v) and upstar_degree
// additionally counts neighbors exactly one level down. A vertex's core
// number can then be read off its level alone, within a constant factor.
//
// All mutation is sequential and deterministic: within a level, vertices are
// handled in ascending id order (or a seeded permutation for the
// order-independence tests).

#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/util.hpp"

namespace bdg {

struct PldsParams {
  std::size_t capacity_n = 1;          // vertex count the level count is rated for
  double delta = 0.4;                  // geometric growth of per-group thresholds
  double lambda = 3.0;                 // slack factor in the upper threshold
  uint32_t levels_per_group_divisor = 1;  // >1 trades accuracy for fewer levels
  uint32_t group_size_override = 0;    // nonzero: force this many levels per group
  uint64_t order_seed = 0;             // nonzero: permute within-level processing order
};

class Plds {
 public:
  explicit Plds(PldsParams params) : params_(params) {
    if (params_.capacity_n == 0) params_.capacity_n = 1;
    if (params_.levels_per_group_divisor == 0) params_.levels_per_group_divisor = 1;
    derive_parameters();
    grow_to(params_.capacity_n);
  }

  // Rebuilds a structure around an existing level assignment; the caller is
  // responsible for the assignment being valid (check_invariants verifies).
  static Plds restore(PldsParams params, const std::vector<uint32_t>& levels,
                      const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Plds p(params);
    p.grow_to(levels.size());
    for (VertexId v = 0; v < levels.size(); ++v) {
      if (levels[v] >= p.K_) throw std::invalid_argument("level out of range");
      p.level_[v] = levels[v];
    }
    for (auto [u, v] : edges) {
      if (u == v || std::max(u, v) >= levels.size())
        throw std::invalid_argument("bad edge in restore");
      p.attach(u, v);
    }
    return p;
  }

  // ---- Parameters and derived quantities ----

  const PldsParams& params() const { return params_; }
  uint32_t num_levels() const { return K_; }
  uint32_t num_groups() const { return num_groups_; }
  uint32_t group_size() const { return gs_; }

  uint32_t group_of_level(uint32_t l) const {
    return std::min(l / gs_, num_groups_ - 1);
  }

  double threshold_upper(uint32_t group) const { return upper_[group]; }
  double threshold_lower(uint32_t group) const { return lower_[group]; }

  // ---- Per-vertex state ----

  std::size_t size() const { return level_.size(); }
  bool alive(VertexId v) const { return v < alive_.size() && alive_[v]; }
  uint32_t level(VertexId v) const { return level_[v]; }
  std::size_t up_degree(VertexId v) const { return up_[v].size(); }

  std::size_t upstar_degree(VertexId v) const {
    std::size_t d = up_[v].size();
    if (level_[v] > 0) d += low_count(v, level_[v] - 1);
    return d;
  }

  std::size_t degree(VertexId v) const { return up_[v].size() + low_size_[v]; }

  // Neighbors as recorded by the partition (equals the graph's adjacency
  // whenever the structure is consistent).
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out(up_[v].begin(), up_[v].end());
    for (const auto& [lev, s] : low_[v]) out.insert(out.end(), s.begin(), s.end());
    return out;
  }

  // Neighbors at level >= level(v).
  const std::unordered_set<VertexId>& up_neighbors(VertexId v) const {
    return up_[v];
  }

  // Vertices whose level changed during the most recent update().
  const std::set<VertexId>& changed_vertices() const { return changed_; }

  // Core estimate read off the level: 0 for isolated vertices, otherwise
  // (1+delta)^e where e counts the whole groups fitting strictly below the
  // vertex's level (clamped at 0).
  double coreness_estimate(VertexId v) const {
    if (degree(v) == 0) return 0.0;
    uint32_t filled = (level_[v] + 1) / gs_;
    uint32_t e = filled > 0 ? filled - 1 : 0;
    return lower_[std::min(e, num_groups_ - 1)];
  }

  // ---- Updates ----

  // Applies one preprocessed batch (distinct edges, insertions absent and
  // deletions present beforehand). Returns the vertices whose level changed,
  // ascending and deduplicated.
  std::vector<VertexId> update(const UpdateBatch& batch) {
    changed_.clear();
    last_deletion_moves_.clear();
    rebalance_insertions(batch.insertions);
    rebalance_deletions(batch.deletions);
    return std::vector<VertexId>(changed_.begin(), changed_.end());
  }

  // Vertex churn: new vertices enter at level 0; deleted vertices shed their
  // incident edges through a deletion batch first. Once enough vertex updates
  // accumulate, the whole structure is rebuilt at a capacity matching the
  // current vertex count.
  void apply_vertex_updates(const std::vector<VertexId>& inserted,
                            const std::vector<VertexId>& deleted) {
    for (VertexId v : inserted) {
      if (alive(v)) throw std::invalid_argument("vertex already present");
      grow_to(std::size_t(v) + 1);
      alive_[v] = 1;
      level_[v] = 0;
    }
    for (VertexId v : deleted)
      if (!alive(v)) throw std::invalid_argument("deleting unknown vertex");
    if (!deleted.empty()) {
      std::set<Edge> incident;
      for (VertexId v : deleted)
        for (VertexId w : neighbors(v)) incident.insert(Edge(v, w));
      UpdateBatch shed;
      uint32_t idx = 0;
      for (const Edge& e : incident) shed.deletions.push_back({e.u, e.v, idx++});
      update(shed);
      for (VertexId v : deleted) {
        assert(degree(v) == 0 && level_[v] == 0);
        alive_[v] = 0;
      }
    }
    vertex_update_count_ += inserted.size() + deleted.size();
    if (vertex_update_count_ * 2 > params_.capacity_n) {
      std::size_t live = 0;
      for (char a : alive_) live += a;
      rebuild(std::max<std::size_t>(2 * live, 16));
      vertex_update_count_ = 0;
    }
  }

  std::size_t rebuild_count() const { return rebuild_count_; }

  // Vertices moved by the deletion rebalance of the last update, in move
  // order (each vertex is expected to appear at most once).
  const std::vector<VertexId>& last_deletion_moves() const {
    return last_deletion_moves_;
  }

  // Target level for a vertex currently violating the lower-bound invariant:
  // the highest level below the current one at which the invariant holds
  // again, or 0 if none. Found by growing a window of candidate levels
  // geometrically, then binary searching inside the first window that
  // contains a satisfying level.
  uint32_t calculate_desire_level(VertexId v) const {
    uint32_t lv = level_[v];
    if (lv == 0) return 0;
    // suffix[t] = number of neighbors at level >= t, for t in [0, lv].
    auto& cnt = scratch_cnt_;
    auto& suffix = scratch_suffix_;
    cnt.assign(lv, 0);
    for (const auto& [lev, s] : low_[v]) cnt[lev] = s.size();
    suffix.assign(lv + 1, up_[v].size());
    for (uint32_t t = lv; t-- > 0;) suffix[t] = suffix[t + 1] + cnt[t];
    // Lower-bound invariant if v sat at `target` (target >= 1).
    auto satisfied = [&](uint32_t target) {
      return meets_lower(suffix[target - 1], group_of_level(target - 1));
    };
    uint32_t p = 1, i = std::min<uint32_t>(2, lv);
    while (lv - p > 0 && !satisfied(lv - p + 1)) {
      if (satisfied(lv - i + 1)) {
        uint32_t lo = lv - i + 1, hi = lv - p;
        while (lo < hi) {
          uint32_t mid = lo + (hi - lo + 1) / 2;
          if (satisfied(mid))
            lo = mid;
          else
            hi = mid - 1;
        }
        // Defensive: the chosen level provably also satisfies the
        // upper-bound invariant; step down if that ever failed to hold.
        while (lo > 0 && above_upper(suffix[lo], group_of_level(lo))) --lo;
        return lo;
      }
      p = i;
      i = std::min(2 * i, lv);
    }
    return 0;
  }

  // ---- Validation and export ----

  struct Report {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
  };

  // Verifies partition consistency (optionally against an external graph)
  // and both quiescent degree invariants. Reports at most `max_problems`
  // findings, in ascending vertex order.
  Report check_invariants(const Graph* expected = nullptr,
                          std::size_t max_problems = 64) const {
    Report r;
    auto complain = [&](VertexId v, const std::string& what) {
      if (r.problems.size() < max_problems)
        r.problems.push_back("v" + std::to_string(v) + ": " + what);
    };
    for (VertexId v = 0; v < level_.size(); ++v) {
      if (!alive_[v]) {
        if (degree(v) != 0) complain(v, "removed vertex still has edges");
        continue;
      }
      uint32_t lv = level_[v];
      std::size_t low_total = 0;
      for (const auto& [lev, s] : low_[v]) {
        if (s.empty()) complain(v, "empty down-set kept at level " + std::to_string(lev));
        low_total += s.size();
        if (lev >= lv) complain(v, "down-set keyed at or above own level");
        for (VertexId w : s) {
          if (level_[w] != lev)
            complain(v, "down-neighbor " + std::to_string(w) + " keyed at wrong level");
          if (!up_[w].count(v))
            complain(v, "down-neighbor " + std::to_string(w) + " lacks the reverse up-entry");
        }
      }
      if (low_total != low_size_[v]) complain(v, "down-degree cache out of sync");
      for (VertexId w : up_[v]) {
        if (level_[w] < lv)
          complain(v, "up-neighbor " + std::to_string(w) + " sits below");
        bool reverse = level_[w] == lv ? up_[w].count(v) > 0
                                       : low_count_has(w, lv, v);
        if (!reverse)
          complain(v, "up-neighbor " + std::to_string(w) + " lacks the reverse entry");
      }
      if (expected) {
        const auto& want = expected->neighbors(v);
        if (want.size() != degree(v))
          complain(v, "degree disagrees with the graph");
        for (VertexId w : want) {
          bool present = level_[w] >= lv ? up_[v].count(w) > 0
                                         : low_count_has(v, level_[w], w);
          if (!present)
            complain(v, "edge to " + std::to_string(w) + " missing from partition");
        }
      }
      if (lv < K_ - 1 && above_upper(up_[v].size(), group_of_level(lv)))
        complain(v, "up-degree " + std::to_string(up_[v].size()) +
                        " exceeds the bound at level " + std::to_string(lv));
      if (lv > 0 && !meets_lower(upstar_degree(v), group_of_level(lv - 1)))
        complain(v, "up*-degree " + std::to_string(upstar_degree(v)) +
                        " below the bound at level " + std::to_string(lv));
    }
    return r;
  }

  // Per-vertex snapshot rows: id,level,estimate.
  void snapshot_csv(std::ostream& out) const {
    out << "id,level,estimate\n";
    for (VertexId v = 0; v < level_.size(); ++v) {
      if (!alive_[v]) continue;
      out << v << ',' << level_[v] << ',' << coreness_estimate(v) << '\n';
    }
  }

 private:
  static constexpr double kThresholdEps = 1e-9;

  void derive_parameters() {
    double base = 1.0 + params_.delta;
    uint32_t log_n = ceil_log_base(double(params_.capacity_n), base);
    uint32_t lpg = std::max<uint32_t>(1, log_n / params_.levels_per_group_divisor);
    gs_ = params_.group_size_override ? params_.group_size_override : 4 * lpg;
    num_groups_ = log_n + 1;
    K_ = gs_ * num_groups_;
    lower_.resize(num_groups_);
    upper_.resize(num_groups_);
    double pow = 1.0, slack = 2.0 + 3.0 / params_.lambda;
    for (uint32_t i = 0; i < num_groups_; ++i, pow *= base) {
      lower_[i] = pow;
      upper_[i] = slack * pow;
    }
  }

  void grow_to(std::size_t n) {
    if (n <= level_.size()) return;
    level_.resize(n, 0);
    up_.resize(n);
    low_.resize(n);
    low_size_.resize(n, 0);
    alive_.resize(n, 1);
  }

  bool above_upper(std::size_t d, uint32_t group) const {
    return double(d) > upper_[group] + kThresholdEps;
  }
  bool meets_lower(std::size_t d, uint32_t group) const {
    return double(d) + kThresholdEps >= lower_[group];
  }

  std::size_t low_count(VertexId v, uint32_t lev) const {
    auto it = low_[v].find(lev);
    return it == low_[v].end() ? 0 : it->second.size();
  }
  bool low_count_has(VertexId v, uint32_t lev, VertexId w) const {
    auto it = low_[v].find(lev);
    return it != low_[v].end() && it->second.count(w) > 0;
  }

  void low_insert(VertexId v, uint32_t lev, VertexId w) {
    if (low_[v][lev].insert(w).second) ++low_size_[v];
  }
  void low_erase(VertexId v, uint32_t lev, VertexId w) {
    auto it = low_[v].find(lev);
    if (it == low_[v].end()) return;
    if (it->second.erase(w)) {
      --low_size_[v];
      if (it->second.empty()) low_[v].erase(it);
    }
  }

  // Files each endpoint into the other's up/down structure by level.
  void attach(VertexId u, VertexId v) {
    grow_to(std::size_t(std::max(u, v)) + 1);
    if (level_[v] >= level_[u])
      up_[u].insert(v);
    else
      low_insert(u, level_[v], v);
    if (level_[u] >= level_[v])
      up_[v].insert(u);
    else
      low_insert(v, level_[u], u);
  }

  void detach(VertexId u, VertexId v) {
    if (level_[v] >= level_[u])
      up_[u].erase(v);
    else
      low_erase(u, level_[v], v);
    if (level_[u] >= level_[v])
      up_[v].erase(u);
    else
      low_erase(v, level_[u], u);
  }

  void record_changed(VertexId v) { changed_.insert(v); }

  // Within-level processing order: ascending id, or a seeded permutation.
  void order_vertices(std::vector<VertexId>& vs) const {
    if (params_.order_seed == 0) {
      std::sort(vs.begin(), vs.end());
      return;
    }
    std::sort(vs.begin(), vs.end(), [this](VertexId a, VertexId b) {
      uint64_t ka = hash_draw(params_.order_seed, a);
      uint64_t kb = hash_draw(params_.order_seed, b);
      return ka != kb ? ka < kb : a < b;
    });
  }

  // Upward pass: vertices whose up-degree exceeds the cap climb one level at
  // a time, cohort by cohort, until the cap holds everywhere again.
  void rebalance_insertions(const std::vector<EdgeUpdate>& ins) {
    if (ins.empty()) return;
    for (const auto& e : ins) attach(e.u, e.v);
    std::map<uint32_t, std::set<VertexId>> candidates;
    auto consider = [&](VertexId v) {
      uint32_t l = level_[v];
      if (l + 1 >= K_) return;  // top level is exempt from the cap
      if (above_upper(up_[v].size(), group_of_level(l))) candidates[l].insert(v);
    };
    for (const auto& e : ins) {
      consider(e.u);
      consider(e.v);
    }
    while (!candidates.empty()) {
      auto it = candidates.begin();
      uint32_t l = it->first;
      std::vector<VertexId> pool(it->second.begin(), it->second.end());
      candidates.erase(it);
      std::vector<VertexId> movers;
      for (VertexId v : pool)
        if (level_[v] == l && above_upper(up_[v].size(), group_of_level(l)))
          movers.push_back(v);
      if (movers.empty()) continue;
      order_vertices(movers);
      std::unordered_set<VertexId> mover_set(movers.begin(), movers.end());
      for (VertexId v : movers) {
        level_[v] = l + 1;
        record_changed(v);
      }
      std::set<VertexId> gained;  // residents of l+1 that gained an up-neighbor
      for (VertexId v : movers) {
        std::vector<VertexId> ups(up_[v].begin(), up_[v].end());
        for (VertexId w : ups) {
          if (mover_set.count(w)) continue;  // co-mover: still level-equal
          uint32_t lw = level_[w];
          if (lw == l) {  // w stayed behind, now one below v
            up_[v].erase(w);
            low_insert(v, l, w);
          } else if (lw == l + 1) {  // w now level-equal with v
            low_erase(w, l, v);
            up_[w].insert(v);
            gained.insert(w);
          } else {  // w still above; re-key v's entry
            low_erase(w, l, v);
            low_insert(w, l + 1, v);
          }
        }
      }
      if (l + 2 < K_) {
        for (VertexId v : movers)
          if (above_upper(up_[v].size(), group_of_level(l + 1)))
            candidates[l + 1].insert(v);
        for (VertexId w : gained)
          if (above_upper(up_[w].size(), group_of_level(l + 1)))
            candidates[l + 1].insert(w);
      }
    }
  }

  // Downward pass: vertices whose up*-degree fell below the floor move, in
  // one step, to the level computed by calculate_desire_level; neighbors that
  // lose support get (re)scheduled with a fresh target level.
  void rebalance_deletions(const std::vector<EdgeUpdate>& dels) {
    if (dels.empty()) return;
    for (const auto& e : dels) detach(e.u, e.v);
    desire_tracker_.clear();
    desired_.clear();
    std::vector<VertexId> seeds;
    for (const auto& e : dels) {
      seeds.push_back(e.u);
      seeds.push_back(e.v);
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (VertexId v : seeds) schedule(v);
    while (!desire_tracker_.empty()) {
      auto it = desire_tracker_.begin();
      uint32_t l = it->first;
      VertexId v = pop_scheduled(it->second);
      if (it->second.empty()) desire_tracker_.erase(it);
      desired_.erase(v);
      uint32_t pv = level_[v];
      if (pv <= l) continue;  // stale entry; nothing to do
      move_down(v, l, pv);
    }
  }

  VertexId pop_scheduled(std::set<VertexId>& s) {
    auto pick = s.begin();
    if (params_.order_seed != 0) {
      uint64_t best = ~0ULL;
      for (auto jt = s.begin(); jt != s.end(); ++jt) {
        uint64_t k = hash_draw(params_.order_seed, *jt);
        if (k < best) {
          best = k;
          pick = jt;
        }
      }
    }
    VertexId v = *pick;
    s.erase(pick);
    return v;
  }

  // (Re)computes v's pending move. Non-violating vertices get any stale
  // pending entry dropped; violating ones get their target level refreshed.
  void schedule(VertexId v) {
    uint32_t lv = level_[v];
    bool violating =
        lv > 0 && !meets_lower(upstar_degree(v), group_of_level(lv - 1));
    auto old = desired_.find(v);
    if (!violating) {
      if (old != desired_.end()) {
        drop_tracked(old->second, v);
        desired_.erase(old);
      }
      return;
    }
    uint32_t dl = calculate_desire_level(v);
    assert(dl < lv);
    if (old != desired_.end()) {
      if (old->second == dl) return;
      drop_tracked(old->second, v);
      old->second = dl;
    } else {
      desired_[v] = dl;
    }
    desire_tracker_[dl].insert(v);
  }

  void drop_tracked(uint32_t lev, VertexId v) {
    auto it = desire_tracker_.find(lev);
    if (it == desire_tracker_.end()) return;
    it->second.erase(v);
    if (it->second.empty()) desire_tracker_.erase(it);
  }

  void move_down(VertexId v, uint32_t l, uint32_t pv) {
    // Snapshot the neighbors at level >= l: everything in up_[v] plus the
    // down-sets keyed in [l, pv). Neighbors below l keep their entries.
    std::vector<VertexId> snap(up_[v].begin(), up_[v].end());
    for (auto it = low_[v].lower_bound(l); it != low_[v].end(); ++it)
      snap.insert(snap.end(), it->second.begin(), it->second.end());
    level_[v] = l;
    record_changed(v);
    last_deletion_moves_.push_back(v);
    std::set<VertexId> recheck;
    for (VertexId w : snap) {
      uint32_t lw = level_[w];
      if (lw == l) {  // now level-equal: mutual up-entries
        low_erase(v, l, w);
        up_[v].insert(w);
        up_[w].insert(v);
      } else {  // w remains above v's new level
        if (pv > lw) {
          up_[w].erase(v);
          low_erase(v, lw, w);
        } else if (pv == lw) {
          up_[w].erase(v);
        } else {
          low_erase(w, pv, v);
        }
        low_insert(w, l, v);
        up_[v].insert(w);
        recheck.insert(w);
      }
    }
    for (VertexId w : recheck) schedule(w);
  }

  // Re-derives parameters for a new rated capacity and replays all current
  // edges from level 0.
  void rebuild(std::size_t new_capacity) {
    std::vector<uint32_t> old_levels = level_;
    // Each edge is collected once, from its lower endpoint's up-set.
    std::vector<EdgeUpdate> edges;
    for (VertexId v = 0; v < level_.size(); ++v)
      for (VertexId w : up_[v])
        if (level_[w] > level_[v] || (level_[w] == level_[v] && v < w))
          edges.push_back({v, w, uint32_t(edges.size())});
    params_.capacity_n = new_capacity;
    derive_parameters();
    for (VertexId v = 0; v < level_.size(); ++v) {
      level_[v] = 0;
      up_[v].clear();
      low_[v].clear();
      low_size_[v] = 0;
    }
    rebalance_insertions(edges);
    for (VertexId v = 0; v < level_.size(); ++v)
      if (level_[v] != old_levels[v]) record_changed(v);
    ++rebuild_count_;
  }

  PldsParams params_;
  uint32_t gs_ = 1, num_groups_ = 1, K_ = 1;
  std::vector<double> lower_, upper_;

  std::vector<uint32_t> level_;
  std::vector<std::unordered_set<VertexId>> up_;
  std::vector<std::map<uint32_t, std::unordered_set<VertexId>>> low_;
  std::vector<std::size_t> low_size_;
  std::vector<char> alive_;

  std::map<uint32_t, std::set<VertexId>> desire_tracker_;
  std::unordered_map<VertexId, uint32_t> desired_;
  std::set<VertexId> changed_;
  std::vector<VertexId> last_deletion_moves_;
  std::size_t vertex_update_count_ = 0;
  std::size_t rebuild_count_ = 0;

  mutable std::vector<std::size_t> scratch_cnt_, scratch_suffix_;
};

}  // namespace bdg
