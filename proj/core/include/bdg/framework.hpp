#pragma once

// Batch-update driver shared by all dynamic graph problems. One call applies
// a preprocessed batch in a fixed order:
//   1. level structure update (yields the level-changed vertex set),
//   2. graph adjacency update,
//   3. orientation update (yields flipped edges F and the batch as directed
//      edge lists: insertions in the new orientation, deletions in the old),
//   4. problem hooks: batch_flips, then batch_delete, then batch_insert,
//      each exactly once. batch_flips may append to the directed lists the
//      later hooks consume (used by problems that model a flip as a directed
//      delete plus re-insert).

#include <cstddef>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/orientation.hpp"
#include "bdg/plds.hpp"

namespace bdg {

class ProblemHooks {
 public:
  virtual ~ProblemHooks() = default;
  virtual void batch_flips(const std::vector<DirectedEdge>& flipped,
                           std::vector<DirectedEdge>& inserted,
                           std::vector<DirectedEdge>& deleted) {
    (void)flipped;
    (void)inserted;
    (void)deleted;
  }
  virtual void batch_delete(const std::vector<DirectedEdge>& deleted) {
    (void)deleted;
  }
  virtual void batch_insert(const std::vector<DirectedEdge>& inserted) {
    (void)inserted;
  }
};

class Framework {
 public:
  explicit Framework(PldsParams params, ProblemHooks* hook = nullptr)
      : plds_(params), graph_(params.capacity_n), hook_(hook) {}

  void set_hook(ProblemHooks* hook) { hook_ = hook; }

  struct Outcome {
    std::size_t insertions = 0;
    std::size_t deletions = 0;
    std::size_t dropped = 0;   // batch operations removed by preprocessing
    std::size_t changed = 0;   // vertices whose level moved
    std::size_t flips = 0;     // edges reoriented outside the batch
  };

  // Preprocesses a raw operation stream against the current graph, then
  // applies it.
  Outcome apply(const std::vector<RawOp>& ops) {
    PreprocessStats stats;
    UpdateBatch batch = preprocess_batch(graph_, ops, &stats);
    Outcome out = apply(batch);
    out.dropped = stats.dropped;
    return out;
  }

  // Applies an already-preprocessed batch (distinct, effective operations).
  Outcome apply(const UpdateBatch& batch) {
    Outcome out;
    out.insertions = batch.insertions.size();
    out.deletions = batch.deletions.size();
    std::vector<VertexId> changed = plds_.update(batch);
    out.changed = changed.size();
    graph_.apply(batch);
    Orientation::BatchResult oriented =
        orientation_.update(graph_, plds_, changed, batch);
    out.flips = oriented.flipped.size();
    if (hook_) {
      hook_->batch_flips(oriented.flipped, oriented.inserted, oriented.deleted);
      hook_->batch_delete(oriented.deleted);
      hook_->batch_insert(oriented.inserted);
    }
    return out;
  }

  // Feeds an initial graph through the normal pipeline as one insertion
  // batch, so every registered problem starts from a consistent state.
  Outcome prime(const Graph& start) {
    std::vector<RawOp> ops;
    for (const Edge& e : start.edges()) ops.push_back({true, e.u, e.v});
    return apply(ops);
  }

  const Graph& graph() const { return graph_; }
  const Plds& plds() const { return plds_; }
  Plds& plds() { return plds_; }
  const Orientation& orientation() const { return orientation_; }

 private:
  Plds plds_;
  Graph graph_;
  Orientation orientation_;
  ProblemHooks* hook_;
};

}  // namespace bdg
