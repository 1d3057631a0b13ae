#include <algorithm>
#include <set>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/orientation.hpp"
#include "bdg/plds.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bdg;

namespace {

struct OrientDriver {
  Plds plds;
  Graph g;
  Orientation orient;
  explicit OrientDriver(PldsParams p) : plds(p), g(p.capacity_n) {}
  OrientDriver(Plds p, Graph gr) : plds(std::move(p)), g(std::move(gr)) {
    orient.rebuild(g, plds);
  }

  Orientation::BatchResult step(const std::vector<RawOp>& ops) {
    UpdateBatch b = preprocess_batch(g, ops, nullptr);
    std::vector<VertexId> changed = plds.update(b);
    g.apply(b);
    return orient.update(g, plds, changed, b);
  }

  void require_valid() {
    Orientation::Report rep = orient.check(g, plds);
    REQUIRE_MESSAGE(rep.ok(),
                    (rep.problems.empty() ? "?" : rep.problems.front()));
    REQUIRE(orient.equals_rebuilt(g, plds));
    REQUIRE(oracles::orientation_acyclic(orient, g));
  }
};

}  // namespace

TEST_SUITE("orientation") {

TEST_CASE("edges point toward the higher level, ids break ties") {
  fixtures::PldsFigure f = fixtures::insertion_figure();
  Plds plds = Plds::restore(f.params, f.levels, f.edges);
  // Vertex 6 sits at level 2, vertex 0 at level 3.
  CHECK(Orientation::points_from(6, 0, plds));
  CHECK_FALSE(Orientation::points_from(0, 6, plds));
  // Vertices 1 and 4 are level-equal; the lower id points out.
  CHECK(Orientation::points_from(1, 4, plds));
  CHECK_FALSE(Orientation::points_from(4, 1, plds));
}

TEST_CASE("rebuild covers the graph and validates") {
  fixtures::PldsFigure f = fixtures::insertion_figure();
  OrientDriver d(Plds::restore(f.params, f.levels, f.edges),
                 fixtures::graph_of(f));
  CHECK(d.orient.num_edges() == d.g.num_edges());
  d.require_valid();
  for (const Edge& e : d.g.edges()) {
    CHECK(d.orient.tracks(e.u, e.v));
    DirectedEdge dir = d.orient.direction(e.u, e.v);
    CHECK(Orientation::points_from(dir.from, dir.to, d.plds));
    CHECK(d.orient.out_neighbors(dir.from).count(dir.to));
  }
}

TEST_CASE("insertion figure: levels shift, affected edges flip") {
  fixtures::PldsFigure f = fixtures::insertion_figure();
  OrientDriver d(Plds::restore(f.params, f.levels, f.edges),
                 fixtures::graph_of(f));
  std::set<Edge> batch_edges;
  for (const RawOp& op : f.ops) batch_edges.insert(Edge(op.u, op.v));

  Orientation::BatchResult res = d.step(f.ops);
  d.require_valid();

  CHECK(res.deleted.empty());
  CHECK(res.inserted.size() == 3);
  // Inserted edges arrive already pointing by the post-batch order, in batch
  // order.
  for (std::size_t i = 0; i < res.inserted.size(); ++i) {
    const DirectedEdge& e = res.inserted[i];
    CHECK(batch_edges.count(Edge(e.from, e.to)));
    CHECK(Orientation::points_from(e.from, e.to, d.plds));
  }
  // Flips never touch batch edges, and arrive keyed by canonical edge.
  for (const DirectedEdge& e : res.flipped) {
    CHECK_FALSE(batch_edges.count(Edge(e.from, e.to)));
    // The recorded direction is the stale one: now reversed.
    CHECK(Orientation::points_from(e.to, e.from, d.plds));
  }
  bool sorted = std::is_sorted(
      res.flipped.begin(), res.flipped.end(),
      [](const DirectedEdge& a, const DirectedEdge& b) {
        return Edge(a.from, a.to) < Edge(b.from, b.to);
      });
  CHECK(sorted);
  // Vertex 2 overtook vertex 6 (levels 3 vs 2), so that edge must flip.
  bool saw_26 = false;
  for (const DirectedEdge& e : res.flipped)
    if (Edge(e.from, e.to) == Edge(2, 6)) saw_26 = true;
  CHECK(saw_26);
}

TEST_CASE("deletion figure: departing edges report pre-batch directions") {
  fixtures::PldsFigure f = fixtures::deletion_figure();
  OrientDriver d(Plds::restore(f.params, f.levels, f.edges),
                 fixtures::graph_of(f));
  std::vector<DirectedEdge> before;
  for (const RawOp& op : f.ops)
    before.push_back(d.orient.direction(op.u, op.v));

  Orientation::BatchResult res = d.step(f.ops);
  d.require_valid();

  CHECK(res.inserted.empty());
  REQUIRE(res.deleted.size() == before.size());
  for (const DirectedEdge& e : before) {
    bool found = false;
    for (const DirectedEdge& got : res.deleted)
      if (got == e) found = true;
    CHECK(found);
    CHECK_FALSE(d.orient.tracks(e.from, e.to));
  }
}

TEST_CASE("random workloads: validity, acyclicity, rebuild equality") {
  for (WorkloadMode mode :
       {WorkloadMode::kInsert, WorkloadMode::kDelete, WorkloadMode::kMixed}) {
    for (uint64_t seed : {3ull, 4ull}) {
      Graph base = random_graph(80, 0.06, seed);
      Workload w = generate_batches(base, mode, 9, seed);
      PldsParams p;
      p.capacity_n = 80;
      OrientDriver d(p);
      std::vector<RawOp> prime;
      for (const Edge& e : w.start.edges()) prime.push_back({true, e.u, e.v});
      d.step(prime);
      d.require_valid();
      for (const auto& batch : w.batches) {
        std::set<Edge> batch_edges;
        for (const RawOp& op : batch) batch_edges.insert(Edge(op.u, op.v));
        Orientation::BatchResult res = d.step(batch);
        d.require_valid();
        for (const DirectedEdge& e : res.flipped)
          CHECK_FALSE(batch_edges.count(Edge(e.from, e.to)));
      }
    }
  }
}

TEST_CASE("out-degree stays capped below the top level") {
  Graph base = random_graph(80, 0.1, 9);
  PldsParams p;
  p.capacity_n = 80;
  OrientDriver d(p);
  std::vector<RawOp> prime;
  for (const Edge& e : base.edges()) prime.push_back({true, e.u, e.v});
  d.step(prime);
  d.require_valid();
  for (VertexId v = 0; v < 80; ++v) {
    uint32_t lv = d.plds.level(v);
    if (lv + 1 >= d.plds.num_levels()) continue;
    CHECK(double(d.orient.out_degree(v)) <=
          d.plds.threshold_upper(d.plds.group_of_level(lv)) + 1e-9);
  }
}

}  // TEST_SUITE
