#include <algorithm>
#include <set>
#include <sstream>

#include "bdg/graph.hpp"
#include "doctest.h"

using namespace bdg;

TEST_SUITE("graph") {

TEST_CASE("edges canonicalize and deduplicate") {
  CHECK(Edge(5, 2) == Edge(2, 5));
  CHECK(Edge(2, 5).u == 2);
  Graph g(6);
  CHECK(g.insert_edge(4, 1));
  CHECK_FALSE(g.insert_edge(1, 4));  // already present
  CHECK_FALSE(g.insert_edge(3, 3));  // self-loop
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(1, 4));
  CHECK(g.delete_edge(4, 1));
  CHECK_FALSE(g.delete_edge(4, 1));
  CHECK(g.num_edges() == 0);
}

TEST_CASE("preprocessing keeps the latest op per edge and drops no-ops") {
  Graph g(8);
  g.insert_edge(0, 1);
  g.insert_edge(2, 3);
  std::vector<RawOp> ops = {
      {true, 0, 1},   // no-op: present
      {false, 2, 3},  // delete, later superseded
      {true, 3, 2},   // reinsert same edge: net no-op
      {true, 4, 5},   // effective insert
      {false, 0, 1},  // supersedes the earlier no-op insert: effective delete
      {true, 6, 6},   // self-loop
      {false, 4, 7},  // delete of absent edge
  };
  PreprocessStats stats;
  UpdateBatch b = preprocess_batch(g, ops, &stats);
  REQUIRE(b.insertions.size() == 1);
  CHECK(b.insertions[0].u == 4);
  CHECK(b.insertions[0].v == 5);
  REQUIRE(b.deletions.size() == 1);
  CHECK(b.deletions[0].u == 0);
  CHECK(b.deletions[0].v == 1);
  CHECK(stats.dropped == 5);

  SUBCASE("preprocessing its own output is a no-op") {
    std::vector<RawOp> again;
    for (const auto& e : b.deletions) again.push_back({false, e.u, e.v});
    for (const auto& e : b.insertions) again.push_back({true, e.u, e.v});
    UpdateBatch b2 = preprocess_batch(g, again);
    CHECK(b2.insertions.size() == b.insertions.size());
    CHECK(b2.deletions.size() == b.deletions.size());
  }
}

TEST_CASE("preprocessed batches preserve within-batch arrival order") {
  Graph g(10);
  g.insert_edge(8, 9);
  std::vector<RawOp> ops = {{true, 5, 6}, {false, 8, 9}, {true, 1, 2},
                            {true, 0, 7}};
  UpdateBatch b = preprocess_batch(g, ops);
  REQUIRE(b.insertions.size() == 3);
  CHECK(b.insertions[0].batch_index < b.insertions[1].batch_index);
  CHECK(b.insertions[1].batch_index < b.insertions[2].batch_index);
  CHECK(b.insertions[0].u == 5);
  CHECK(b.insertions[2].u == 0);
}

TEST_CASE("edge list loader compacts ids and honors comments") {
  std::istringstream in(
      "# leading comment\n"
      "100 200\n"
      "200 300  # trailing comment\n"
      "7 7\n"
      "\n"
      "100 300\n");
  std::vector<uint64_t> original;
  Graph g = load_edge_list(in, &original);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  REQUIRE(original.size() == 3);
  CHECK(original[0] == 100);
  CHECK(original[1] == 200);
  CHECK(original[2] == 300);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("batch csv loader") {
  std::istringstream in(
      "op,u,v\n"
      "i,3,4\n"
      "d,4,5\n"
      "# comment\n"
      "i,0,1\n");
  std::vector<RawOp> ops = load_batch_csv(in);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0].is_insert);
  CHECK(ops[0].u == 3);
  CHECK_FALSE(ops[1].is_insert);
  CHECK(ops[1].v == 5);
  CHECK(ops[2].u == 0);
}

TEST_CASE("random graphs are seed-deterministic") {
  Graph a = random_graph(60, 0.1, 7);
  Graph b = random_graph(60, 0.1, 7);
  Graph c = random_graph(60, 0.1, 8);
  auto ea = a.edges(), eb = b.edges(), ec = c.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::sort(ec.begin(), ec.end());
  CHECK(ea == eb);
  CHECK(ea != ec);
}

TEST_CASE("insert workloads cover the base graph exactly") {
  Graph base = random_graph(40, 0.1, 3);
  Workload w = generate_batches(base, WorkloadMode::kInsert, 7, 11);
  CHECK(w.start.num_edges() == 0);
  std::set<Edge> seen;
  std::size_t total = 0;
  for (const auto& batch : w.batches) {
    CHECK(batch.size() <= 7);
    for (const RawOp& op : batch) {
      CHECK(op.is_insert);
      CHECK(seen.insert(Edge(op.u, op.v)).second);
      ++total;
    }
  }
  CHECK(total == base.num_edges());
  for (const Edge& e : base.edges()) CHECK(seen.count(e));
}

TEST_CASE("delete workloads start full and remove everything") {
  Graph base = random_graph(40, 0.1, 3);
  Workload w = generate_batches(base, WorkloadMode::kDelete, 16, 11);
  CHECK(w.start.num_edges() == base.num_edges());
  std::size_t total = 0;
  for (const auto& batch : w.batches)
    for (const RawOp& op : batch) {
      CHECK_FALSE(op.is_insert);
      CHECK(w.start.has_edge(op.u, op.v));
      ++total;
    }
  CHECK(total == base.num_edges());
}

TEST_CASE("mixed workloads hold out insertions and delete live edges") {
  Graph base = random_graph(40, 0.15, 5);
  Workload w = generate_batches(base, WorkloadMode::kMixed, 20, 11);
  REQUIRE(w.batches.size() == 1);
  std::size_t ins = 0, del = 0;
  for (const RawOp& op : w.batches[0]) {
    if (op.is_insert) {
      CHECK_FALSE(w.start.has_edge(op.u, op.v));
      CHECK(base.has_edge(op.u, op.v));
      ++ins;
    } else {
      CHECK(w.start.has_edge(op.u, op.v));
      ++del;
    }
  }
  CHECK(ins == 10);
  CHECK(del == 10);
  CHECK(w.start.num_edges() == base.num_edges() - 10);
}

TEST_CASE("mixed workloads reject underfunded bases") {
  Graph tiny(4);
  tiny.insert_edge(0, 1);
  CHECK_THROWS(generate_batches(tiny, WorkloadMode::kMixed, 20, 1));
  CHECK_THROWS(generate_batches(tiny, WorkloadMode::kMixed, 1, 1));
  CHECK_THROWS(generate_batches(tiny, WorkloadMode::kInsert, 0, 1));
}

TEST_CASE("workloads are seed-deterministic") {
  Graph base = random_graph(30, 0.2, 9);
  Workload a = generate_batches(base, WorkloadMode::kInsert, 5, 42);
  Workload b = generate_batches(base, WorkloadMode::kInsert, 5, 42);
  REQUIRE(a.batches.size() == b.batches.size());
  for (std::size_t i = 0; i < a.batches.size(); ++i) {
    REQUIRE(a.batches[i].size() == b.batches[i].size());
    for (std::size_t j = 0; j < a.batches[i].size(); ++j) {
      CHECK(a.batches[i][j].u == b.batches[i][j].u);
      CHECK(a.batches[i][j].v == b.batches[i][j].v);
    }
  }
}

TEST_CASE("mode parser") {
  CHECK(parse_mode("ins") == WorkloadMode::kInsert);
  CHECK(parse_mode("del") == WorkloadMode::kDelete);
  CHECK(parse_mode("mix") == WorkloadMode::kMixed);
  CHECK_THROWS(parse_mode("bogus"));
}

}  // TEST_SUITE
