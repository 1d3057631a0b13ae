#pragma once

// Small hand-checked instances shared across the suites.  Every number here
// was worked out by hand against the structure definitions; the tests treat
// them as frozen expectations, so a behavioral change that shifts any of them
// should fail loudly.

#include <utility>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/plds.hpp"

namespace fixtures {

using bdg::Graph;
using bdg::PldsParams;
using bdg::RawOp;
using bdg::VertexId;

struct PldsFigure {
  PldsParams params;
  std::vector<uint32_t> levels;  // levels before the batch
  std::vector<std::pair<VertexId, VertexId>> edges;  // edges before the batch
  std::vector<RawOp> ops;
  std::vector<uint32_t> expected_levels;  // levels after the batch
  std::vector<VertexId> expected_changed;
};

inline Graph graph_of(const PldsFigure& f) {
  Graph g(f.levels.size());
  for (auto [a, b] : f.edges) g.insert_edge(a, b);
  return g;
}

// Eight vertices, growth 0.4, groups of three levels.  Upper bounds are 3 for
// group 0 and 4.2 for group 1.  The three inserted edges push vertex 2 over
// the group-0 bound (it rises 2 -> 3), which in turn pushes vertex 3 over the
// group-1 bound (3 -> 4); nothing else moves.
inline PldsFigure insertion_figure() {
  PldsFigure f;
  f.params.capacity_n = 8;
  f.params.delta = 0.4;
  f.params.lambda = 3.0;
  f.params.group_size_override = 3;
  f.levels = {3, 4, 2, 3, 4, 4, 2, 5};
  f.edges = {{2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 4}, {3, 5},
             {3, 7}, {0, 6}, {1, 7}, {4, 5}, {5, 7}};
  f.ops = {{true, 0, 1}, {true, 0, 3}, {true, 3, 2}};
  f.expected_levels = {3, 4, 3, 4, 4, 4, 2, 5};
  f.expected_changed = {2, 3};
  return f;
}

// Six vertices, growth 1, groups of three levels.  Lower bounds are 1 for
// group 0 and 2 for group 1.  Deleting the two edges starves vertices 0 and 2
// (both fall 4/5 -> 3), which then starves vertex 1 (5 -> 4).  The surviving
// graph is a 4-cycle over {0,1,2,4} plus the pendant edge (3,5), so exact
// coreness of vertex 1 is 2 while its level-derived estimate is 1.
inline PldsFigure deletion_figure() {
  PldsFigure f;
  f.params.capacity_n = 6;
  f.params.delta = 1.0;
  f.params.lambda = 3.0;
  f.params.group_size_override = 3;
  f.levels = {4, 5, 5, 1, 2, 0};
  f.edges = {{0, 2}, {1, 3}, {0, 1}, {1, 2}, {0, 4}, {2, 4}, {3, 5}};
  f.ops = {{false, 0, 2}, {false, 1, 3}};
  f.expected_levels = {3, 4, 3, 1, 2, 0};
  f.expected_changed = {0, 1, 2};
  return f;
}

struct StaticFigure {
  Graph graph;
  double eps = 1.0;    // raw parameters the replay uses
  double delta = 1.0;
  std::vector<double> expected_estimates;
  std::vector<uint32_t> expected_exact;
};

// A 4-clique over {0,3,4,5}, a pendant degree-2 partner for each clique
// vertex ({1,2,6,7}), and two edges pairing the partners up.  With growth
// parameters 1/1 the partners peel at estimate 2 and the clique refines from
// degree 4 to 3 but is extracted early at estimate 4; exact coreness is 2 for
// the partners and 3 for the clique.
inline StaticFigure static_figure() {
  StaticFigure f;
  f.graph = Graph(8);
  for (auto [a, b] : std::vector<std::pair<VertexId, VertexId>>{
           {0, 3}, {0, 4}, {0, 5}, {3, 4}, {3, 5}, {4, 5},
           {0, 1}, {3, 2}, {4, 6}, {5, 7}, {1, 2}, {6, 7}})
    f.graph.insert_edge(a, b);
  f.expected_estimates = {4, 2, 2, 4, 4, 4, 2, 2};
  f.expected_exact = {3, 2, 2, 3, 3, 3, 2, 2};
  return f;
}

}  // namespace fixtures
