#include <sstream>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/static_kcore.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bdg;

TEST_SUITE("static_kcore") {

TEST_CASE("exact peeling matches the min-degree-removal oracle") {
  for (uint64_t seed : {21ull, 22ull, 23ull}) {
    Graph g = random_graph(120, 0.06, seed);
    std::vector<uint32_t> lib = exact_kcore(g);
    std::vector<uint32_t> ref = oracles::exact_kcore_oracle(g);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t v = 0; v < lib.size(); ++v) CHECK(lib[v] == ref[v]);
  }
}

TEST_CASE("figure replay: clique refines once, partners peel at two") {
  fixtures::StaticFigure f = fixtures::static_figure();
  std::vector<double> est = approx_kcore_static_raw(f.graph, f.eps, f.delta);
  REQUIRE(est.size() == f.expected_estimates.size());
  for (std::size_t v = 0; v < est.size(); ++v)
    CHECK(est[v] == doctest::Approx(f.expected_estimates[v]));

  std::vector<uint32_t> exact = exact_kcore(f.graph);
  REQUIRE(exact.size() == f.expected_exact.size());
  for (std::size_t v = 0; v < exact.size(); ++v)
    CHECK(exact[v] == f.expected_exact[v]);
}

TEST_CASE("derived parameters honor the approximation target") {
  for (double eps_prime : {0.5, 1.0, 2.0}) {
    for (uint64_t seed : {31ull, 32ull, 33ull}) {
      Graph g = random_graph(200, 0.05, seed);
      std::vector<double> est = approx_kcore_static(g, eps_prime);
      ErrorStats s = error_ratio(est, exact_kcore(g));
      CHECK(s.infinite == 0);
      CHECK(s.max <= 2.0 + eps_prime + 1e-9);
    }
  }
}

TEST_CASE("isolated vertices report a zero estimate") {
  Graph g(4);
  g.insert_edge(0, 1);
  std::vector<double> est = approx_kcore_static(g, 1.0);
  CHECK(est[0] > 0.0);
  CHECK(est[1] > 0.0);
  CHECK(est[2] == 0.0);
  CHECK(est[3] == 0.0);
}

TEST_CASE("error ratio statistics") {
  std::vector<double> est = {2.0, 0.5, 0.0, 3.0};
  std::vector<uint32_t> exact = {1, 1, 2, 0};
  ErrorStats s = error_ratio(est, exact);
  CHECK(s.compared == 2);
  CHECK(s.infinite == 1);
  CHECK(s.mean == doctest::Approx(2.0));
  CHECK(s.max == doctest::Approx(2.0));
}

TEST_CASE("csv writers") {
  std::ostringstream a;
  write_coreness_csv(a, {3, 0, 1});
  CHECK(a.str() == "id,coreness\n0,3\n1,0\n2,1\n");
  std::ostringstream b;
  write_estimates_csv(b, {2.0, 0.0});
  CHECK(b.str() == "id,estimate\n0,2\n1,0\n");
}

}  // TEST_SUITE
