#pragma once

// Static core-number computation: an exact peeling routine (the oracle all
// approximation claims are tested against) and a bucketed approximate peeling
// algorithm that rounds degrees to powers of (1+eps) and peels whole buckets
// per round.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "bdg/graph.hpp"
#include "bdg/util.hpp"

namespace bdg {

// Exact coreness by minimum-degree peeling; k(v) is the highest threshold
// active when v is removed. Zero-degree vertices get 0.
inline std::vector<uint32_t> exact_kcore(const Graph& g) {
  std::size_t n = g.num_vertices();
  std::vector<uint32_t> core(n, 0), deg(n, 0);
  std::set<std::pair<uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = uint32_t(g.degree(v));
    queue.insert({deg[v], v});
  }
  std::vector<char> removed(n, 0);
  uint32_t k = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    k = std::max(k, d);
    core[v] = k;
    removed[v] = 1;
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  return core;
}

// Approximate peeling with the tuning knobs exposed: eps controls the bucket
// granularity, delta the per-threshold round budget. Returns per-vertex
// estimates that are powers of (1+eps); zero-degree vertices get 0.
inline std::vector<double> approx_kcore_static_raw(const Graph& g, double eps,
                                                   double delta) {
  std::size_t n = g.num_vertices();
  std::vector<double> est(n, 0.0);
  if (n == 0) return est;
  double base = 1.0 + eps;
  uint32_t max_bucket = ceil_log_base(double(std::max<std::size_t>(n, 2)), base) + 2;
  std::vector<double> pow(max_bucket + 2);
  pow[0] = 1.0;
  for (uint32_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * base;

  std::vector<uint32_t> cdeg(n, 0), bucket_of(n, 0);
  std::vector<char> peeled(n, 0);
  std::map<uint32_t, std::set<VertexId>> buckets;
  for (VertexId v = 0; v < n; ++v) {
    cdeg[v] = uint32_t(g.degree(v));
    if (cdeg[v] == 0) {
      peeled[v] = 1;  // estimate stays 0
      continue;
    }
    bucket_of[v] = ceil_log_base(double(cdeg[v]), base);
    buckets[bucket_of[v]].insert(v);
  }

  uint32_t round_budget =
      std::max<uint32_t>(1, ceil_log_base(double(n), 1.0 + delta));
  std::vector<uint32_t> hits(n, 0);

  std::vector<VertexId> frontier;
  auto extract = [&](uint32_t bkt) {
    frontier.clear();
    auto it = buckets.find(bkt);
    frontier.assign(it->second.begin(), it->second.end());
    buckets.erase(it);
    for (VertexId v : frontier) {
      peeled[v] = 1;
      est[v] = pow[bkt];
    }
  };

  while (!buckets.empty()) {
    uint32_t t = buckets.begin()->first;
    extract(t);
    uint32_t rounds = 0;
    double cutoff = (2.0 + eps) * pow[t];
    uint32_t floor_c = uint32_t(std::ceil(t == 0 ? 1.0 / base : pow[t - 1]));
    while (true) {
      // Account the vertices just peeled to their unpeeled neighbors and
      // re-bucket those by their clamped induced degree.
      std::vector<VertexId> touched;
      for (VertexId v : frontier)
        for (VertexId w : g.neighbors(v)) {
          if (peeled[w]) continue;
          if (hits[w]++ == 0) touched.push_back(w);
        }
      for (VertexId w : touched) {
        uint32_t r = hits[w];
        hits[w] = 0;
        cdeg[w] = std::max(cdeg[w] > r ? cdeg[w] - r : 0u, floor_c);
        uint32_t nb = std::max(ceil_log_base(double(cdeg[w]), base), t);
        if (nb != bucket_of[w]) {
          auto it = buckets.find(bucket_of[w]);
          it->second.erase(w);
          if (it->second.empty()) buckets.erase(it);
          bucket_of[w] = nb;
          buckets[nb].insert(w);
        }
      }
      ++rounds;
      if (buckets.empty()) break;
      uint32_t nb = buckets.begin()->first;
      if (rounds >= round_budget) break;
      if (pow[nb] <= cutoff + 1e-9)
        extract(nb);  // still within the current peeling threshold
      else
        break;
    }
  }
  return est;
}

// Public entry point: derives (eps, delta) from the overall approximation
// target eps_prime, guaranteeing estimates within a (2+eps_prime) factor of
// the exact coreness.
inline std::vector<double> approx_kcore_static(const Graph& g, double eps_prime) {
  double eps = (std::sqrt(4.0 * eps_prime + 9.0) - 3.0) / 2.0;
  double delta = 2.0 / eps;
  return approx_kcore_static_raw(g, eps, delta);
}

// Per-vertex ratio max(est/exact, exact/est) over vertices with exact
// coreness > 0; a zero estimate against a positive exact value is flagged
// rather than averaged.
struct ErrorStats {
  double mean = 0.0;
  double max = 0.0;
  std::size_t compared = 0;
  std::size_t infinite = 0;  // estimate 0 where the exact value is positive
};

inline ErrorStats error_ratio(const std::vector<double>& estimate,
                              const std::vector<uint32_t>& exact) {
  ErrorStats s;
  double sum = 0.0;
  for (std::size_t v = 0; v < exact.size() && v < estimate.size(); ++v) {
    if (exact[v] == 0) continue;
    if (estimate[v] <= 0.0) {
      ++s.infinite;
      continue;
    }
    double r = std::max(estimate[v] / exact[v], exact[v] / estimate[v]);
    sum += r;
    s.max = std::max(s.max, r);
    ++s.compared;
  }
  if (s.compared) s.mean = sum / double(s.compared);
  return s;
}

inline void write_coreness_csv(std::ostream& out,
                               const std::vector<uint32_t>& core) {
  out << "id,coreness\n";
  for (std::size_t v = 0; v < core.size(); ++v)
    out << v << ',' << core[v] << '\n';
}

inline void write_estimates_csv(std::ostream& out,
                                const std::vector<double>& est) {
  out << "id,estimate\n";
  for (std::size_t v = 0; v < est.size(); ++v) out << v << ',' << est[v] << '\n';
}

}  // namespace bdg
