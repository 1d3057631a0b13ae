#pragma once

// Small shared utilities: counter-based hashing for reproducible random draws,
// exact integer logarithm helpers for geometric thresholds, a join/split pair
// for the CSV outputs, and a minimal thread-pool-free parallel_for used by
// order-independent bulk loops.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace bdg {

// Counter-based mixing function (splitmix64 finalizer). Feeding (seed, a, b)
// through it gives an independent, reproducible 64-bit draw for any logical
// stream without carrying generator state around.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_draw(uint64_t seed, uint64_t a, uint64_t b = 0) {
  return mix64(mix64(mix64(seed) ^ a) ^ b);
}

// Smallest integer g >= 0 with base^g >= x, for base > 1 and x >= 1.
// Computed by repeated multiplication so results do not depend on libm
// rounding of log().
inline uint32_t ceil_log_base(double x, double base) {
  uint32_t g = 0;
  double p = 1.0;
  while (p < x) {
    p *= base;
    ++g;
  }
  return g;
}

// Runs fn(i) for i in [0, n) across up to num_threads workers. Intended only
// for order-independent loops (checks, per-vertex readouts); all algorithmic
// state updates in this library are sequential by design.
inline void parallel_for(std::size_t n, unsigned num_threads,
                         const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (num_threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(num_threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

}  // namespace bdg
