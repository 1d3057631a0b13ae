#pragma once

// Batch-update experiment driver shared by the benchmark CLI and the tests.
//
// A RunConfig names an input graph, a workload shape (ins/del/mix + batch
// size), the level-structure knobs, and a problem to maintain.  run_experiment
// streams the workload through the chosen maintenance path and emits one CSV
// row per batch: wall time, coreness-error statistics where applicable, an
// invariant verdict, and one problem-specific metric.  The CSV schema is fixed
// and round-trips through parse_experiment_csv.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <memory>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clique.hpp"
#include "coloring.hpp"
#include "framework.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "orientation.hpp"
#include "plds.hpp"
#include "static_kcore.hpp"
#include "util.hpp"

namespace bdg {

enum class ProblemKind {
  kKcore,
  kOrient,
  kMatching,
  kClique,
  kColorExplicit,
  kColorImplicit,
  kStaticExact,
  kStaticApprox,
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::kKcore;
  uint32_t clique_k = 3;       // for kClique
  double eps_prime = 1.0;      // for kStaticApprox
};

// Accepts "kcore", "orient", "matching", "clique:K", "color-explicit",
// "color-implicit", "static-exact", "static-approx:EPS".
inline ProblemSpec parse_problem(const std::string& s) {
  std::string name = s;
  std::string param;
  if (auto pos = s.find(':'); pos != std::string::npos) {
    name = s.substr(0, pos);
    param = s.substr(pos + 1);
  }
  ProblemSpec spec;
  if (name == "kcore") {
    spec.kind = ProblemKind::kKcore;
  } else if (name == "orient") {
    spec.kind = ProblemKind::kOrient;
  } else if (name == "matching") {
    spec.kind = ProblemKind::kMatching;
  } else if (name == "clique") {
    spec.kind = ProblemKind::kClique;
    if (!param.empty()) spec.clique_k = uint32_t(std::stoul(param));
    if (spec.clique_k < 3)
      throw std::runtime_error("clique size must be at least 3");
  } else if (name == "color-explicit") {
    spec.kind = ProblemKind::kColorExplicit;
  } else if (name == "color-implicit") {
    spec.kind = ProblemKind::kColorImplicit;
  } else if (name == "static-exact") {
    spec.kind = ProblemKind::kStaticExact;
  } else if (name == "static-approx") {
    spec.kind = ProblemKind::kStaticApprox;
    if (!param.empty()) spec.eps_prime = std::stod(param);
    if (spec.eps_prime <= 0)
      throw std::runtime_error("static-approx epsilon must be positive");
  } else {
    throw std::runtime_error("unknown problem: " + s);
  }
  return spec;
}

struct RunConfig {
  std::string input;
  WorkloadMode mode = WorkloadMode::kInsert;
  std::size_t batch_size = 1000;
  double delta = 0.4;
  double lambda = 3.0;
  uint32_t divisor = 1;
  uint32_t threads = 1;
  uint64_t seed = 1;
  std::string problem = "kcore";
  std::string out;  // empty = stdout
};

struct BatchRow {
  uint64_t batch = 0;
  uint64_t ops = 0;       // operations surviving preprocessing
  double millis = 0.0;
  bool has_error = false; // error columns populated (coreness problems only)
  double avg_error = 0.0;
  double max_error = 0.0;
  int invariants_ok = 1;
  std::string extra_name;
  double extra_value = 0.0;

  bool operator==(const BatchRow& o) const {
    return batch == o.batch && ops == o.ops && millis == o.millis &&
           has_error == o.has_error && avg_error == o.avg_error &&
           max_error == o.max_error && invariants_ok == o.invariants_ok &&
           extra_name == o.extra_name && extra_value == o.extra_value;
  }
};

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline const char* kExperimentCsvHeader =
    "batch,ops,millis,avg_error,max_error,invariants_ok,extra_name,extra_value";

inline void write_experiment_csv(std::ostream& out,
                                 const std::vector<BatchRow>& rows) {
  out << kExperimentCsvHeader << '\n';
  for (const BatchRow& r : rows) {
    out << join_csv({std::to_string(r.batch), std::to_string(r.ops),
                     format_double(r.millis),
                     r.has_error ? format_double(r.avg_error) : "",
                     r.has_error ? format_double(r.max_error) : "",
                     std::to_string(r.invariants_ok), r.extra_name,
                     format_double(r.extra_value)})
        << '\n';
  }
}

inline std::vector<BatchRow> parse_experiment_csv(std::istream& in) {
  std::vector<BatchRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == kExperimentCsvHeader) continue;
    }
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8)
      throw std::runtime_error("bad experiment CSV row: " + line);
    BatchRow r;
    r.batch = std::stoull(f[0]);
    r.ops = std::stoull(f[1]);
    r.millis = std::stod(f[2]);
    r.has_error = !f[3].empty();
    if (r.has_error) {
      r.avg_error = std::stod(f[3]);
      r.max_error = std::stod(f[4]);
    }
    r.invariants_ok = std::stoi(f[5]);
    r.extra_name = f[6];
    r.extra_value = std::stod(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

struct ExperimentResult {
  std::vector<BatchRow> rows;
  double total_millis = 0.0;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

// Coreness estimates of every vertex, gathered with the configured thread
// count (per-index writes are independent; the reduction stays serial so the
// output is identical for every thread count).
inline std::vector<double> gather_estimates(const Plds& plds, unsigned threads) {
  std::vector<double> est(plds.size(), 0.0);
  parallel_for(est.size(), threads, [&](std::size_t v) {
    est[v] = plds.alive(VertexId(v)) ? plds.coreness_estimate(VertexId(v)) : 0.0;
  });
  return est;
}

}  // namespace detail

// Streams the workload derived from `base` through the configured maintenance
// path.  Timing covers preprocessing, structure updates, and problem upkeep;
// workload generation, priming, and per-batch measurement are outside it.
inline ExperimentResult run_experiment(const RunConfig& cfg, const Graph& base) {
  ProblemSpec prob = parse_problem(cfg.problem);
  Workload wl = generate_batches(base, cfg.mode, cfg.batch_size, cfg.seed);
  ExperimentResult result;

  // Static problems recompute from scratch per batch on a plain graph.
  if (prob.kind == ProblemKind::kStaticExact ||
      prob.kind == ProblemKind::kStaticApprox) {
    Graph g = wl.start;
    std::vector<uint32_t> exact;
    std::vector<double> approx;
    for (std::size_t i = 0; i < wl.batches.size(); ++i) {
      BatchRow row;
      row.batch = i;
      auto t0 = std::chrono::steady_clock::now();
      PreprocessStats stats;
      UpdateBatch b = preprocess_batch(g, wl.batches[i], &stats);
      g.apply(b);
      if (prob.kind == ProblemKind::kStaticExact) {
        exact = exact_kcore(g);
      } else {
        approx = approx_kcore_static(g, prob.eps_prime);
      }
      row.millis = detail::elapsed_ms(t0);
      row.ops = b.size();
      if (prob.kind == ProblemKind::kStaticExact) {
        row.extra_name = "max_coreness";
        for (uint32_t c : exact) row.extra_value = std::max(row.extra_value, double(c));
      } else {
        exact = exact_kcore(g);
        ErrorStats es = error_ratio(approx, exact);
        row.has_error = true;
        row.avg_error = es.mean;
        row.max_error = es.max;
        row.invariants_ok =
            (es.infinite == 0 && es.max <= 2.0 + prob.eps_prime + 1e-9) ? 1 : 0;
        row.extra_name = "max_estimate";
        for (double e : approx) row.extra_value = std::max(row.extra_value, e);
      }
      result.total_millis += row.millis;
      result.rows.push_back(std::move(row));
    }
    return result;
  }

  // Dynamic problems share the level-structure / orientation pipeline.
  PldsParams params;
  params.capacity_n = std::max<std::size_t>(base.num_vertices(), 1);
  params.delta = cfg.delta;
  params.lambda = cfg.lambda;
  params.levels_per_group_divisor = cfg.divisor;
  Framework fw(params);
  const Framework& cfw = fw;

  std::unique_ptr<MaximalMatching> matching;
  std::unique_ptr<CliqueCounter> clique;
  std::unique_ptr<ExplicitColoring> color_ex;
  std::unique_ptr<ImplicitColoring> color_im;
  switch (prob.kind) {
    case ProblemKind::kMatching:
      matching = std::make_unique<MaximalMatching>(&cfw.orientation());
      fw.set_hook(matching.get());
      break;
    case ProblemKind::kClique:
      clique = std::make_unique<CliqueCounter>(prob.clique_k);
      fw.set_hook(clique.get());
      break;
    case ProblemKind::kColorExplicit:
      color_ex = std::make_unique<ExplicitColoring>(&cfw.plds(), cfg.seed);
      fw.set_hook(color_ex.get());
      break;
    case ProblemKind::kColorImplicit:
      color_im = std::make_unique<ImplicitColoring>();
      fw.set_hook(color_im.get());
      break;
    default:
      break;
  }

  fw.prime(wl.start);

  for (std::size_t i = 0; i < wl.batches.size(); ++i) {
    BatchRow row;
    row.batch = i;
    auto t0 = std::chrono::steady_clock::now();
    Framework::Outcome oc = fw.apply(wl.batches[i]);
    row.millis = detail::elapsed_ms(t0);
    row.ops = oc.insertions + oc.deletions;

    const Graph& g = cfw.graph();
    const Plds& plds = cfw.plds();
    bool ok = plds.check_invariants(&g).ok();
    switch (prob.kind) {
      case ProblemKind::kKcore: {
        std::vector<double> est = detail::gather_estimates(plds, cfg.threads);
        ErrorStats es = error_ratio(est, exact_kcore(g));
        row.has_error = true;
        row.avg_error = es.mean;
        row.max_error = es.max;
        row.extra_name = "max_level";
        for (std::size_t v = 0; v < plds.size(); ++v)
          if (plds.alive(VertexId(v)))
            row.extra_value = std::max(row.extra_value, double(plds.level(VertexId(v))));
        break;
      }
      case ProblemKind::kOrient: {
        ok = ok && cfw.orientation().check(g, plds).ok();
        row.extra_name = "max_out_degree";
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
          row.extra_value =
              std::max(row.extra_value, double(cfw.orientation().out_degree(VertexId(v))));
        break;
      }
      case ProblemKind::kMatching:
        ok = ok && cfw.orientation().check(g, plds).ok() && matching->check(g).ok();
        row.extra_name = "matching_size";
        row.extra_value = double(matching->matching_size());
        break;
      case ProblemKind::kClique:
        ok = ok && cfw.orientation().check(g, plds).ok() && clique->check().ok();
        row.extra_name = "clique_total";
        row.extra_value = double(clique->total());
        break;
      case ProblemKind::kColorExplicit:
        ok = ok && color_ex->check(g).ok();
        row.extra_name = "colors";
        row.extra_value = double(color_ex->distinct_colors());
        break;
      case ProblemKind::kColorImplicit: {
        ok = ok && cfw.orientation().check(g, plds).ok() &&
             color_im->check(cfw.orientation()).ok();
        std::set<uint64_t> codes;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
          if (g.degree(VertexId(v)) > 0) codes.insert(color_im->color_code(VertexId(v)));
        row.extra_name = "colors";
        row.extra_value = double(codes.size());
        break;
      }
      default:
        break;
    }
    row.invariants_ok = ok ? 1 : 0;
    result.total_millis += row.millis;
    result.rows.push_back(std::move(row));
  }
  return result;
}

inline ExperimentResult run_experiment(const RunConfig& cfg) {
  Graph base = load_edge_list_file(cfg.input);
  return run_experiment(cfg, base);
}

}  // namespace bdg
