#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gdstream/compare.hpp"
#include "gdstream/dataset.hpp"
#include "gdstream/descriptor.hpp"
#include "gdstream/errors.hpp"
#include "gdstream/gabe.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/maeve.hpp"
#include "gdstream/math.hpp"
#include "gdstream/oracle.hpp"
#include "gdstream/parallel.hpp"

namespace gdstream {

// Budget as an absolute edge count or as a fraction of each graph's |E|.
struct BudgetSpec {
  enum class Kind { absolute, fraction };
  Kind kind = Kind::fraction;
  double value = 1.0;

  static BudgetSpec absolute(std::size_t edges) { return {Kind::absolute, static_cast<double>(edges)}; }
  static BudgetSpec fraction(double f) { return {Kind::fraction, f}; }

  // ceil(f * m) for fractions, clamped below at 1.
  std::size_t resolve(std::size_t m) const {
    if (kind == Kind::absolute) return static_cast<std::size_t>(value);
    const double b = std::ceil(value * static_cast<double>(m) - 1e-9);
    return static_cast<std::size_t>(std::max(1.0, b));
  }
};

inline std::size_t min_budget(Method m) noexcept { return m == Method::gabe ? kGabeMinBudget : kMaeveMinBudget; }

struct DescriptorResult {
  std::optional<Descriptor> descriptor;
  std::string error;
};

// Runs `replicas` independent estimators (seeds seed + i) over one stream and
// averages their streamed estimates before assembling the descriptor.
inline Descriptor estimate_descriptor(const EdgeStream& stream, Method method, std::size_t b,
                                      std::size_t replicas, std::uint64_t seed, std::size_t threads = 1) {
  if (replicas == 0) throw data_error("need at least one replica");
  auto run = [&]<typename Estimator>(std::vector<std::optional<Estimator>>& slots) {
    parallel_for(replicas, threads, [&](std::size_t i) {
      Estimator est(b, seed + i, stream.n_hint);
      est.consume(stream.edges);
      slots[i].emplace(std::move(est));
    });
    std::vector<Estimator> done;
    done.reserve(replicas);
    for (auto& s : slots) done.push_back(std::move(*s));
    return finalize_replicas(std::span<const Estimator>(done));
  };
  if (method == Method::gabe) {
    std::vector<std::optional<GabeEstimator>> slots(replicas);
    return run(slots);
  }
  std::vector<std::optional<MaeveEstimator>> slots(replicas);
  return run(slots);
}

inline Descriptor exact_descriptor(const EdgeStream& stream, Method method,
                                   std::size_t oracle_limit = kDefaultOracleLimit) {
  const Graph g = build_graph(stream);
  if (method == Method::gabe) return exact_gabe_descriptor(g, oracle_limit);
  if (g.n() > oracle_limit) {
    throw size_error("graph has " + std::to_string(g.n()) + " vertices, oracle limit is " +
                     std::to_string(oracle_limit));
  }
  return exact_maeve_descriptor(g);
}

// Descriptors for every graph, in input order, computed on a bounded pool.
// Per-graph failures are recorded, not thrown.
inline std::vector<DescriptorResult> compute_descriptors(const Dataset& ds, Method method, BudgetSpec budget,
                                                         std::size_t replicas, std::uint64_t seed,
                                                         std::size_t threads = 0) {
  if (replicas == 0) throw data_error("need at least one replica");
  std::vector<DescriptorResult> out(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t g) {
    const EdgeStream& s = ds.graphs[g];
    const std::size_t b = budget.resolve(s.size());
    try {
      if (b < min_budget(method)) {
        throw budget_error("graph " + std::to_string(g) + ": budget " + std::to_string(b) + " below the " +
                           std::string(to_string(method)) + " minimum of " + std::to_string(min_budget(method)));
      }
      Descriptor d = estimate_descriptor(s, method, b, replicas, seed, 1);
      d.meta.graph_id = g;
      out[g].descriptor = std::move(d);
    } catch (const error& e) {
      out[g].error = e.what();
    }
  });
  return out;
}

inline std::vector<DescriptorResult> compute_exact_descriptors(const Dataset& ds, Method method,
                                                               std::size_t oracle_limit = kDefaultOracleLimit,
                                                               std::size_t threads = 0) {
  std::vector<DescriptorResult> out(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t g) {
    try {
      Descriptor d = exact_descriptor(ds.graphs[g], method, oracle_limit);
      d.meta.graph_id = g;
      out[g].descriptor = std::move(d);
    } catch (const error& e) {
      out[g].error = e.what();
    }
  });
  return out;
}

struct ClassificationReport {
  std::vector<double> fold_accuracies;  // repeat-major
  double mean_accuracy = 0.0;
  double stddev = 0.0;
  std::size_t folds = 0;
  std::size_t repeats = 0;
  std::uint64_t seed = 0;
};

// 1-nearest-neighbour under Canberra distance with plain k-fold splits
// repeated over `repeats` seeded shuffles. Ties go to the lowest graph_id.
inline ClassificationReport cross_validate(std::span<const Descriptor> descs, std::span<const std::int64_t> labels,
                                           std::size_t folds, std::size_t repeats, std::uint64_t seed) {
  if (descs.size() != labels.size()) throw data_error("descriptor and label counts differ");
  if (folds < 2) throw data_error("need at least 2 folds");
  if (descs.size() < folds) {
    throw data_error("cannot split " + std::to_string(descs.size()) + " items into " + std::to_string(folds) +
                     " folds");
  }
  if (repeats == 0) throw data_error("need at least one repeat");
  {
    std::vector<std::int64_t> classes(labels.begin(), labels.end());
    std::sort(classes.begin(), classes.end());
    if (std::unique(classes.begin(), classes.end()) - classes.begin() < 2) {
      throw data_error("need at least two classes");
    }
  }

  const std::size_t n = descs.size();
  ClassificationReport report;
  report.folds = folds;
  report.repeats = repeats;
  report.seed = seed;

  // pairwise distances do not depend on the split
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[i * n + j] = dist[j * n + i] = canberra(descs[i], descs[j]);

  std::vector<std::size_t> order(n);
  std::vector<char> is_test(n);
  for (std::size_t r = 0; r < repeats; ++r) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(derive_seed(seed, r));
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t f = 0; f < folds; ++f) {
      const std::size_t lo = f * n / folds;
      const std::size_t hi = (f + 1) * n / folds;
      std::fill(is_test.begin(), is_test.end(), 0);
      for (std::size_t k = lo; k < hi; ++k) is_test[order[k]] = 1;
      std::size_t correct = 0;
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t q = order[k];
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
          if (is_test[j]) continue;
          const double d = dist[q * n + j];
          if (d < best_d || (d == best_d && best < n && descs[j].meta.graph_id < descs[best].meta.graph_id)) {
            best = j;
            best_d = d;
          }
        }
        if (best < n && labels[best] == labels[q]) ++correct;
      }
      report.fold_accuracies.push_back(static_cast<double>(correct) / static_cast<double>(hi - lo));
    }
  }
  const auto k = static_cast<double>(report.fold_accuracies.size());
  report.mean_accuracy = std::accumulate(report.fold_accuracies.begin(), report.fold_accuracies.end(), 0.0) / k;
  double ss = 0.0;
  for (double a : report.fold_accuracies) ss += (a - report.mean_accuracy) * (a - report.mean_accuracy);
  report.stddev = std::sqrt(ss / k);
  return report;
}

struct BudgetErrorRow {
  double budget_fraction = 0.0;
  double mean_error = 0.0;
  std::size_t samples = 0;
};

// Mean Canberra distance between estimated and exact descriptors for each
// budget fraction, over every graph and trial.
inline std::vector<BudgetErrorRow> error_vs_budget(const Dataset& ds, Method method, std::span<const double> budgets,
                                                   std::size_t trials, std::uint64_t seed, std::size_t replicas = 1,
                                                   std::size_t threads = 0,
                                                   std::size_t oracle_limit = kDefaultOracleLimit) {
  if (trials == 0) throw data_error("need at least one trial");
  std::vector<Descriptor> exact(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t g) { exact[g] = exact_descriptor(ds.graphs[g], method, oracle_limit); });

  std::vector<BudgetErrorRow> rows;
  std::vector<double> errors(ds.size() * trials);
  for (double fraction : budgets) {
    const BudgetSpec spec = BudgetSpec::fraction(fraction);
    parallel_for(errors.size(), threads, [&](std::size_t task) {
      const std::size_t g = task / trials;
      const std::size_t trial = task % trials;
      const EdgeStream& s = ds.graphs[g];
      const std::size_t b = spec.resolve(s.size());
      if (b < min_budget(method)) {
        throw budget_error("graph " + std::to_string(g) + ": budget fraction " + detail::format_double(spec.value) +
                           " gives " + std::to_string(b) + " edges, below the " + std::string(to_string(method)) +
                           " minimum");
      }
      const Descriptor est = estimate_descriptor(s, method, b, replicas, derive_seed(seed, g, trial), 1);
      errors[task] = canberra(est, exact[g]);
    });
    BudgetErrorRow row{fraction, 0.0, errors.size()};
    for (double e : errors) row.mean_error += e;
    if (!errors.empty()) row.mean_error /= static_cast<double>(errors.size());
    rows.push_back(row);
  }
  return rows;
}

inline void write_error_table(std::ostream& out, Method method, std::span<const BudgetErrorRow> rows) {
  out << "method,budget_fraction,mean_error,samples\n";
  for (const auto& r : rows)
    out << to_string(method) << ',' << detail::format_double(r.budget_fraction) << ','
        << detail::format_double(r.mean_error) << ',' << r.samples << '\n';
}

}  // namespace gdstream
