#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mlr/core.hpp"

namespace mlr::metrics {

// Tie-aware pair census over all unordered index pairs.
// tied_truth / tied_score count pairs tied on ONE side only; pairs tied on
// both sides go to tied_both. The five counts sum to n(n-1)/2.
struct PairCounts {
  long long concordant = 0;
  long long discordant = 0;
  long long tied_truth = 0;
  long long tied_score = 0;
  long long tied_both = 0;

  long long total() const {
    return concordant + discordant + tied_truth + tied_score + tied_both;
  }
};

PairCounts pair_counts(std::span<const double> truth,
                       std::span<const double> scores);

// Kendall tau-b: (C-D)/sqrt((C+D+T_score)(C+D+T_truth)).
// nullopt when either factor is zero (all-tied side).
std::optional<double> kendall_tau_b(std::span<const double> truth,
                                    std::span<const double> scores);

// Spearman rho: Pearson correlation of mid-ranks (average ranks for ties).
// nullopt when either side has zero rank variance.
std::optional<double> spearman_rho(std::span<const double> truth,
                                   std::span<const double> scores);

// Goodman-Kruskal gamma: (C-D)/(C+D), ties ignored. nullopt when C+D = 0.
std::optional<double> gk_gamma(std::span<const double> truth,
                               std::span<const double> scores);

// Fractional mid-ranks (1-based; ties get the average of their positions).
std::vector<double> mid_ranks(std::span<const double> v);

// Example-based F1 over label-id sets: 2|A∩B| / (|A|+|B|); 1 when both
// sets are empty.
double example_f1(const std::vector<int>& truth_positives,
                  const std::vector<int>& predicted_positives);

// One scored instance: a score per class plus the predicted positive set.
struct ScoredInstance {
  std::vector<double> scores;
  std::vector<int> positives;
};

// Per-dataset aggregation. Means are over instances where the metric is
// defined, scaled x100; instances where a correlation is undefined
// (all-tied) are skipped and counted.
struct MetricReport {
  double tau_b = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double f1 = 0.0;
  int instances = 0;
  int undefined_tau = 0;
  int undefined_rho = 0;
  int undefined_gamma = 0;
  std::vector<std::optional<double>> per_instance_tau;
  std::vector<std::optional<double>> per_instance_rho;
  std::vector<std::optional<double>> per_instance_gamma;
  std::vector<double> per_instance_f1;
};

// Evaluates predictions against ground truth over all K labels per
// instance: truth ranks (negatives at 0) vs. predicted scores.
MetricReport evaluate(std::span<const LabelRanking> truths,
                      const std::function<ScoredInstance(size_t)>& scorer);

}  // namespace mlr::metrics
