#include "mlr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mlr::metrics {

PairCounts pair_counts(std::span<const double> truth,
                       std::span<const double> scores) {
  const size_t n = truth.size();
  if (scores.size() != n) throw std::invalid_argument("pair_counts: length mismatch");
  if (n < 2) throw std::invalid_argument("pair_counts: need at least 2 items");
  PairCounts c;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double dt = truth[i] - truth[j];
      const double ds = scores[i] - scores[j];
      if (dt == 0.0 && ds == 0.0) {
        ++c.tied_both;
      } else if (dt == 0.0) {
        ++c.tied_truth;
      } else if (ds == 0.0) {
        ++c.tied_score;
      } else if ((dt > 0.0) == (ds > 0.0)) {
        ++c.concordant;
      } else {
        ++c.discordant;
      }
    }
  }
  return c;
}

std::optional<double> kendall_tau_b(std::span<const double> truth,
                                    std::span<const double> scores) {
  const PairCounts c = pair_counts(truth, scores);
  const double ft = static_cast<double>(c.concordant + c.discordant + c.tied_score);
  const double fs = static_cast<double>(c.concordant + c.discordant + c.tied_truth);
  if (ft == 0.0 || fs == 0.0) return std::nullopt;
  return static_cast<double>(c.concordant - c.discordant) / std::sqrt(ft * fs);
}

std::vector<double> mid_ranks(std::span<const double> v) {
  const size_t n = v.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    // positions i..j (0-based) share the average 1-based rank
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace {

std::optional<double> pearson(const std::vector<double>& a,
                              const std::vector<double>& b) {
  const size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

std::optional<double> spearman_rho(std::span<const double> truth,
                                   std::span<const double> scores) {
  if (scores.size() != truth.size() || truth.size() < 2) {
    throw std::invalid_argument("spearman_rho: bad input lengths");
  }
  return pearson(mid_ranks(truth), mid_ranks(scores));
}

std::optional<double> gk_gamma(std::span<const double> truth,
                               std::span<const double> scores) {
  const PairCounts c = pair_counts(truth, scores);
  const long long cd = c.concordant + c.discordant;
  if (cd == 0) return std::nullopt;
  return static_cast<double>(c.concordant - c.discordant) / static_cast<double>(cd);
}

double example_f1(const std::vector<int>& truth_positives,
                  const std::vector<int>& predicted_positives) {
  if (truth_positives.empty() && predicted_positives.empty()) return 1.0;
  long long inter = 0;
  for (int a : truth_positives) {
    if (std::find(predicted_positives.begin(), predicted_positives.end(), a) !=
        predicted_positives.end()) {
      ++inter;
    }
  }
  return 2.0 * static_cast<double>(inter) /
         static_cast<double>(truth_positives.size() + predicted_positives.size());
}

MetricReport evaluate(std::span<const LabelRanking> truths,
                      const std::function<ScoredInstance(size_t)>& scorer) {
  if (truths.empty()) throw std::invalid_argument("evaluate: empty dataset");
  MetricReport rep;
  rep.instances = static_cast<int>(truths.size());
  double sum_tau = 0.0, sum_rho = 0.0, sum_gamma = 0.0, sum_f1 = 0.0;
  int n_tau = 0, n_rho = 0, n_gamma = 0;
  for (size_t i = 0; i < truths.size(); ++i) {
    const ScoredInstance pred = scorer(i);
    const auto& ranks = truths[i].ranks;
    if (pred.scores.size() != ranks.size()) {
      throw std::invalid_argument("evaluate: score length mismatch");
    }
    std::vector<double> truth_vals(ranks.begin(), ranks.end());
    const auto tau = kendall_tau_b(truth_vals, pred.scores);
    const auto rho = spearman_rho(truth_vals, pred.scores);
    const auto gamma = gk_gamma(truth_vals, pred.scores);
    rep.per_instance_tau.push_back(tau);
    rep.per_instance_rho.push_back(rho);
    rep.per_instance_gamma.push_back(gamma);
    if (tau) {
      sum_tau += *tau;
      ++n_tau;
    } else {
      ++rep.undefined_tau;
    }
    if (rho) {
      sum_rho += *rho;
      ++n_rho;
    } else {
      ++rep.undefined_rho;
    }
    if (gamma) {
      sum_gamma += *gamma;
      ++n_gamma;
    } else {
      ++rep.undefined_gamma;
    }
    const double f1 = example_f1(positives(truths[i]), pred.positives);
    rep.per_instance_f1.push_back(f1);
    sum_f1 += f1;
  }
  rep.tau_b = n_tau > 0 ? 100.0 * sum_tau / n_tau : 0.0;
  rep.rho = n_rho > 0 ? 100.0 * sum_rho / n_rho : 0.0;
  rep.gamma = n_gamma > 0 ? 100.0 * sum_gamma / n_gamma : 0.0;
  rep.f1 = 100.0 * sum_f1 / static_cast<double>(truths.size());
  return rep;
}

}  // namespace mlr::metrics
