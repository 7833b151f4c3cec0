#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlr/core.hpp"
#include "mlr/gaussmath.hpp"

namespace mlr::losses {

// Gaussian head output: per-class mean and variance of the predicted
// significance distribution.
struct GaussianPrediction {
  std::vector<double> mu;
  std::vector<double> var;  // entries > 0
};

// Plain per-class score head (LSEP) or per-head logits (CRPC).
struct ScorePrediction {
  std::vector<double> scores;
};

// Loss value plus its gradient with respect to the head outputs.
// Gradient layout matches the prediction: for the Gaussian loss the first
// K entries are d/d mu and the next K are d/d var; otherwise it is one
// entry per score/logit.
struct LossResult {
  double value = 0.0;
  std::vector<double> grad;
};

// Number of pairwise heads for K classes, and the lexicographic index of
// the unordered pair {u, v} with u < v among them.
inline int num_pair_heads(int k) { return k * (k - 1) / 2; }
inline int pair_head_index(int u, int v, int k) {
  return u * k - u * (u + 1) / 2 + (v - u - 1);
}

// Negative log of the joint Gaussian significance likelihood: per-class
// sign terms (Q for positives, 1-Q for negatives) plus -log Q over the
// difference distribution of every ordered pair under `mode`.
LossResult unimlr_loss(const GaussianPrediction& pred,
                       const LabelRanking& truth, PairMode mode);

// log(1 + sum over pairs of exp(s_v - s_u)), evaluated via a shifted
// log-sum-exp so large score gaps cannot overflow.
LossResult lsep_loss(const ScorePrediction& pred, const LabelRanking& truth,
                     PairMode mode);

// Per-head binary targets for calibrated pairwise ranking.
// pair[i] is the target for unordered pair i (head order per
// pair_head_index): 1 if the lower-id class wins, 0 if it loses,
// -1 when the pair is tied/uncomparable (no gradient). calib[j] is 1 iff
// class j is positive.
struct CrpcTargets {
  std::vector<int8_t> pair;
  std::vector<int8_t> calib;
};

CrpcTargets crpc_targets(const LabelRanking& truth, PairMode mode);

// Sigmoid cross-entropy over the K(K-1)/2 pair heads plus K calibration
// heads; absent pair targets contribute neither value nor gradient.
// Logit layout: pair heads first, then calibration heads.
LossResult crpc_loss(const ScorePrediction& logits, const LabelRanking& truth,
                     PairMode mode);

// Soft Borda aggregation of head probabilities. score_j sums p(j beats v)
// over the other classes plus the calibration probability; the virtual
// label's soft vote count is sum_j (1 - calib[j]) and predicted positives
// are the classes whose score strictly exceeds it.
struct CrpcAggregate {
  ScorePrediction scores;
  double virtual_vote = 0.0;
  std::vector<int> positives;
};

CrpcAggregate crpc_aggregate(std::span<const double> pair_probs,
                             std::span<const double> calib_probs);

}  // namespace mlr::losses
