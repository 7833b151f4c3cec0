#pragma once

#include <utility>
#include <vector>

namespace mlr {

// Training-pair regime. Weak collapses every positive rank to 1 before pair
// extraction, so only positive-vs-negative pairs remain; Strong keeps the
// annotated ranks and therefore also yields ordered positive-positive pairs.
enum class PairMode { Weak, Strong };

// Per-instance ground truth: one nonnegative integer rank per class.
// Rank 0 marks a negative class; any positive value marks a positive class,
// with larger ranks meaning higher relevance. Equal positive ranks are ties.
// Positive ranks need not be contiguous; only the induced order matters.
struct LabelRanking {
  std::vector<int> ranks;

  LabelRanking() = default;
  explicit LabelRanking(std::vector<int> r);

  int num_classes() const { return static_cast<int>(ranks.size()); }
};

// Class ids with rank > 0, ascending.
std::vector<int> positives(const LabelRanking& ranking);

// A bucket order: disjoint groups of class ids, ordered by ascending rank.
// Classes in the same bucket are tied; for u in bucket k and v in bucket l
// with k > l, u is ranked above v. The rank-0 bucket, when nonempty, is
// always the first bucket.
struct BucketOrder {
  std::vector<std::vector<int>> buckets;  // class ids, each bucket sorted
  std::vector<int> bucket_ranks;          // distinct rank values, ascending

  int num_buckets() const { return static_cast<int>(buckets.size()); }
};

// Groups classes by rank value. One bucket per distinct rank present,
// ascending; empty buckets cannot occur since only present ranks are kept.
BucketOrder from_ranks(const LabelRanking& ranking);

// All ordered pairs (u, v) with u ranked strictly above v under the given
// mode, sorted lexicographically by (u, v). Tied classes produce no pair.
// The rank-0 bucket participates as the lowest bucket in both modes.
std::vector<std::pair<int, int>> enumerate_pairs(const BucketOrder& order,
                                                 PairMode mode);

// Convenience: from_ranks + enumerate_pairs.
std::vector<std::pair<int, int>> enumerate_pairs(const LabelRanking& ranking,
                                                 PairMode mode);

}  // namespace mlr
