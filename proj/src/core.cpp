#include "mlr/core.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mlr {

LabelRanking::LabelRanking(std::vector<int> r) : ranks(std::move(r)) {
  for (int v : ranks) {
    if (v < 0) throw std::invalid_argument("LabelRanking: negative rank");
  }
}

std::vector<int> positives(const LabelRanking& ranking) {
  std::vector<int> out;
  for (int j = 0; j < ranking.num_classes(); ++j) {
    if (ranking.ranks[j] > 0) out.push_back(j);
  }
  return out;
}

BucketOrder from_ranks(const LabelRanking& ranking) {
  std::map<int, std::vector<int>> by_rank;  // ascending by key
  for (int j = 0; j < ranking.num_classes(); ++j) {
    const int r = ranking.ranks[j];
    if (r < 0) throw std::invalid_argument("from_ranks: negative rank");
    by_rank[r].push_back(j);
  }
  BucketOrder order;
  order.buckets.reserve(by_rank.size());
  order.bucket_ranks.reserve(by_rank.size());
  for (auto& [rank, classes] : by_rank) {
    order.bucket_ranks.push_back(rank);
    order.buckets.push_back(std::move(classes));
  }
  return order;
}

std::vector<std::pair<int, int>> enumerate_pairs(const BucketOrder& order,
                                                 PairMode mode) {
  std::vector<std::pair<int, int>> pairs;
  if (mode == PairMode::Strong) {
    // every class in a higher bucket beats every class in a lower one
    for (int k = 1; k < order.num_buckets(); ++k) {
      for (int l = 0; l < k; ++l) {
        for (int u : order.buckets[k]) {
          for (int v : order.buckets[l]) pairs.emplace_back(u, v);
        }
      }
    }
  } else {
    // collapse all positive buckets; pairs exist only against rank 0
    std::vector<int> neg;
    std::vector<int> pos;
    for (int k = 0; k < order.num_buckets(); ++k) {
      auto& dst = (order.bucket_ranks[k] == 0) ? neg : pos;
      dst.insert(dst.end(), order.buckets[k].begin(), order.buckets[k].end());
    }
    for (int u : pos) {
      for (int v : neg) pairs.emplace_back(u, v);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<std::pair<int, int>> enumerate_pairs(const LabelRanking& ranking,
                                                 PairMode mode) {
  return enumerate_pairs(from_ranks(ranking), mode);
}

}  // namespace mlr
