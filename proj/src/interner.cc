//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/interner.h"

#include <algorithm>
#include <numeric>

namespace gpnn {

Color Interner::intern(std::span<const std::int64_t> key) {
  Signature k(key.begin(), key.end());
  auto [it, inserted] = table_.try_emplace(std::move(k), next_);
  if (inserted)
    ++next_;
  return it->second;
}

std::vector<Color> Interner::fresh_batch(std::span<const Signature> signatures) {
  std::vector<std::size_t> order(signatures.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return signatures[a] < signatures[b];
  });

  std::vector<Color> ids(signatures.size());
  std::int64_t classes = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || signatures[order[i]] != signatures[order[i - 1]])
      ++classes;
    ids[order[i]] = next_ + classes - 1;
  }
  next_ += classes;
  last_batch_classes_ = classes;
  return ids;
}

}  // namespace gpnn
