//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_VERDICT_H_
#define GPNN_VERDICT_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpnn/interner.h"

namespace gpnn {

enum class Outcome { kDistinguished, kEquivalent };

std::string_view outcome_name(Outcome o);

using Histogram = std::vector<std::pair<Color, std::int64_t>>;

Histogram make_histogram(std::span<const Color> colors);

// Result of a pairwise distinguishability test. `iteration` is the round at
// which the histograms first differed, or the number of rounds until the
// joint coloring was stable.
struct Verdict {
  Outcome outcome = Outcome::kEquivalent;
  int iteration = 0;
  Histogram first;
  Histogram second;

  bool distinguished() const { return outcome == Outcome::kDistinguished; }
  bool equivalent() const { return outcome == Outcome::kEquivalent; }
};

}  // namespace gpnn

#endif  // GPNN_VERDICT_H_
