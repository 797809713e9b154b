//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_INTERNER_H_
#define GPNN_INTERNER_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace gpnn {

using Color = std::int64_t;
using Signature = std::vector<std::int64_t>;

// Deterministic injective encoding of structured color signatures.
//
// One table serves a whole comparison (a graph pair or a corpus run). All
// identifiers come from one counter, so identifiers produced for different
// kinds of signature (vertex labels, pair colors, refinement rounds) never
// collide.
//
// Two entry points:
//  - intern(): stable lookup; equal keys always receive the same identifier.
//  - fresh_batch(): assigns a fresh block of identifiers to one refinement
//    round. Keys are sorted lexicographically and numbered in that order, so
//    the result does not depend on the order graphs were submitted.
//
// Not thread-safe; one table belongs to one comparison.
class Interner {
public:
  Color intern(std::span<const std::int64_t> key);
  Color intern(std::initializer_list<std::int64_t> key) {
    return intern(std::span<const std::int64_t>(key.begin(), key.size()));
  }

  // Returns one identifier per input signature. Equal signatures in the
  // batch receive equal identifiers; identifiers are new to this table.
  std::vector<Color> fresh_batch(std::span<const Signature> signatures);

  // Number of distinct identifiers handed out by the last fresh_batch().
  std::int64_t last_batch_classes() const { return last_batch_classes_; }

  Color next_id() const { return next_; }

private:
  std::map<Signature, Color, std::less<>> table_;
  Color next_ = 0;
  std::int64_t last_batch_classes_ = 0;
};

}  // namespace gpnn

#endif  // GPNN_INTERNER_H_
