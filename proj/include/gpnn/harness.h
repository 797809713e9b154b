//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GPNN_HARNESS_H_
#define GPNN_HARNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpnn/coloring.h"
#include "gpnn/graph.h"
#include "gpnn/partition.h"
#include "gpnn/verdict.h"

namespace gpnn {

struct NamedPair {
  std::string name;
  Graph first;
  Graph second;
  std::string note;
};

struct PairSuite {
  std::vector<NamedPair> pairs;

  void add(std::string name, Graph first, Graph second, std::string note = {});
  void append(PairSuite other);
  // Throws std::invalid_argument on duplicate names.
  void validate() const;
};

// Hand-picked pairs: C6/2C3, Shrikhande/rook 4x4, K3,3/prism and friends.
PairSuite named_hard_pairs();
// (G, π(G)) for seeded random graphs and permutations.
PairSuite permuted_pairs(int count, std::uint64_t seed);
// Pairs of independently seeded random d-regular graphs of equal (n, d).
PairSuite random_regular_pairs(int count, std::uint64_t seed);
// Pairs of seeded G(n, p) graphs of equal n.
PairSuite random_gnp_pairs(int count, std::uint64_t seed);
// All pairs of distinct isomorphism classes with 2 <= n <= n_max. With
// `same_degree_sequence`, only pairs with equal (n, m, degree sequence).
PairSuite corpus_pairs(Vertex n_max, bool same_degree_sequence);
// Corpus pairs that 1-WL cannot distinguish.
PairSuite corpus_wl1_equivalent_pairs(Vertex n_max);

struct SuiteOptions {
  std::vector<Scheme> schemes;    // default: all six
  std::vector<Variant> variants;  // default: all three
  int d = 1;
  Vertex fwl2_max_n = 16;
  // 0: GPNN_THREADS if set, else hardware concurrency.
  int threads = 0;
};

struct GpnnCell {
  Scheme scheme;
  Variant variant;
  Outcome outcome;
};

struct PairVerdicts {
  std::string name;
  Vertex n = 0;
  Outcome wl1 = Outcome::kEquivalent;
  std::optional<Outcome> fwl2;  // absent above fwl2_max_n
  std::vector<std::pair<Scheme, bool>> lambda_equivalent;
  std::vector<GpnnCell> gpnn;

  std::optional<Outcome> gpnn_outcome(Scheme s, Variant v) const;
  std::optional<bool> lambda_eq(Scheme s) const;
};

struct Violation {
  std::string check;
  std::string pair;
  std::string detail;
};

struct HierarchyReport {
  std::vector<Scheme> schemes;
  std::vector<Variant> variants;
  int d = 1;
  std::vector<PairVerdicts> rows;  // ascending by pair name
  std::vector<Violation> violations;
};

// Fills the verdict matrix and checks, per pair:
//  trivial-star-equals-1wl   λ⊥-GPNN⋆ agrees with 1-WL
//  variant-monotonicity      Distinguished(⋆) ⇒ (⋄) ⇒ (†)
//  scheme-monotonicity       Core ⇒ CoreDegree and Core ⇒ CoreOnion
//  dagger-below-2fwl         2-FWL Equivalent ⇒ λ⊥-GPNN† Equivalent
//  lower-bound               1-WL Distinguished or not λ-equivalent ⇒ λ-GPNN^δ Distinguished
PairVerdicts evaluate_pair(const NamedPair &pair, const SuiteOptions &options);
void check_pair(const PairVerdicts &row, std::vector<Violation> &out);
HierarchyReport run_suite(const PairSuite &suite, const SuiteOptions &options);

enum class CounterexamplePredicate {
  kPiNotIi,                 // PI ∧ ¬II
  kIiNotGi,                 // II ∧ ¬GI
  kWl1EqTriangleDistinct,   // 1-WL equivalent, Triangle label multisets differ
  kWl1EqFwl2Distinct,       // 1-WL equivalent, 2-FWL distinguishes
};

std::string_view predicate_name(CounterexamplePredicate p);
std::optional<CounterexamplePredicate> parse_predicate(std::string_view name);

// Scans all pairs of distinct classes with n <= n_max; PI/II use `scheme`.
std::vector<std::pair<Graph, Graph>> search_counterexamples(CounterexamplePredicate predicate,
                                                            Vertex n_max, Scheme scheme,
                                                            std::size_t cap = 64);

struct ContainmentCheck {
  std::int64_t pairs = 0;
  std::int64_t gi = 0, ii = 0, pi = 0;
  std::int64_t violations = 0;  // GI ∧ ¬II, or II ∧ ¬PI
};

// GI ⇒ II ⇒ PI over every unordered pair of classes with n <= n_max, plus
// each class against a random relabeling of itself.
ContainmentCheck check_isomorphism_containments(Vertex n_max, Scheme scheme,
                                                std::uint64_t seed);

int harness_threads(int requested);

}  // namespace gpnn

#endif  // GPNN_HARNESS_H_
