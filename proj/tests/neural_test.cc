//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/neural.h"

#include <vector>

#include <gtest/gtest.h>

#include "gpnn/generators.h"
#include "gpnn/graph.h"
#include "gpnn/isomorphism.h"
#include "gpnn/refinement.h"

namespace gpnn {
namespace {

constexpr double kTol = 1e-9;

NeuralConfig small_config(std::uint64_t seed, int k = 16) {
  NeuralConfig c;
  c.f = 6;
  c.layers = 2;
  c.k = k;
  c.seed = seed;
  return c;
}

std::pair<PartitionColoring, PartitionColoring> shared_colorings(const Graph &g, const Graph &h,
                                                                 Scheme s) {
  Interner t;
  const Graph *gs[] = {&g, &h};
  auto c = build_colorings(gs, s, t);
  return {c[0], c[1]};
}

TEST(NeuralTest, InitIsDeterministicWithExpectedShapes) {
  NeuralConfig c = small_config(3);
  c.f = 4;
  const Parameters a = init_params(c);
  const Parameters b = init_params(c);
  ASSERT_EQ(a.slot_weights.size(), 16u);
  for (std::size_t j = 0; j < a.slot_weights.size(); ++j) {
    EXPECT_EQ(a.slot_weights[j].rows(), 8 + 16);
    EXPECT_EQ(a.slot_weights[j].cols(), 4);
    EXPECT_EQ(a.slot_weights[j], b.slot_weights[j]);
    EXPECT_LE(a.slot_weights[j].cwiseAbs().maxCoeff(), 0.5);
  }
  for (int l = 0; l < c.layers; ++l) {
    EXPECT_EQ(a.theta[l].w1, b.theta[l].w1);
    EXPECT_EQ(a.psi[l].w2, b.psi[l].w2);
    EXPECT_EQ(a.epsilon[l], 1.0);
    EXPECT_EQ(a.mu[l], 1.0);
  }
  EXPECT_EQ(a.omega, std::vector<double>(16, 1.0));
  EXPECT_NE(init_params(small_config(4)).theta[0].w1, a.theta[0].w1);
}

TEST(NeuralTest, RejectsBadConfig) {
  NeuralConfig c = small_config(0);
  c.f = 0;
  EXPECT_THROW(init_params(c), std::invalid_argument);
}

TEST(NeuralTest, ColorEmbeddingsAreUnitAndDistinct) {
  const Parameters p = init_params(small_config(1));
  const std::vector<std::int64_t> k1 = {1, 2, 0}, k2 = {1, 3, 0};
  EXPECT_NEAR(p.color_embedding(k1).norm(), 1.0, 1e-12);
  EXPECT_EQ(p.color_embedding(k1), p.color_embedding(k1));
  EXPECT_NE(p.color_embedding(k1), p.color_embedding(k2));
}

TEST(NeuralTest, TooManyPartitionsIsAnError) {
  const Graph g = path_graph(5);
  Interner t;
  const auto c = build_coloring(g, partition(g, Scheme::kCoreOnion), t);
  const Parameters p = init_params(small_config(0, 1));
  EXPECT_THROW(forward(g, c, Variant::kStar, p), std::invalid_argument);
}

TEST(NeuralTest, VertexTransitiveGraphHasEqualRows) {
  const Graph c6 = cycle_graph(6);
  const Parameters p = init_params(small_config(5));
  Interner t;
  const auto c = build_coloring(c6, partition(c6, Scheme::kTrivial), t);
  for (Variant v : all_variants()) {
    const NeuralOutput out = forward(c6, c, v, p);
    for (Vertex u = 1; u < 6; ++u)
      EXPECT_LE(relative_deviation(out.vertex.row(0), out.vertex.row(u)), kTol);
    EXPECT_EQ(out.graph.size(), p.config.f + 1);
    EXPECT_EQ(out.graph[p.config.f], 1.0);
  }
}

TEST(NeuralTest, EquivarianceAndInvariance) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = gnp(14, 0.25, seed);
    const Permutation pi = random_permutation(14, seed + 31);
    const Graph h = apply_permutation(g, pi);
    const Parameters p = init_params(small_config(seed));
    for (Scheme s : all_schemes()) {
      const auto [cg, ch] = shared_colorings(g, h, s);
      for (Variant v : all_variants()) {
        const NeuralOutput a = forward(g, cg, v, p);
        const NeuralOutput b = forward(h, ch, v, p);
        Eigen::MatrixXd pulled(a.vertex.rows(), a.vertex.cols());
        for (Vertex u = 0; u < 14; ++u)
          pulled.row(u) = b.vertex.row(pi(u));
        EXPECT_LE(relative_deviation(a.vertex, pulled), kTol);
        EXPECT_LE(relative_deviation(a.graph, b.graph), kTol);
      }
    }
  }
}

TEST(NeuralTest, IsomorphicInputsViaWitness) {
  const Graph g = random_regular(12, 3, 8);
  const Graph h = apply_permutation(g, random_permutation(12, 77));
  const IsoResult r = are_isomorphic(g, h);
  ASSERT_TRUE(r.isomorphic);
  const Parameters p = init_params(small_config(2));
  const auto [cg, ch] = shared_colorings(g, h, Scheme::kCoreOnion);
  for (Variant v : all_variants()) {
    const NeuralOutput a = forward(g, cg, v, p);
    const NeuralOutput b = forward(h, ch, v, p);
    EXPECT_LE(relative_deviation(a.graph, b.graph), kTol);
    for (Vertex u = 0; u < 12; ++u)
      EXPECT_LE(relative_deviation(a.vertex.row(u), b.vertex.row((*r.witness)(u))), kTol);
  }
}

TEST(NeuralTest, GinPluginWidensOutput) {
  NeuralConfig c = small_config(9);
  c.gnn_plugin = true;
  const Parameters p = init_params(c);
  const Graph g = gnp(10, 0.3, 1);
  Interner t;
  const auto col = build_coloring(g, partition(g, Scheme::kDegree), t);
  const NeuralOutput out = forward(g, col, Variant::kDiamond, p);
  EXPECT_EQ(out.vertex.cols(), 2 * c.f);
  EXPECT_EQ(out.graph.size(), 2 * c.f + 1);
  EXPECT_EQ(out.graph[2 * c.f], connected_components(g).count);
}

TEST(NeuralTest, NumericFactorsThroughDiscreteColors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gnp(16, 0.2, seed);
    for (Scheme s : all_schemes())
      for (Variant v : all_variants()) {
        NeuralConfig nc = small_config(seed);
        const Parameters p = init_params(nc);
        Interner t;
        const auto col = build_coloring(g, partition(g, s), t);
        GpnnConfig gc;
        gc.scheme = s;
        gc.variant = v;
        RefinementState st = init_state(g, col, gc, t);
        for (int l = 0; l < nc.layers; ++l)
          gpnn_step(st, g, col, gc, t);
        const NeuralOutput out = forward(g, col, v, p);
        for (Vertex a = 0; a < 16; ++a)
          for (Vertex b = a + 1; b < 16; ++b)
            if (st.gamma[a] == st.gamma[b])
              EXPECT_LE(relative_deviation(out.vertex.row(a), out.vertex.row(b)), kTol);
      }
  }
}

TEST(NeuralTest, EmbeddingsSeparateDifferentColors) {
  const Graph star = star_graph(3);
  Interner t;
  const auto c = build_coloring(star, partition(star, Scheme::kTrivial), t);
  const NeuralOutput out = forward(star, c, Variant::kStar, init_params(small_config(4)));
  EXPECT_GT(out.vertex.row(0).norm(), 0.0);
  EXPECT_GT(relative_deviation(out.vertex.row(0), out.vertex.row(1)), 1e-6);
  EXPECT_LE(relative_deviation(out.vertex.row(1), out.vertex.row(2)), kTol);
}

TEST(NeuralTest, RelativeDeviation) {
  Eigen::MatrixXd a(1, 2), b(1, 2);
  a << 1, 4;
  b << 1, 3;
  EXPECT_DOUBLE_EQ(relative_deviation(a, b), 0.25);
  EXPECT_TRUE(std::isinf(relative_deviation(a, Eigen::MatrixXd(2, 2))));
}

}  // namespace
}  // namespace gpnn
