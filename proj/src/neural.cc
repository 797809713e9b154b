//
// gpnn-lab - Copyright 2026 The gpnn-lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "gpnn/neural.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "gpnn/partition.h"

namespace gpnn {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Componentwise Neumaier summation.
class CompensatedSum {
public:
  explicit CompensatedSum(Eigen::Index dim)
      : sum_(Eigen::RowVectorXd::Zero(dim)), comp_(Eigen::RowVectorXd::Zero(dim)) {}

  void add(const Eigen::RowVectorXd &x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double t = sum_[i] + x[i];
      if (std::abs(sum_[i]) >= std::abs(x[i]))
        comp_[i] += (sum_[i] - t) + x[i];
      else
        comp_[i] += (x[i] - t) + sum_[i];
      sum_[i] = t;
    }
  }

  Eigen::RowVectorXd value() const { return sum_ + comp_; }

private:
  Eigen::RowVectorXd sum_;
  Eigen::RowVectorXd comp_;
};

Eigen::MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, double s,
                               std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> dist(-s, s);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = dist(rng);
  return m;
}

Mlp make_mlp(int f, double s, std::mt19937_64 &rng) {
  Mlp m;
  m.w1 = uniform_matrix(f, f, s, rng);
  m.b1 = uniform_matrix(1, f, s, rng);
  m.w2 = uniform_matrix(f, f, s, rng);
  m.b2 = uniform_matrix(1, f, s, rng);
  return m;
}

}  // namespace

Eigen::RowVectorXd Mlp::operator()(const Eigen::RowVectorXd &x) const {
  const Eigen::RowVectorXd hidden = (x * w1 + b1).cwiseMax(0.0);
  return hidden * w2 + b2;
}

Eigen::RowVectorXd Parameters::color_embedding(std::span<const std::int64_t> key) const {
  std::uint64_t h = splitmix(config.seed ^ 0x5eedc0105ULL);
  for (std::int64_t x : key)
    h = splitmix(h ^ static_cast<std::uint64_t>(x));
  std::mt19937_64 rng(h);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::RowVectorXd v(config.f);
  for (int i = 0; i < config.f; ++i)
    v[i] = normal(rng);
  return v / v.norm();
}

Parameters init_params(const NeuralConfig &config) {
  if (config.f < 1 || config.layers < 1 || config.k < 1 || config.d < 1)
    throw std::invalid_argument("neural config needs f, layers, k, d >= 1");
  Parameters p;
  p.config = config;
  std::mt19937_64 rng(config.seed);
  const double s = std::sqrt(1.0 / config.f);
  for (int l = 0; l < config.layers; ++l) {
    p.epsilon.push_back(1.0);
    p.mu.push_back(1.0);
    p.theta.push_back(make_mlp(config.f, s, rng));
    p.psi.push_back(make_mlp(config.f, s, rng));
  }
  for (int j = 0; j < config.k; ++j) {
    p.omega.push_back(1.0);
    p.slot_weights.push_back(uniform_matrix(2 * config.f + config.k, config.f, s, rng));
  }
  if (config.gnn_plugin)
    for (int l = 0; l < config.layers; ++l) {
      p.gin_epsilon.push_back(1.0);
      p.gin.push_back(make_mlp(config.f, s, rng));
    }
  return p;
}

NeuralOutput forward(const Graph &g, const PartitionColoring &coloring, Variant variant,
                     const Parameters &params) {
  const NeuralConfig &cfg = params.config;
  const Vertex n = g.num_vertices();
  const int f = cfg.f;

  const auto classes = coloring.labeling.distinct();
  if (static_cast<int>(classes.size()) > cfg.k)
    throw std::invalid_argument("graph has " + std::to_string(classes.size()) +
                                " partitions but only " + std::to_string(cfg.k) + " slots");
  std::vector<int> slot(n);
  for (Vertex v = 0; v < n; ++v)
    slot[v] = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), coloring.label(v)) -
                               classes.begin());

  std::vector<std::vector<Vertex>> hood(n);
  for (Vertex v = 0; v < n; ++v)
    hood[v] = neighborhood_d(g, v, cfg.d, /*include_self=*/true);

  // Tracked pairs, row-wise as in the discrete state.
  const auto pairs = tracked_pairs(g, coloring.labeling, variant);
  std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (auto [v, u] : pairs)
    ++offsets[v + 1];
  for (Vertex v = 0; v < n; ++v)
    offsets[v + 1] += offsets[v];
  auto tracked_index = [&](Vertex v, Vertex u) -> std::int64_t {
    const auto first = pairs.begin() + offsets[v];
    const auto last = pairs.begin() + offsets[v + 1];
    const auto it = std::lower_bound(first, last, Edge{v, u});
    return it != last && *it == Edge{v, u} ? it - pairs.begin() : -1;
  };

  std::map<Signature, Eigen::RowVectorXd> static_cache;
  auto static_embedding = [&](Vertex v, Vertex u) -> const Eigen::RowVectorXd & {
    auto key = pair_color_key(coloring.label(v), coloring.label(u), pair_tag(coloring, g, v, u));
    auto it = static_cache.find(key);
    if (it == static_cache.end()) {
      auto e = params.color_embedding(key);
      it = static_cache.emplace(std::move(key), std::move(e)).first;
    }
    return it->second;
  };

  std::vector<Eigen::RowVectorXd> gamma(n), alpha(pairs.size());
  for (Vertex v = 0; v < n; ++v)
    gamma[v] = params.color_embedding(vertex_color_key(coloring.label(v)));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    alpha[i] = static_embedding(pairs[i].first, pairs[i].second);
  std::vector<Eigen::RowVectorXd> gin = gamma;

  auto interaction = [&](const std::vector<Eigen::RowVectorXd> &a, Vertex v,
                         Vertex u) -> const Eigen::RowVectorXd & {
    if (const auto i = tracked_index(v, u); i >= 0)
      return a[i];
    return static_embedding(v, u);
  };

  std::vector<Eigen::RowVectorXd> beta(n);
  for (int l = 0; l < cfg.layers; ++l) {
    for (Vertex v = 0; v < n; ++v) {
      CompensatedSum acc(f);
      acc.add((1.0 + params.epsilon[l]) * gamma[v]);
      for (Vertex u : g.neighbors(v))
        acc.add(gamma[u]);
      beta[v] = params.theta[l](acc.value());
    }

    std::vector<Eigen::RowVectorXd> next_alpha(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [v, u] = pairs[i];
      CompensatedSum acc(f);
      acc.add((1.0 + params.mu[l]) * alpha[i]);
      for (Vertex w : hood[v])
        acc.add(interaction(alpha, v, w) + interaction(alpha, u, w));
      next_alpha[i] = params.psi[l](acc.value());
    }
    alpha = std::move(next_alpha);

    for (Vertex v = 0; v < n; ++v) {
      std::vector<CompensatedSum> per_slot(classes.size(), CompensatedSum(2 * f + cfg.k));
      for (Vertex u : hood[v]) {
        Eigen::RowVectorXd x = Eigen::RowVectorXd::Zero(2 * f + cfg.k);
        x.head(f) = beta[u];
        x.segment(f, f) = interaction(alpha, v, u);
        x[2 * f + slot[u]] = 1.0;
        per_slot[slot[u]].add(x);
      }
      CompensatedSum acc(f);
      for (std::size_t j = 0; j < classes.size(); ++j)
        acc.add(params.omega[j] * (per_slot[j].value() * params.slot_weights[j]));
      gamma[v] = acc.value();
    }

    if (cfg.gnn_plugin) {
      std::vector<Eigen::RowVectorXd> next(n);
      for (Vertex v = 0; v < n; ++v) {
        CompensatedSum acc(f);
        acc.add((1.0 + params.gin_epsilon[l]) * gin[v]);
        for (Vertex u : g.neighbors(v))
          acc.add(gin[u]);
        next[v] = params.gin[l](acc.value());
      }
      gin = std::move(next);
    }
  }

  const int width = cfg.gnn_plugin ? 2 * f : f;
  NeuralOutput out;
  out.vertex.resize(n, width);
  for (Vertex v = 0; v < n; ++v) {
    if (cfg.gnn_plugin) {
      out.vertex.row(v).head(f) = gin[v];
      out.vertex.row(v).tail(f) = gamma[v];
    } else {
      out.vertex.row(v) = gamma[v];
    }
  }
  CompensatedSum readout(width);
  for (Vertex v = 0; v < n; ++v)
    readout.add(out.vertex.row(v));
  out.graph.resize(width + 1);
  out.graph.head(width) = readout.value();
  out.graph[width] = connected_components(g).count;
  return out;
}

double relative_deviation(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0)
    return 0.0;
  const double scale =
      std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace gpnn
