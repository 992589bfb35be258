#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "treegf/bigint.hpp"
#include "treegf/errors.hpp"
#include "treegf/ring.hpp"

namespace treegf {

/// Vertex identifier, 1-based and contiguous 1..n in every public interface.
/// Internal containers are 0-based; the offset never leaks.
using VertexId = int;

template <Ring R>
struct WeightedEdge {
  VertexId u;
  VertexId v;
  R weight;
};

/// Immutable tree with per-vertex and per-edge ring weights.  Validation
/// happens once in the constructor; afterwards the object is read-only and
/// safe to share across threads.
template <Ring R>
class WeightedTree {
 public:
  WeightedTree(int n, std::vector<WeightedEdge<R>> edges,
               std::vector<R> vertex_weights)
      : n_(n),
        edges_(std::move(edges)),
        vertex_weights_(std::move(vertex_weights)) {
    validate();
    build_adjacency();
  }

  int order() const { return n_; }
  std::span<const WeightedEdge<R>> edges() const { return edges_; }
  const R& vertex_weight(VertexId v) const {
    check_vertex(v);
    return vertex_weights_[v - 1];
  }
  const R& edge_weight(int edge_index) const {
    return edges_[static_cast<std::size_t>(edge_index)].weight;
  }

  /// Neighbors of v as (neighbor id, edge index) pairs.
  const std::vector<std::pair<VertexId, int>>& neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v - 1];
  }

  int degree(VertexId v) const {
    return static_cast<int>(neighbors(v).size());
  }

  int max_degree() const {
    int d = 0;
    for (VertexId v = 1; v <= n_; ++v)
      d = std::max(d, static_cast<int>(adjacency_[v - 1].size()));
    return d;
  }

  /// Number of edges on a longest path (0 for the single-vertex tree).
  int diameter() const {
    if (n_ == 1) return 0;
    auto [far1, d1] = farthest_from(1);
    auto [far2, d2] = farthest_from(far1);
    (void)far2;
    return d2;
  }

  /// The unique v_i -> v_j path, endpoints included.
  std::vector<VertexId> path_between(VertexId vi, VertexId vj) const {
    check_vertex(vi);
    check_vertex(vj);
    if (vi == vj) throw SameVertex("path endpoints must be distinct");
    std::vector<VertexId> parent(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<VertexId> stack{vi};
    parent[vi] = vi;
    while (!stack.empty()) {
      VertexId cur = stack.back();
      stack.pop_back();
      if (cur == vj) break;
      for (auto [nb, e] : neighbors(cur)) {
        if (parent[nb] == 0) {
          parent[nb] = cur;
          stack.push_back(nb);
        }
      }
    }
    std::vector<VertexId> path;
    for (VertexId cur = vj;; cur = parent[cur]) {
      path.push_back(cur);
      if (cur == vi) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void check_vertex(VertexId v) const {
    if (v < 1 || v > n_)
      throw Error("vertex id " + std::to_string(v) + " out of range 1.." +
                  std::to_string(n_));
  }

 private:
  void validate() const {
    if (n_ < 1) throw NotATree("a tree needs at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1)
      throw NotATree("expected " + std::to_string(n_ - 1) + " edges, got " +
                     std::to_string(edges_.size()));
    if (static_cast<int>(vertex_weights_.size()) != n_)
      throw NotATree("expected " + std::to_string(n_) +
                     " vertex weights, got " +
                     std::to_string(vertex_weights_.size()));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : edges_) {
      if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
        throw NotATree("edge endpoint out of range 1.." + std::to_string(n_));
      if (e.u == e.v) throw NotATree("self-loop at vertex " + std::to_string(e.u));
      auto key = std::minmax(e.u, e.v);
      if (!seen.insert({key.first, key.second}).second)
        throw NotATree("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    // n-1 distinct edges + connectivity <=> spanning tree.
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n_) + 1);
    for (const auto& e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> vis(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<VertexId> stack{1};
    vis[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId cur = stack.back();
      stack.pop_back();
      for (VertexId nb : adj[cur]) {
        if (!vis[nb]) {
          vis[nb] = 1;
          ++count;
          stack.push_back(nb);
        }
      }
    }
    if (count != n_) throw NotATree("graph is disconnected");
  }

  void build_adjacency() {
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      const auto& e = edges_[static_cast<std::size_t>(i)];
      adjacency_[e.u - 1].emplace_back(e.v, i);
      adjacency_[e.v - 1].emplace_back(e.u, i);
    }
  }

  std::pair<VertexId, int> farthest_from(VertexId src) const {
    std::vector<int> dist(static_cast<std::size_t>(n_) + 1, -1);
    std::vector<VertexId> queue{src};
    dist[src] = 0;
    VertexId far = src;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId cur = queue[head];
      if (dist[cur] > dist[far]) far = cur;
      for (auto [nb, e] : neighbors(cur)) {
        if (dist[nb] < 0) {
          dist[nb] = dist[cur] + 1;
          queue.push_back(nb);
        }
      }
    }
    return {far, dist[far]};
  }

  int n_;
  std::vector<WeightedEdge<R>> edges_;
  std::vector<R> vertex_weights_;
  std::vector<std::vector<std::pair<VertexId, int>>> adjacency_;
};

/// Validating constructor in free-function form.
template <Ring R>
WeightedTree<R> build_tree(int n, std::vector<WeightedEdge<R>> edges,
                           std::vector<R> vertex_weights) {
  return WeightedTree<R>(n, std::move(edges), std::move(vertex_weights));
}

/// Rebuilds the same tree shape with weights supplied by callables
/// fv(vertex) and fe(edge index).
template <Ring To, Ring From, typename FV, typename FE>
WeightedTree<To> reweight(const WeightedTree<From>& t, FV&& fv, FE&& fe) {
  std::vector<WeightedEdge<To>> edges;
  edges.reserve(t.edges().size());
  for (int i = 0; i < static_cast<int>(t.edges().size()); ++i) {
    const auto& e = t.edges()[static_cast<std::size_t>(i)];
    edges.push_back({e.u, e.v, fe(i)});
  }
  std::vector<To> vw;
  vw.reserve(static_cast<std::size_t>(t.order()));
  for (VertexId v = 1; v <= t.order(); ++v) vw.push_back(fv(v));
  return WeightedTree<To>(t.order(), std::move(edges), std::move(vw));
}

/// Unit-weighted tree from a bare edge list.
inline WeightedTree<BigInt> unit_tree(
    int n, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
  std::vector<WeightedEdge<BigInt>> edges;
  edges.reserve(edge_pairs.size());
  for (auto [u, v] : edge_pairs) edges.push_back({u, v, BigInt(1)});
  return WeightedTree<BigInt>(n, std::move(edges),
                              std::vector<BigInt>(static_cast<std::size_t>(n),
                                                  BigInt(1)));
}

}  // namespace treegf
