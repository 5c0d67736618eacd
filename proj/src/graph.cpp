#include "helm/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace helm {

Graph::Graph(std::size_t vertex_count,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adjacency_(vertex_count) {
  if (vertex_count == 0) throw std::invalid_argument("graph needs at least one vertex");
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > vertex_count || b > vertex_count)
      throw std::invalid_argument("edge label out of range: (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    auto& na = adjacency_[a - 1];
    if (std::find(na.begin(), na.end(), b - 1) != na.end()) continue;
    na.push_back(b - 1);
    adjacency_[b - 1].push_back(a - 1);
    ++edge_count_;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  if (a < 1 || b < 1 || a > vertex_count() || b > vertex_count()) return false;
  const auto& na = adjacency_[a - 1];
  return std::binary_search(na.begin(), na.end(), b - 1);
}

DisconnectedGraphError::DisconnectedGraphError(std::size_t from_label, std::size_t to_label)
    : std::runtime_error("graph is disconnected: vertex " + std::to_string(to_label) +
                         " is unreachable from vertex " + std::to_string(from_label)),
      from_(from_label),
      to_(to_label) {}

namespace {

void require_order(int n) {
  if (n < 4) throw std::invalid_argument("wheel/helm order must be at least 4, got " + std::to_string(n));
}

std::vector<std::pair<std::size_t, std::size_t>> wheel_edges(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 2; j <= n; ++j) edges.emplace_back(1, j);
  for (std::size_t j = 2; j < n; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(n, 2);
  return edges;
}

}  // namespace

Graph build_wheel(int n) {
  require_order(n);
  const auto order = static_cast<std::size_t>(n);
  return Graph(order, wheel_edges(order));
}

Graph build_helm(int n) {
  require_order(n);
  const auto order = static_cast<std::size_t>(n);
  auto edges = wheel_edges(order);
  for (std::size_t j = 2; j <= order; ++j) edges.emplace_back(j, order + j - 1);
  return Graph(2 * order - 1, edges);
}

IntMatrix bfs_distance_matrix(const Graph& g) {
  const std::size_t m = g.vertex_count();
  IntMatrix out(m, m);
  std::vector<long> dist(m);
  std::queue<std::size_t> frontier;
  for (std::size_t src = 0; src < m; ++src) {
    std::fill(dist.begin(), dist.end(), -1L);
    dist[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const std::size_t x = frontier.front();
      frontier.pop();
      for (std::size_t y : g.neighbors(x)) {
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (dist[t] < 0) throw DisconnectedGraphError(src + 1, t + 1);
      out(src, t) = dist[t];
    }
  }
  return out;
}

}  // namespace helm
