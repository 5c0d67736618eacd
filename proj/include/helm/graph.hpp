#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "helm/matrix.hpp"

namespace helm {

// Simple undirected graph. Vertex i (0-based) carries the printed label i+1.
class Graph {
 public:
  // Edges are given as 1-based label pairs.
  Graph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  // 1-based labels.
  bool has_edge(std::size_t a, std::size_t b) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::size_t from_label, std::size_t to_label);
  std::size_t from_label() const { return from_; }
  std::size_t to_label() const { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

// Hub = label 1, rim = labels 2..n in cyclic order.
Graph build_wheel(int n);

// Wheel plus pendant n+j-1 attached to rim vertex j, j = 2..n.
Graph build_helm(int n);

// All-pairs shortest path lengths by one BFS per source.
IntMatrix bfs_distance_matrix(const Graph& g);

}  // namespace helm
